#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "trigroots/report.hpp"

namespace trigroots {

namespace {

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_svg(const std::vector<Complex>& roots, const std::string& caption) {
  const double size = 600, margin = 40;
  double extent = 1.25;
  for (const Complex& z : roots)
    if (std::isfinite(std::abs(z))) extent = std::max(extent, 1.1 * std::abs(z));
  const double scale = (size - 2 * margin) / (2 * extent);
  auto X = [&](double x) { return num(size / 2 + scale * x); };
  auto Y = [&](double y) { return num(size / 2 - scale * y); };

  std::string s;
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(size) + "\" height=\"" + num(size + 30) +
       "\" viewBox=\"0 0 " + num(size) + " " + num(size + 30) + "\">\n";
  s += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  s += "<line x1=\"" + X(-extent) + "\" y1=\"" + Y(0) + "\" x2=\"" + X(extent) + "\" y2=\"" + Y(0) +
       "\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";
  s += "<line x1=\"" + X(0) + "\" y1=\"" + Y(-extent) + "\" x2=\"" + X(0) + "\" y2=\"" + Y(extent) +
       "\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";
  s += "<circle class=\"unit\" cx=\"" + X(0) + "\" cy=\"" + Y(0) + "\" r=\"" + num(scale) +
       "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
  for (const Complex& z : roots) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) continue;
    s += "<circle class=\"root\" cx=\"" + X(z.real()) + "\" cy=\"" + Y(z.imag()) +
         "\" r=\"3\" fill=\"#c0392b\"/>\n";
  }
  s += "<text x=\"" + num(size / 2) + "\" y=\"" + num(size + 15) +
       "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"16\">" + escape(caption) + "</text>\n";
  s += "</svg>\n";
  return s;
}

}  // namespace trigroots
