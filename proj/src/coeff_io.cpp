#include "trigroots/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "trigroots/errors.hpp"

namespace trigroots {

using nlohmann::json;

namespace {

double finite_number(const json& v, const char* what) {
  if (!v.is_number()) throw IoError(std::string("coefficient file: ") + what + " is not a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw IoError(std::string("coefficient file: ") + what + " is not finite");
  return x;
}

Polynomial from_dense(const json& list) {
  if (!list.is_array() || list.empty()) throw IoError("coefficient file: expected a non-empty list");
  std::vector<Complex> c;
  c.reserve(list.size());
  for (const json& pair : list) {
    if (!pair.is_array() || pair.size() != 2) throw IoError("coefficient file: entries must be [re, im]");
    c.emplace_back(finite_number(pair[0], "re"), finite_number(pair[1], "im"));
  }
  return Polynomial(std::move(c));
}

Polynomial from_sparse(const json& terms) {
  if (!terms.is_array() || terms.empty()) throw IoError("coefficient file: \"terms\" must be a non-empty list");
  std::vector<Complex> c;
  for (const json& t : terms) {
    if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer() || t[0].get<long long>() < 0)
      throw IoError("coefficient file: terms must be [k, re, im] with integer k >= 0");
    const auto k = static_cast<std::size_t>(t[0].get<long long>());
    if (k > 10000000) throw IoError("coefficient file: power too large");
    if (c.size() <= k) c.resize(k + 1);
    c[k] += Complex(finite_number(t[1], "re"), finite_number(t[2], "im"));
  }
  return Polynomial(std::move(c));
}

}  // namespace

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

Polynomial parse_coefficients(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw IoError(std::string("coefficient file: ") + e.what());
  }
  if (doc.is_array()) return from_dense(doc);
  if (doc.is_object()) {
    if (doc.contains("terms")) return from_sparse(doc["terms"]);
    if (doc.contains("coefficients")) return from_dense(doc["coefficients"]);
  }
  throw IoError("coefficient file: expected a list of [re, im] pairs");
}

std::string format_coefficients(const Polynomial& p) {
  std::string out = "[\n";
  const auto c = p.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k) {
    out += "  [" + format_double(c[k].real()) + ", " + format_double(c[k].imag()) + "]";
    out += k + 1 < c.size() ? ",\n" : "\n";
  }
  out += "]\n";
  return out;
}

Polynomial read_coefficients(const std::filesystem::path& path) {
  return parse_coefficients(read_text(path));
}

void write_coefficients(const std::filesystem::path& path, const Polynomial& p) {
  write_text(path, format_coefficients(p));
}

std::string format_root_dump(const RootSet& rs) {
  std::string out = "# re im modulus argument residual\n";
  for (std::size_t k = 0; k < rs.roots.size(); ++k) {
    const Complex z = rs.roots[k];
    const double res = k < rs.residuals.size() ? rs.residuals[k] : 0.0;
    out += format_double(z.real()) + " " + format_double(z.imag()) + " " + format_double(std::abs(z)) +
           " " + format_double(z == Complex(0) ? 0.0 : wrapped_arg(z)) + " " + format_double(res) + "\n";
  }
  return out;
}

std::vector<Complex> parse_root_dump(const std::string& text) {
  std::vector<Complex> roots;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    double re, im;
    if (!(ls >> re)) continue;
    if (!(ls >> im)) throw IoError("root dump: line " + std::to_string(lineno) + " has one column");
    roots.emplace_back(re, im);
  }
  return roots;
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("read failed: " + path.string());
  return ss.str();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << text;
  out.flush();
  if (!out) throw IoError("write failed: " + path.string());
}

}  // namespace trigroots
