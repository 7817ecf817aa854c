#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "trigroots/polynomial.hpp"
#include "trigroots/roots.hpp"

namespace trigroots {

// Shortest text is not the goal: 17 significant digits always round-trip.
std::string format_double(double x);

// Coefficient documents: a JSON list of [re, im] pairs where index k is the
// power of z, or the sparse form {"terms": [[k, re, im], ...]}. An object
// with a "coefficients" member (as echoed by analysis reports) is accepted
// too. Throws IoError on malformed text.
Polynomial parse_coefficients(const std::string& text);
std::string format_coefficients(const Polynomial& p);

Polynomial read_coefficients(const std::filesystem::path& path);
void write_coefficients(const std::filesystem::path& path, const Polynomial& p);

// One root per line: re im modulus argument residual.
std::string format_root_dump(const RootSet& rs);
// Reads the first two columns of a root dump; '#' starts a comment.
std::vector<Complex> parse_root_dump(const std::string& text);

std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace trigroots
