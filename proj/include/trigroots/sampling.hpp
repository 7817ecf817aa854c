#pragma once

#include <random>
#include <vector>

#include "trigroots/polynomial.hpp"

namespace trigroots {

using Rng = std::mt19937_64;

// Uniform in the closed unit disk.
Complex unit_disk_point(Rng& rng);

// Degree-n polynomial with a_n = 1 and every other coefficient uniform in
// the unit disk; a_0 is redrawn until |a_0| >= a0_min.
Polynomial random_disk_polynomial(Rng& rng, int n, double a0_min = 0.05);

// Monic polynomial with known roots: uniform arguments, moduli uniform in
// [0.2, 1 - gap] or [1 + gap, 2.5] with even odds. The roots are returned
// through `roots` when given.
Polynomial random_rooted_polynomial(Rng& rng, int n, double gap, std::vector<Complex>* roots = nullptr);

}  // namespace trigroots
