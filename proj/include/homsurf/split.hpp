#pragma once

#include <functional>
#include <vector>

#include "homsurf/common.hpp"
#include "homsurf/lattice.hpp"

namespace homsurf {

// Element of C x C with product (a, b)(a', b') = (a + a', b + chi(a) b').
struct SplitElement {
  Complex a, b;
};

using Character = std::function<Complex(Complex)>;

SplitElement split_multiply(const SplitElement& g, const SplitElement& h, const Character& chi);
SplitElement split_inverse(const SplitElement& g, const Character& chi);
SplitElement split_power(const SplitElement& g, std::int64_t n, const Character& chi);
SplitElement split_commutator(const SplitElement& g, const SplitElement& h, const Character& chi);

// Structure of a finitely generated subgroup: the image pi-bar of the a-projection
// and the kernel pi_0 inside {0} x C.
struct SplitAnalysis {
  int base_rank = 0;
  std::vector<SplitElement> lifts;  // lifts[j].a is a Z-basis of pi-bar
  int fiber_rank = 0;
  std::vector<Complex> fiber_basis;  // Z-basis of pi_0
};

SplitAnalysis analyze_split(const std::vector<SplitElement>& gens, const Character& chi,
                            std::int64_t bound = kDenominatorBound);

// Sign convention for a single generator of pi-bar: Im a > 0, or Im a = 0 and Re a > 0.
bool preferred_sign(Complex a);

}  // namespace homsurf

namespace homsurf {

// Representative of {b, -b} modulo Z: Im > 0, or Im = 0 and Re in [0, 1/2].
Complex canonical_mod_integers(Complex b, double tol = 1e-8);
// Among u b modulo the lattice for the given units u, a fixed representative.
Complex canonical_mod_lattice(Complex b, const Lattice2& lattice, const std::vector<Complex>& units);
// Units of Z[1, tau] other than 1, for reduced tau.
std::vector<Complex> lattice_units(Complex tau);
// Snap a reduced tau onto i or e^{pi i/3} when within 1e-8.
Complex snap_tau(Complex tau);

}  // namespace homsurf
