#pragma once

#include <string>
#include <vector>

#include "homsurf/common.hpp"
#include "homsurf/points.hpp"

namespace homsurf {

// (a, b)(a', b') = (a + a', b + e^a b').
struct UAffElement {
  Complex a, b;
};

// (a, b) -> (a, gamma (1 - e^a) + beta b).
struct UAffAutomorphism {
  Complex gamma{0.0, 0.0};
  Complex beta{1.0, 0.0};
};

UAffElement uaff_identity();
UAffElement uaff_multiply(const UAffElement& g, const UAffElement& h);
UAffElement uaff_inverse(const UAffElement& g);
Mat3 uaff_matrix(const UAffElement& g);
UAffElement aut_apply(const UAffAutomorphism& phi, const UAffElement& g);
UAffAutomorphism aut_compose(const UAffAutomorphism& outer, const UAffAutomorphism& inner);
UAffElement commutator(const UAffElement& g, const UAffElement& h);
double uaff_distance(const UAffElement& g, const UAffElement& h);

// Row of the discrete subgroup table: index 0 is D2 (trivial group), 1..14 are D2_1..D2_14.
struct D2Label {
  int index = 0;
  std::int64_t k = 0;
  Complex b{0.0, 0.0};
  Complex tau{0.0, 1.0};
  Complex a{0.0, 0.0};
  Complex a1{0.0, 0.0}, a2{0.0, 0.0};

  std::string name() const;
  bool abelian() const;
  std::vector<UAffElement> generators() const;
};

struct D2Classification {
  D2Label label;
  UAffAutomorphism normalizer;  // maps the input group onto label.generators()
  std::vector<UAffElement> normalized_generators;
};

// Throws ClassificationError("not a tabulated subgroup") for shapes outside the table.
D2Classification classify_subgroup(const std::vector<UAffElement>& gens, double eps = kDefaultEps);

UAffElement center_intersection(const D2Label& label);

// Map X -> X' onto a product of Riemann surfaces; coordinates taken modulo a lattice
// are returned reduced. Throws Error("bundle is nontrivial") on nonabelian rows.
AffinePoint product_cover(const D2Label& label, const UAffElement& x);
bool same_cover_point(const D2Label& label, const AffinePoint& p, const AffinePoint& q, double tol = 1e-8);

}  // namespace homsurf
