#pragma once

#include <string>
#include <vector>

#include "homsurf/points.hpp"

namespace homsurf {

// Normal forms of discrete subgroups of C^2.
struct D1Label {
  int index = 0;  // 0 for the trivial group, else 1..6
  Complex tau{0.0, 1.0};
  Complex sigma{0.0, 0.0};
  // D1_6: columns of the period matrix beyond the unit vectors.
  Vec2 l3{0.0, 0.0}, l4{0.0, 0.0};

  std::string name() const;
  std::vector<Vec2> generators() const;
};

struct D1Classification {
  D1Label label;
  int rank = 0;
  // A in GL(2, C) with A pi = <normalized_generators>.
  Mat2 normalizer = Mat2::Identity();
  std::vector<Vec2> normalized_generators;
  // Set when sigma is within 1e-8 of the trivial bundle.
  bool sigma_warning = false;
};

// Throws ClassificationError for generators that do not span a discrete group.
D1Classification classify_D1_subgroup(const std::vector<Vec2>& gens);

// Whether two finite sets generate the same subgroup of C^2.
bool same_d1_subgroup(const std::vector<Vec2>& a, const std::vector<Vec2>& b, double tol = 1e-7);

}  // namespace homsurf
