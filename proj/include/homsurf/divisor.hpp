#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "homsurf/common.hpp"

namespace homsurf {

inline constexpr int kMaxDivisorDegree = 32;

struct DivisorPoint {
  Complex point;
  int mult = 1;
};

// Effective divisor on C: distinct points (within eps) with positive multiplicities,
// sorted by (re, im).
class Divisor {
 public:
  Divisor() = default;
  explicit Divisor(std::vector<DivisorPoint> points, double eps = kDefaultEps);
  static Divisor from_points(const std::vector<Complex>& points, double eps = kDefaultEps);

  const std::vector<DivisorPoint>& points() const { return points_; }
  int degree() const;
  bool empty() const { return points_.empty(); }
  int multiplicity_at(Complex z, double eps = kDefaultEps) const;
  int max_multiplicity() const;

  Divisor scaled(Complex mu) const;
  Divisor translated(Complex a) const;
  Divisor plus(Complex z, int mult = 1) const;
  Complex centroid() const;

  bool operator==(const Divisor& other) const { return same_as(other); }
  bool same_as(const Divisor& other, double eps = kDefaultEps) const;

 private:
  std::vector<DivisorPoint> points_;
};

struct QuasiperiodGroup {
  enum class Kind { Trivial, AllOfC, RankOne };
  Kind kind = Kind::Trivial;
  Complex generator{0.0, 0.0};

  bool contains(Complex w, double tol = kRationalResidual) const;
  // w / generator as an integer, for RankOne.
  std::optional<std::int64_t> index_of(Complex w, double tol = kRationalResidual) const;
};

QuasiperiodGroup quasiperiod_group(const Divisor& d, std::int64_t bound = kDenominatorBound);

// gamma_w = exp(lambda_1 w); throws InputError("not a quasiperiod").
Complex weight(const Divisor& d, Complex w, std::int64_t bound = kDenominatorBound);

std::optional<Complex> equivalent_mod_rescaling(const Divisor& d, const Divisor& e, double eps = kDefaultEps);
std::optional<std::pair<Complex, Complex>> equivalent_mod_affine(const Divisor& d, const Divisor& e,
                                                                  double eps = kDefaultEps);

}  // namespace homsurf
