#pragma once

#include <array>
#include <variant>

#include <Eigen/Dense>

#include "homsurf/common.hpp"
#include "homsurf/lattice.hpp"

namespace homsurf {

using Vec2 = Eigen::Vector2cd;
using Vec3 = Eigen::Vector3cd;
using Mat2 = Eigen::Matrix2cd;
using Mat3 = Eigen::Matrix3cd;

struct AffinePoint {
  Complex z, w;
};

// Homogeneous pair, scaled so the larger coordinate is 1.
class ProjPoint {
 public:
  ProjPoint() : ProjPoint(0.0, 1.0) {}
  ProjPoint(Complex z1, Complex z2);
  static ProjPoint affine(Complex z) { return {z, 1.0}; }
  static ProjPoint infinity() { return {1.0, 0.0}; }

  Complex z1() const { return z1_; }
  Complex z2() const { return z2_; }
  Vec2 vec() const { return {z1_, z2_}; }
  bool is_infinity(double tol = 1e-14) const { return std::abs(z2_) <= tol; }
  // z1/z2; throws at infinity.
  Complex affine_coordinate() const;

 private:
  Complex z1_, z2_;
};

class Proj2Point {
 public:
  Proj2Point() : Proj2Point(0.0, 0.0, 1.0) {}
  Proj2Point(Complex x0, Complex x1, Complex x2);
  explicit Proj2Point(const Vec3& v) : Proj2Point(v[0], v[1], v[2]) {}

  Complex operator[](int i) const { return x_[static_cast<std::size_t>(i)]; }
  Vec3 vec() const { return {x_[0], x_[1], x_[2]}; }

 private:
  std::array<Complex, 3> x_;
};

// Point of P^1 x C.
struct ProjAffinePoint {
  ProjPoint z;
  Complex w;
};

// Point of P^1 x P^1 (coordinates may coincide).
struct ProjPairPoint {
  ProjPoint a, b;
};

struct QuadricPoint {
  ProjPoint alpha, beta;
};

// Point of the total space of O(n): chart 0 has coordinates (z, w) over Z2 != 0,
// chart 1 has (Z, W) = (1/z, w/z^n) over Z1 != 0.
struct BundlePoint {
  int chart = 0;
  Complex z, w;
};

// Point of C^2 modulo a discrete translation group.
struct QuotientPoint {
  AffinePoint representative;
  TranslationLattice subgroup;
};

using SurfacePoint = std::variant<AffinePoint, ProjPoint, Proj2Point, ProjAffinePoint, ProjPairPoint, QuadricPoint,
                                  BundlePoint, QuotientPoint>;

// Chordal distance (sine of the angle between representatives).
double proj_distance(const ProjPoint& a, const ProjPoint& b);
double proj_distance(const Proj2Point& a, const Proj2Point& b);
double affine_distance(const AffinePoint& a, const AffinePoint& b);

// Projective points must be pairwise distinct.
void require_distinct(const ProjPoint& a, const ProjPoint& b, double eps = kDefaultEps);

}  // namespace homsurf
