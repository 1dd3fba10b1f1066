#include "homsurf/points.hpp"

#include <algorithm>
#include <cmath>

namespace homsurf {

ProjPoint::ProjPoint(Complex z1, Complex z2) {
  require_finite(z1, "projective coordinate");
  require_finite(z2, "projective coordinate");
  Complex s = std::abs(z1) >= std::abs(z2) ? z1 : z2;
  if (std::abs(s) == 0.0) throw InputError("projective point with all coordinates zero");
  z1_ = z1 / s;
  z2_ = z2 / s;
}

Complex ProjPoint::affine_coordinate() const {
  if (std::abs(z2_) == 0.0) throw InputError("point at infinity has no affine coordinate");
  return z1_ / z2_;
}

Proj2Point::Proj2Point(Complex x0, Complex x1, Complex x2) {
  x_ = {x0, x1, x2};
  std::size_t best = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    require_finite(x_[i], "projective coordinate");
    if (std::abs(x_[i]) > std::abs(x_[best])) best = i;
  }
  Complex s = x_[best];
  if (std::abs(s) == 0.0) throw InputError("projective point with all coordinates zero");
  for (auto& c : x_) c /= s;
}

double proj_distance(const ProjPoint& a, const ProjPoint& b) {
  Complex cross = a.z1() * b.z2() - a.z2() * b.z1();
  return std::abs(cross) / (a.vec().norm() * b.vec().norm());
}

double proj_distance(const Proj2Point& a, const Proj2Point& b) {
  Vec3 u = a.vec(), v = b.vec();
  double num = std::sqrt(std::norm(u[0] * v[1] - u[1] * v[0]) + std::norm(u[0] * v[2] - u[2] * v[0]) +
                         std::norm(u[1] * v[2] - u[2] * v[1]));
  return num / (u.norm() * v.norm());
}

double affine_distance(const AffinePoint& a, const AffinePoint& b) {
  return std::max(rel_diff(a.z, b.z), rel_diff(a.w, b.w));
}

void require_distinct(const ProjPoint& a, const ProjPoint& b, double eps) {
  if (proj_distance(a, b) <= eps) throw InputError("quadric point requires distinct projective points");
}

}  // namespace homsurf
