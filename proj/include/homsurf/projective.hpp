#pragma once

#include <array>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "homsurf/points.hpp"

namespace homsurf {

using MatX = Eigen::MatrixXcd;

// Throws InputError("singular matrix") when |det| <= eps * scale^dim.
void require_invertible(const MatX& m, double eps = kDefaultEps);

ProjPoint mobius_act(const Mat2& g, const ProjPoint& x);
Proj2Point projective_act(const Mat3& g, const Proj2Point& x);

// Action of g on Sym^n C^2 in the basis Z1^n, Z1^{n-1} Z2, ..., Z2^n.
MatX sym_power_rep(const Mat2& g, int n);

// Distance between matrices up to a nonzero scalar.
double projective_matrix_distance(const MatX& a, const MatX& b);
// Distance between matrices up to multiplication by n-th roots of unity.
double root_matrix_distance(const Mat2& a, const Mat2& b, int n);
// Representative of g modulo n-th roots of unity: arg of the (2,2) entry (or the first
// nonzero entry) in [0, 2 pi / n).
Mat2 canonical_mod_roots(const Mat2& g, int n);

// C9: pairs of distinct points of P^1.
Vec3 quadric_embed(const QuadricPoint& x);
QuadricPoint quadric_act(const Mat2& g, const QuadricPoint& x);
// [a:b:c] with a z^2 + b z + c = (alpha - z)(beta - z), homogenized.
Proj2Point quadric_double_cover(const QuadricPoint& x);
// PSL2 acting on binary quadratic forms by q -> q o g^{-1}, the action making the double cover equivariant.
Mat3 conic_matrix(const Mat2& g);
Proj2Point conic_complement_act(const Mat2& g, const Proj2Point& x);
// The two ordered preimages (alpha, beta), (beta, alpha) of a point off the conic b^2 = 4ac.
std::array<QuadricPoint, 2> double_cover_preimages(const Proj2Point& y, double eps = kDefaultEps);

// Homogeneous binary forms of degree n: p[i] is the coefficient of Z1^i Z2^(n-i).
using BinaryForm = std::vector<Complex>;
Complex eval_form(const BinaryForm& p, const Vec2& v);
// Coefficients of p o h, with h acting on column vectors (Z1, Z2).
BinaryForm compose_form(const BinaryForm& p, const Mat2& h);

// Element (g, p) of (GL2/Z_n) x| Sym^n(C^2)^*. lambda is carried for the B-gamma subgroups
// whose parameter is not recoverable from g.
struct OnElement {
  Mat2 g = Mat2::Identity();
  BinaryForm p;
  Complex lambda{0.0, 0.0};
};

OnElement on_identity(int n);
// (g0 g1, p0 + p1 o g0^{-1})
OnElement on_multiply(const OnElement& a, const OnElement& b);
OnElement on_inverse(const OnElement& a);
double on_distance(const OnElement& a, const OnElement& b, int n);

// Chart flip (z, w) <-> (1/z, w/z^n).
BundlePoint bundle_transition(const BundlePoint& x, int n);
// Chart 0 when |z| <= 1, chart 1 otherwise.
BundlePoint bundle_normalize(const BundlePoint& x, int n);
double bundle_distance(const BundlePoint& a, const BundlePoint& b, int n);
// Acts on the line and polynomial, then picks the chart.
BundlePoint on_act(const OnElement& e, const BundlePoint& x, int n);
// The chart formula ((az+b)/(cz+d), w/(cz+d)^n + p(z', 1)) evaluated in the given chart,
// without switching.
BundlePoint on_act_in_chart(const OnElement& e, const BundlePoint& x, int n);

enum class BGamma { One, Two, Three, Four };
// Elements of the B-gamma subgroups. One/Two: g = [[e^{l(1-c/n)}, b], [0, e^{-l c/n}]] (Two has c = 0);
// Three: g = [[1, b], [0, e^{-l}]] and p = l Z1^n + Z2 r; Four: any upper triangular g.
OnElement bgamma_element(BGamma sub, int n, Complex c, Complex lambda, Complex b, BinaryForm p);
void check_bgamma_shape(BGamma sub, const OnElement& e, int n, Complex c, double eps = 1e-8);
AffinePoint bgamma_act(BGamma sub, const OnElement& e, const AffinePoint& x, int n, Complex c);

// Linear action on C^2 minus 0; with hopf set, the result is reduced into |hopf| < |x| <= 1.
AffinePoint bdelta_act(const Mat2& g, const AffinePoint& x, std::optional<Complex> hopf = std::nullopt);
AffinePoint hopf_reduce(const AffinePoint& x, Complex hopf);
bool hopf_equivalent(const AffinePoint& a, const AffinePoint& b, Complex hopf, double tol = 1e-8);

}  // namespace homsurf
