#include "homsurf/projective.hpp"

#include <algorithm>
#include <cmath>

namespace homsurf {

namespace {

double max_abs(const MatX& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

// Product of linear forms given by coefficient vectors indexed by Z1 power.
std::vector<Complex> poly_mul(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  std::vector<Complex> out(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

std::vector<Complex> poly_pow(const std::vector<Complex>& a, int k) {
  std::vector<Complex> out{1.0};
  for (int i = 0; i < k; ++i) out = poly_mul(out, a);
  return out;
}

int form_degree(const BinaryForm& p) { return static_cast<int>(p.size()) - 1; }

Mat2 swap_conjugate(const Mat2& g) {
  Mat2 out;
  out << g(1, 1), g(1, 0), g(0, 1), g(0, 0);
  return out;
}

}  // namespace

void require_invertible(const MatX& m, double eps) {
  double scale = std::max(1.0, max_abs(m));
  if (std::abs(m.determinant()) <= eps * std::pow(scale, static_cast<double>(m.rows())))
    throw InputError("singular matrix");
}

ProjPoint mobius_act(const Mat2& g, const ProjPoint& x) {
  require_invertible(g);
  Vec2 v = g * x.vec();
  return {v[0], v[1]};
}

Proj2Point projective_act(const Mat3& g, const Proj2Point& x) {
  require_invertible(g);
  return Proj2Point(Vec3(g * x.vec()));
}

MatX sym_power_rep(const Mat2& g, int n) {
  if (n < 1) throw InputError("symmetric power needs n >= 1");
  // Image of e1^{n-j} e2^j as a polynomial in (e1, e2) indexed by the power of e2.
  const std::vector<Complex> ge1{g(0, 0), g(1, 0)}, ge2{g(0, 1), g(1, 1)};
  MatX out(n + 1, n + 1);
  for (int j = 0; j <= n; ++j) {
    auto col = poly_mul(poly_pow(ge1, n - j), poly_pow(ge2, j));
    for (int k = 0; k <= n; ++k) out(k, j) = col[static_cast<std::size_t>(k)];
  }
  return out;
}

double projective_matrix_distance(const MatX& a, const MatX& b) {
  Eigen::Index r = 0, c = 0;
  a.cwiseAbs().maxCoeff(&r, &c);
  if (std::abs(b(r, c)) < 1e-300) return 1.0;
  MatX na = a / a(r, c), nb = b / b(r, c);
  return max_abs(na - nb) / std::max({1.0, max_abs(na), max_abs(nb)});
}

double root_matrix_distance(const Mat2& a, const Mat2& b, int n) {
  double best = std::numeric_limits<double>::infinity();
  double scale = std::max({1.0, max_abs(a), max_abs(b)});
  for (int k = 0; k < std::max(n, 1); ++k) {
    Complex mu = std::exp(kTwoPiI * (static_cast<double>(k) / std::max(n, 1)));
    best = std::min(best, max_abs(a - mu * b) / scale);
  }
  return best;
}

Mat2 canonical_mod_roots(const Mat2& g, int n) {
  if (n <= 1) return g;
  Complex e = g(1, 1);
  if (std::abs(e) < 1e-300) {
    for (Complex cand : {g(0, 0), g(0, 1), g(1, 0)})
      if (std::abs(cand) >= 1e-300) {
        e = cand;
        break;
      }
  }
  double theta = std::arg(e);
  if (theta < 0) theta += 2 * kPi;
  double k = -std::floor(theta * n / (2 * kPi));
  return std::exp(kTwoPiI * (k / n)) * g;
}

Vec3 quadric_embed(const QuadricPoint& x) {
  require_distinct(x.alpha, x.beta);
  Complex a1 = x.alpha.z1(), a2 = x.alpha.z2(), b1 = x.beta.z1(), b2 = x.beta.z2();
  Complex d = a1 * b2 - a2 * b1;
  return {a2 * b2 / d, (a1 * b2 + a2 * b1) / d, a1 * b1 / d};
}

QuadricPoint quadric_act(const Mat2& g, const QuadricPoint& x) { return {mobius_act(g, x.alpha), mobius_act(g, x.beta)}; }

Proj2Point quadric_double_cover(const QuadricPoint& x) {
  require_distinct(x.alpha, x.beta);
  Complex a1 = x.alpha.z1(), a2 = x.alpha.z2(), b1 = x.beta.z1(), b2 = x.beta.z2();
  return {a2 * b2, -(a1 * b2 + a2 * b1), a1 * b1};
}

Mat3 conic_matrix(const Mat2& g) {
  require_invertible(g);
  Mat2 gi = g.inverse();
  Mat3 out;
  // Basis Z1^2, Z1 Z2, Z2^2 in that order; BinaryForm indexes by the Z1 power.
  for (int j = 0; j < 3; ++j) {
    BinaryForm e(3, 0.0);
    e[static_cast<std::size_t>(2 - j)] = 1.0;
    auto img = compose_form(e, gi);
    for (int k = 0; k < 3; ++k) out(k, j) = img[static_cast<std::size_t>(2 - k)];
  }
  return out;
}

Proj2Point conic_complement_act(const Mat2& g, const Proj2Point& x) {
  Vec3 v = x.vec();
  if (std::abs(v[1] * v[1] - 4.0 * v[0] * v[2]) <= kDefaultEps * v.squaredNorm())
    throw InputError("point lies on the conic b^2 = 4ac");
  return Proj2Point(Vec3(conic_matrix(g) * v));
}

std::array<QuadricPoint, 2> double_cover_preimages(const Proj2Point& y, double eps) {
  Complex a = y[0], b = y[1], c = y[2];
  Complex disc = b * b - 4.0 * a * c;
  if (std::abs(disc) <= eps) throw InputError("point lies on the conic b^2 = 4ac");
  Complex s = std::sqrt(disc);
  if ((std::conj(b) * s).real() < 0) s = -s;
  Complex q = -(b + s) / 2.0;
  ProjPoint r1(q, a), r2(c, q);
  return {QuadricPoint{r1, r2}, QuadricPoint{r2, r1}};
}

Complex eval_form(const BinaryForm& p, const Vec2& v) {
  const int n = form_degree(p);
  Complex acc = 0.0;
  for (int i = 0; i <= n; ++i) acc += p[static_cast<std::size_t>(i)] * std::pow(v[0], i) * std::pow(v[1], n - i);
  return acc;
}

BinaryForm compose_form(const BinaryForm& p, const Mat2& h) {
  const int n = form_degree(p);
  const std::vector<Complex> l1{h(0, 1), h(0, 0)}, l2{h(1, 1), h(1, 0)};
  BinaryForm out(p.size(), 0.0);
  for (int i = 0; i <= n; ++i) {
    if (p[static_cast<std::size_t>(i)] == 0.0) continue;
    auto term = poly_mul(poly_pow(l1, i), poly_pow(l2, n - i));
    for (int k = 0; k <= n; ++k) out[static_cast<std::size_t>(k)] += p[static_cast<std::size_t>(i)] * term[static_cast<std::size_t>(k)];
  }
  return out;
}

OnElement on_identity(int n) { return {Mat2::Identity(), BinaryForm(static_cast<std::size_t>(n + 1), 0.0), 0.0}; }

OnElement on_multiply(const OnElement& a, const OnElement& b) {
  if (a.p.size() != b.p.size()) throw InputError("polynomial degree mismatch");
  auto shifted = compose_form(b.p, a.g.inverse());
  BinaryForm p(a.p.size());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = a.p[i] + shifted[i];
  return {a.g * b.g, p, a.lambda + b.lambda};
}

OnElement on_inverse(const OnElement& a) {
  auto back = compose_form(a.p, a.g);
  for (auto& c : back) c = -c;
  return {a.g.inverse(), back, -a.lambda};
}

double on_distance(const OnElement& a, const OnElement& b, int n) {
  double d = root_matrix_distance(a.g, b.g, n);
  for (std::size_t i = 0; i < std::min(a.p.size(), b.p.size()); ++i) d = std::max(d, rel_diff(a.p[i], b.p[i]));
  if (a.p.size() != b.p.size()) return std::numeric_limits<double>::infinity();
  return d;
}

BundlePoint bundle_transition(const BundlePoint& x, int n) {
  if (std::abs(x.z) == 0.0) throw InputError("point is not in the chart overlap");
  return {1 - x.chart, 1.0 / x.z, x.w / std::pow(x.z, n)};
}

BundlePoint bundle_normalize(const BundlePoint& x, int n) {
  if (std::abs(x.z) <= 1.0) return x;
  return bundle_transition(x, n);
}

double bundle_distance(const BundlePoint& a, const BundlePoint& b, int n) {
  BundlePoint x = bundle_normalize(a, n), y = bundle_normalize(b, n);
  if (x.chart != y.chart) {
    if (std::abs(y.z) == 0.0) return std::numeric_limits<double>::infinity();
    y = bundle_transition(y, n);
  }
  return std::max(rel_diff(x.z, y.z), rel_diff(x.w, y.w));
}

BundlePoint on_act(const OnElement& e, const BundlePoint& x, int n) {
  Vec2 v = x.chart == 0 ? Vec2(x.z, 1.0) : Vec2(1.0, x.z);
  Vec2 v2 = e.g * v;
  Complex val = x.w + eval_form(e.p, v2);
  if (std::abs(v2[0]) <= std::abs(v2[1])) return {0, v2[0] / v2[1], val / std::pow(v2[1], n)};
  return {1, v2[1] / v2[0], val / std::pow(v2[0], n)};
}

BundlePoint on_act_in_chart(const OnElement& e, const BundlePoint& x, int n) {
  Mat2 g = x.chart == 0 ? e.g : swap_conjugate(e.g);
  BinaryForm p = e.p;
  if (x.chart == 1) std::reverse(p.begin(), p.end());
  Complex den = g(1, 0) * x.z + g(1, 1);
  if (std::abs(den) < 1e-300) throw InputError("point leaves the chart");
  Complex z = (g(0, 0) * x.z + g(0, 1)) / den;
  return {x.chart, z, x.w / std::pow(den, n) + eval_form(p, Vec2(z, 1.0))};
}

namespace {

Mat2 bgamma_matrix(BGamma sub, int n, Complex c, Complex lambda, Complex b) {
  Mat2 g = Mat2::Zero();
  const double nn = n;
  if (sub == BGamma::Two) c = 0.0;
  if (sub == BGamma::Three) {
    g << 1.0, b, 0.0, std::exp(-lambda);
  } else {
    g << std::exp(lambda * (1.0 - c / nn)), b, 0.0, std::exp(-lambda * c / nn);
  }
  return g;
}

[[noreturn]] void shape_violation(const std::string& what) { throw InputError("shape violation: " + what); }

}  // namespace

OnElement bgamma_element(BGamma sub, int n, Complex c, Complex lambda, Complex b, BinaryForm p) {
  if (n < 1) throw InputError("n must be positive");
  if (sub == BGamma::Four) throw InputError("B-gamma-4 elements are given by their matrix");
  if (sub == BGamma::One && std::abs(c) == 0.0) throw InputError("B-gamma-1 needs c != 0");
  if (p.empty()) p.assign(static_cast<std::size_t>(n + 1), 0.0);
  if (p.size() != static_cast<std::size_t>(n + 1)) throw InputError("polynomial must have n + 1 coefficients");
  if (sub == BGamma::Three) p[static_cast<std::size_t>(n)] = lambda;
  return {bgamma_matrix(sub, n, c, lambda, b), p, lambda};
}

void check_bgamma_shape(BGamma sub, const OnElement& e, int n, Complex c, double eps) {
  const Mat2& g = e.g;
  const double scale = std::max(1.0, g.cwiseAbs().maxCoeff());
  if (e.p.size() != static_cast<std::size_t>(n + 1)) shape_violation("polynomial must have n + 1 coefficients");
  if (std::abs(g(1, 0)) > eps * scale) shape_violation("matrix must be upper triangular");
  if (sub == BGamma::Four) {
    require_invertible(g);
    return;
  }
  Mat2 expect = bgamma_matrix(sub, n, c, e.lambda, g(0, 1));
  Complex mu = g(0, 0) / expect(0, 0);
  if (std::abs(std::pow(mu, n) - 1.0) > eps) shape_violation("diagonal does not match the parameter");
  if (std::abs(g(1, 1) - mu * expect(1, 1)) > eps * scale) shape_violation("diagonal does not match the parameter");
  if (sub == BGamma::Three && std::abs(e.p[static_cast<std::size_t>(n)] - e.lambda) > eps * std::max(1.0, std::abs(e.lambda)))
    shape_violation("Z1^n coefficient must equal the parameter");
}

AffinePoint bgamma_act(BGamma sub, const OnElement& e, const AffinePoint& x, int n, Complex c) {
  check_bgamma_shape(sub, e, n, c);
  auto y = on_act_in_chart(e, {0, x.z, x.w}, n);
  return {y.z, y.w};
}

AffinePoint hopf_reduce(const AffinePoint& x, Complex hopf) {
  double r = std::hypot(std::abs(x.z), std::abs(x.w));
  if (r == 0.0) throw InputError("point must be nonzero");
  if (!(std::abs(hopf) < 1.0) || std::abs(hopf) == 0.0) throw InputError("Hopf parameter must satisfy 0 < |lambda| < 1");
  double L = -std::log(std::abs(hopf));
  auto m = static_cast<int>(std::ceil(std::log(r) / L));
  Complex f = std::pow(hopf, m);
  AffinePoint y{x.z * f, x.w * f};
  // Guard the boundary against rounding.
  double ry = std::hypot(std::abs(y.z), std::abs(y.w));
  if (ry > 1.0) y = {y.z * hopf, y.w * hopf};
  return y;
}

bool hopf_equivalent(const AffinePoint& a, const AffinePoint& b, Complex hopf, double tol) {
  AffinePoint x = hopf_reduce(a, hopf), y = hopf_reduce(b, hopf);
  auto close = [tol](const AffinePoint& p, const AffinePoint& q) {
    return std::hypot(std::abs(p.z - q.z), std::abs(p.w - q.w)) <= tol;
  };
  return close(x, y) || close(x, {y.z * hopf, y.w * hopf}) || close({x.z * hopf, x.w * hopf}, y);
}

AffinePoint bdelta_act(const Mat2& g, const AffinePoint& x, std::optional<Complex> hopf) {
  if (std::abs(x.z) == 0.0 && std::abs(x.w) == 0.0) throw InputError("point must be nonzero");
  require_invertible(g);
  Vec2 v = g * Vec2(x.z, x.w);
  AffinePoint y{v[0], v[1]};
  return hopf ? hopf_reduce(y, *hopf) : y;
}

}  // namespace homsurf
