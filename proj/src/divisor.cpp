#include "homsurf/divisor.hpp"

#include <algorithm>
#include <cmath>

namespace homsurf {

Divisor::Divisor(std::vector<DivisorPoint> points, double eps) {
  for (const auto& p : points) {
    require_finite(p.point, "divisor point");
    if (p.mult < 1) throw InputError("divisor multiplicities must be positive");
    auto it = std::find_if(points_.begin(), points_.end(),
                           [&](const DivisorPoint& q) { return approx_equal(q.point, p.point, eps); });
    if (it == points_.end())
      points_.push_back(p);
    else
      it->mult += p.mult;
  }
  std::sort(points_.begin(), points_.end(), [](const DivisorPoint& a, const DivisorPoint& b) {
    if (a.point.real() != b.point.real()) return a.point.real() < b.point.real();
    return a.point.imag() < b.point.imag();
  });
  if (degree() > kMaxDivisorDegree) throw InputError("divisor degree exceeds 32");
}

Divisor Divisor::from_points(const std::vector<Complex>& points, double eps) {
  std::vector<DivisorPoint> pts;
  for (auto z : points) pts.push_back({z, 1});
  return Divisor(std::move(pts), eps);
}

int Divisor::degree() const {
  int deg = 0;
  for (const auto& p : points_) deg += p.mult;
  return deg;
}

int Divisor::multiplicity_at(Complex z, double eps) const {
  for (const auto& p : points_)
    if (approx_equal(p.point, z, eps)) return p.mult;
  return 0;
}

int Divisor::max_multiplicity() const {
  int m = 0;
  for (const auto& p : points_) m = std::max(m, p.mult);
  return m;
}

Divisor Divisor::scaled(Complex mu) const {
  auto pts = points_;
  for (auto& p : pts) p.point *= mu;
  return Divisor(std::move(pts));
}

Divisor Divisor::translated(Complex a) const {
  auto pts = points_;
  for (auto& p : pts) p.point += a;
  return Divisor(std::move(pts));
}

Divisor Divisor::plus(Complex z, int mult) const {
  auto pts = points_;
  pts.push_back({z, mult});
  return Divisor(std::move(pts));
}

Complex Divisor::centroid() const {
  Complex sum = 0.0;
  for (const auto& p : points_) sum += static_cast<double>(p.mult) * p.point;
  return degree() == 0 ? Complex{} : sum / static_cast<double>(degree());
}

bool Divisor::same_as(const Divisor& other, double eps) const {
  if (points_.size() != other.points_.size()) return false;
  for (const auto& p : points_)
    if (other.multiplicity_at(p.point, eps) != p.mult) return false;
  return true;
}

std::optional<std::int64_t> QuasiperiodGroup::index_of(Complex w, double tol) const {
  if (kind != Kind::RankOne) return std::nullopt;
  return as_integer(w / generator, tol);
}

bool QuasiperiodGroup::contains(Complex w, double tol) const {
  switch (kind) {
    case Kind::AllOfC:
      return true;
    case Kind::Trivial:
      return std::abs(w) <= tol;
    case Kind::RankOne:
      return index_of(w, tol).has_value();
  }
  return false;
}

QuasiperiodGroup quasiperiod_group(const Divisor& d, std::int64_t bound) {
  if (d.empty()) throw InputError("degenerate divisor");
  if (d.degree() == 1) return {QuasiperiodGroup::Kind::AllOfC, {}};
  if (d.max_multiplicity() >= 2) return {QuasiperiodGroup::Kind::Trivial, {}};
  const auto& pts = d.points();
  const Complex base = pts[0].point;
  const Complex d2 = pts[1].point - base;
  std::vector<Rational> ratios;
  std::int64_t common = 1;
  for (std::size_t a = 1; a < pts.size(); ++a) {
    auto q = rationalize((pts[a].point - base) / d2, bound);
    if (!q) return {QuasiperiodGroup::Kind::Trivial, {}};
    ratios.push_back(*q);
    common = lcm64(common, q->den);
  }
  std::int64_t g = 0;
  for (const auto& q : ratios) g = gcd64(g, q.num * (common / q.den));
  Complex delta = d2 * static_cast<double>(g) / static_cast<double>(common);
  Complex gen = kTwoPiI / delta;
  if (gen.real() < 0 || (gen.real() == 0 && gen.imag() < 0)) gen = -gen;
  if (std::abs(gen.real()) <= 1e-15 * std::abs(gen)) gen = Complex(0.0, gen.imag());
  if (std::abs(gen.imag()) <= 1e-15 * std::abs(gen)) gen = Complex(gen.real(), 0.0);
  if (gen.real() < 0 || (gen.real() == 0 && gen.imag() < 0)) gen = -gen;
  return {QuasiperiodGroup::Kind::RankOne, gen};
}

Complex weight(const Divisor& d, Complex w, std::int64_t bound) {
  if (d.empty()) throw InputError("degenerate divisor");
  auto q = quasiperiod_group(d, bound);
  if (!q.contains(w)) throw InputError("not a quasiperiod");
  if (q.kind == QuasiperiodGroup::Kind::Trivial) return 1.0;
  return std::exp(d.points()[0].point * w);
}

namespace {

bool matches(const Divisor& d, const Divisor& e, Complex mu, double eps) {
  if (d.points().size() != e.points().size()) return false;
  for (const auto& p : d.points()) {
    Complex target = mu * p.point;
    bool hit = false;
    for (const auto& q : e.points()) {
      if (q.mult == p.mult && std::abs(q.point - target) <= eps * std::max({1.0, std::abs(q.point), std::abs(target)}) * 10) {
        hit = true;
        break;
      }
    }
    if (!hit) return false;
  }
  return true;
}

}  // namespace

std::optional<Complex> equivalent_mod_rescaling(const Divisor& d, const Divisor& e, double eps) {
  if (d.degree() != e.degree() || d.points().size() != e.points().size()) return std::nullopt;
  if (d.empty()) return Complex(1.0);
  const DivisorPoint* pivot = nullptr;
  for (const auto& p : d.points())
    if (std::abs(p.point) > eps) {
      pivot = &p;
      break;
    }
  if (pivot == nullptr) {
    // D is supported at 0.
    if (matches(d, e, 1.0, eps)) return Complex(1.0);
    return std::nullopt;
  }
  for (const auto& q : e.points()) {
    if (q.mult != pivot->mult || std::abs(q.point) <= eps) continue;
    Complex mu = q.point / pivot->point;
    if (matches(d, e, mu, eps)) return mu;
  }
  return std::nullopt;
}

std::optional<std::pair<Complex, Complex>> equivalent_mod_affine(const Divisor& d, const Divisor& e, double eps) {
  if (d.degree() != e.degree()) return std::nullopt;
  Complex cd = d.centroid(), ce = e.centroid();
  auto mu = equivalent_mod_rescaling(d.translated(-cd), e.translated(-ce), eps);
  if (!mu) return std::nullopt;
  return std::make_pair(*mu, ce - *mu * cd);
}

}  // namespace homsurf
