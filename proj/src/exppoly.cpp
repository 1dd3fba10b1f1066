#include "homsurf/exppoly.hpp"

#include <algorithm>
#include <cmath>

namespace homsurf {

Polynomial::Polynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto c : coeffs_) require_finite(c, "polynomial coefficient");
  trim();
}

Polynomial Polynomial::monomial(int degree, Complex c) {
  std::vector<Complex> coeffs(static_cast<std::size_t>(degree) + 1, 0.0);
  coeffs.back() = c;
  return Polynomial(std::move(coeffs));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && std::abs(coeffs_.back()) <= kDropTolerance) coeffs_.pop_back();
}

Complex Polynomial::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0.0;
  return coeffs_[static_cast<std::size_t>(k)];
}

Complex Polynomial::operator()(Complex z) const {
  Complex acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  std::vector<Complex> out;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) out.push_back(static_cast<double>(k) * coeffs_[k]);
  return Polynomial(std::move(out));
}

Polynomial Polynomial::shifted(Complex t) const {
  auto c = coeffs_;
  const Complex s = -t;
  const std::size_t n = c.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = n - 1; j-- > i;) c[j] += s * c[j + 1];
  return Polynomial(std::move(c));
}

Polynomial Polynomial::rescaled(Complex mu) const {
  auto c = coeffs_;
  Complex power = 1.0;
  for (auto& x : c) {
    x *= power;
    power *= mu;
  }
  return Polynomial(std::move(c));
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0.0);
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0.0);
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(Complex c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Complex> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(out));
}

ExpPoly::ExpPoly(std::vector<ExpTerm> terms, double eps) {
  for (auto& t : terms) {
    require_finite(t.frequency, "frequency");
    auto it = std::find_if(terms_.begin(), terms_.end(),
                           [&](const ExpTerm& u) { return homsurf::approx_equal(u.frequency, t.frequency, eps); });
    if (it == terms_.end())
      terms_.push_back(std::move(t));
    else
      it->poly += t.poly;
  }
  std::erase_if(terms_, [](const ExpTerm& t) { return t.poly.is_zero(); });
  std::sort(terms_.begin(), terms_.end(), [](const ExpTerm& a, const ExpTerm& b) {
    if (a.frequency.real() != b.frequency.real()) return a.frequency.real() < b.frequency.real();
    return a.frequency.imag() < b.frequency.imag();
  });
}

ExpPoly ExpPoly::term(Complex frequency, Polynomial poly) { return ExpPoly({ExpTerm{frequency, std::move(poly)}}); }

ExpPoly ExpPoly::exponential(Complex frequency, Complex c) { return term(frequency, Polynomial({c})); }

ExpPoly ExpPoly::constant(Complex c) { return term(0.0, Polynomial({c})); }

ExpPoly ExpPoly::polynomial(std::vector<Complex> coeffs) { return term(0.0, Polynomial(std::move(coeffs))); }

Complex ExpPoly::operator()(Complex z) const {
  Complex acc = 0.0;
  for (const auto& t : terms_) acc += std::exp(t.frequency * z) * t.poly(z);
  return acc;
}

ExpPoly ExpPoly::derivative() const {
  std::vector<ExpTerm> out;
  for (const auto& t : terms_) out.push_back({t.frequency, t.poly * t.frequency + t.poly.derivative()});
  return ExpPoly(std::move(out));
}

ExpPoly ExpPoly::times_exponential(Complex a) const {
  std::vector<ExpTerm> out;
  for (const auto& t : terms_) out.push_back({t.frequency + a, t.poly});
  return ExpPoly(std::move(out));
}

ExpPoly ExpPoly::rescaled(Complex mu) const {
  std::vector<ExpTerm> out;
  for (const auto& t : terms_) out.push_back({t.frequency * mu, t.poly.rescaled(mu)});
  return ExpPoly(std::move(out));
}

ExpPoly& ExpPoly::operator+=(const ExpPoly& other) {
  auto all = terms_;
  all.insert(all.end(), other.terms_.begin(), other.terms_.end());
  *this = ExpPoly(std::move(all));
  return *this;
}

ExpPoly& ExpPoly::operator-=(const ExpPoly& other) { return *this += -other; }

ExpPoly& ExpPoly::operator*=(Complex c) {
  for (auto& t : terms_) t.poly *= c;
  std::erase_if(terms_, [](const ExpTerm& t) { return t.poly.is_zero(); });
  return *this;
}

ExpPoly ExpPoly::operator-() const {
  ExpPoly out = *this;
  for (auto& t : out.terms_) t.poly *= -1.0;
  return out;
}

Complex evaluate(const ExpPoly& f, Complex z) { return f(z); }

ExpPoly translate(const ExpPoly& f, Complex t) {
  std::vector<ExpTerm> out;
  for (const auto& term : f.terms())
    out.push_back({term.frequency, term.poly.shifted(t) * std::exp(-term.frequency * t)});
  return ExpPoly(std::move(out));
}

double distance(const ExpPoly& f, const ExpPoly& g, double eps) {
  double worst = 0.0;
  auto compare = [&](const Polynomial& p, const Polynomial& q) {
    int deg = std::max(p.degree(), q.degree());
    for (int k = 0; k <= deg; ++k) worst = std::max(worst, rel_diff(p.coeff(k), q.coeff(k)));
  };
  std::vector<bool> used(g.terms().size(), false);
  for (const auto& t : f.terms()) {
    bool found = false;
    for (std::size_t j = 0; j < g.terms().size(); ++j) {
      if (!used[j] && homsurf::approx_equal(t.frequency, g.terms()[j].frequency, eps)) {
        used[j] = true;
        found = true;
        compare(t.poly, g.terms()[j].poly);
        break;
      }
    }
    if (!found) compare(t.poly, Polynomial());
  }
  for (std::size_t j = 0; j < g.terms().size(); ++j)
    if (!used[j]) compare(Polynomial(), g.terms()[j].poly);
  return worst;
}

bool approx_equal(const ExpPoly& f, const ExpPoly& g, double eps) { return distance(f, g, eps) <= eps; }

DiffOperator::DiffOperator(Polynomial monic) : monic_(std::move(monic)) {
  if (monic_.is_zero()) throw InputError("differential operator must be nonzero");
  Complex lead = monic_.coeffs().back();
  if (lead != Complex(1.0)) {
    auto c = monic_.coeffs();
    for (auto& x : c) x /= lead;
    c.back() = 1.0;
    monic_ = Polynomial(std::move(c));
  }
}

DiffOperator DiffOperator::from_roots(const Divisor& d) {
  if (d.empty()) throw InputError("degenerate divisor");
  Polynomial p({1.0});
  for (const auto& pt : d.points())
    for (int k = 0; k < pt.mult; ++k) p = p * Polynomial({-pt.point, 1.0});
  auto c = p.coeffs();
  c.back() = 1.0;
  DiffOperator op{Polynomial(std::move(c))};
  op.roots_ = d.points();
  return op;
}

ExpPoly apply_operator(const DiffOperator& p, const ExpPoly& f) {
  std::vector<ExpTerm> out;
  for (const auto& term : f.terms()) {
    const Complex lambda = term.frequency;
    Polynomial q = term.poly;
    if (p.roots()) {
      // (d/dz - r)(e^{lambda z} q) = e^{lambda z} ((lambda - r) q + q').
      for (const auto& root : *p.roots()) {
        const bool same = homsurf::approx_equal(lambda, root.point);
        for (int k = 0; k < root.mult && !q.is_zero(); ++k)
          q = same ? q.derivative() : q * (lambda - root.point) + q.derivative();
      }
    } else {
      const auto& c = p.monic().coeffs();
      Polynomial r = term.poly * c.back();
      for (std::size_t m = c.size() - 1; m-- > 0;) r = r * lambda + r.derivative() + term.poly * c[m];
      q = r;
    }
    if (!q.is_zero()) out.push_back({lambda, std::move(q)});
  }
  return ExpPoly(std::move(out));
}

DiffOperator monic_polynomial(const Divisor& d) { return DiffOperator::from_roots(d); }

std::vector<ExpPoly> basis_of(const Divisor& d) {
  if (d.empty()) throw InputError("degenerate divisor");
  std::vector<ExpPoly> out;
  for (const auto& pt : d.points())
    for (int k = 0; k < pt.mult; ++k) out.push_back(ExpPoly::term(pt.point, Polynomial::monomial(k)));
  return out;
}

bool contains(const Divisor& d, const ExpPoly& f) { return apply_operator(monic_polynomial(d), f).is_zero(); }

ExpPoly random_member(const Divisor& d, Rng& rng, double radius) {
  ExpPoly f;
  for (const auto& b : basis_of(d)) f += b * random_complex(rng, radius);
  return f;
}

}  // namespace homsurf
