#include "homsurf/split.hpp"

#include <cmath>

namespace homsurf {

SplitElement split_multiply(const SplitElement& g, const SplitElement& h, const Character& chi) {
  return {g.a + h.a, g.b + chi(g.a) * h.b};
}

SplitElement split_inverse(const SplitElement& g, const Character& chi) { return {-g.a, -chi(-g.a) * g.b}; }

SplitElement split_power(const SplitElement& g, std::int64_t n, const Character& chi) {
  SplitElement base = n < 0 ? split_inverse(g, chi) : g;
  std::uint64_t e = n < 0 ? static_cast<std::uint64_t>(-n) : static_cast<std::uint64_t>(n);
  SplitElement acc{0.0, 0.0};
  while (e > 0) {
    if (e & 1U) acc = split_multiply(acc, base, chi);
    base = split_multiply(base, base, chi);
    e >>= 1U;
  }
  return acc;
}

SplitElement split_commutator(const SplitElement& g, const SplitElement& h, const Character& chi) {
  return split_multiply(split_multiply(g, h, chi), split_multiply(split_inverse(g, chi), split_inverse(h, chi), chi),
                        chi);
}

bool preferred_sign(Complex a) {
  const double tol = 1e-12 * std::max(1.0, std::abs(a));
  if (std::abs(a.imag()) > tol) return a.imag() > 0;
  return a.real() > 0;
}

namespace {

SplitElement word(const std::vector<SplitElement>& gens, const IntRow& exps, const Character& chi) {
  SplitElement acc{0.0, 0.0};
  for (std::size_t k = 0; k < gens.size(); ++k)
    if (exps[k] != 0) acc = split_multiply(acc, split_power(gens[k], exps[k], chi), chi);
  return acc;
}

}  // namespace

SplitAnalysis analyze_split(const std::vector<SplitElement>& gens, const Character& chi, std::int64_t bound) {
  SplitAnalysis out;
  std::vector<RealVec> avecs;
  for (const auto& g : gens) avecs.push_back(to_real(g.a));
  auto base = integer_span(avecs, bound);
  out.base_rank = base.rank;
  for (const auto& row : base.basis_in_gens) out.lifts.push_back(word(gens, row, chi));

  std::vector<Complex> fiber;
  for (const auto& rel : base.relations) fiber.push_back(word(gens, rel, chi).b);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) fiber.push_back(split_commutator(gens[i], gens[j], chi).b);

  std::vector<Complex> units;
  for (const auto& l : out.lifts) {
    units.push_back(chi(l.a));
    units.push_back(chi(-l.a));
  }

  auto span_of = [&](const std::vector<Complex>& values) {
    std::vector<RealVec> v;
    for (auto c : values) v.push_back(to_real(c));
    return integer_span(v, bound);
  };
  IntegerSpan span = span_of(fiber);
  for (int iter = 0; iter < 16; ++iter) {
    std::vector<Complex> basis;
    for (const auto& v : span.basis) basis.emplace_back(v[0], v[1]);
    std::vector<Complex> extended = basis;
    for (auto c : basis)
      for (auto u : units) extended.push_back(u * c);
    bool closed = true;
    if (!basis.empty()) {
      TranslationLattice lattice(span.basis);
      for (std::size_t i = basis.size(); i < extended.size(); ++i)
        if (!lattice.contains(to_real(extended[i]))) closed = false;
    }
    if (closed) {
      out.fiber_rank = span.rank;
      out.fiber_basis = basis;
      return out;
    }
    span = span_of(extended);
    if (span.rank > 2) throw ClassificationError("kernel of the projection is not discrete");
  }
  throw ClassificationError("kernel of the projection is not discrete");
}

}  // namespace homsurf

namespace homsurf {

Complex canonical_mod_integers(Complex b, double tol) {
  auto reduce = [tol](Complex x) {
    x -= std::floor(x.real());
    if (x.real() > 1.0 - tol) x -= 1.0;
    return x;
  };
  Complex r1 = reduce(b), r2 = reduce(-b);
  if (std::abs(r1.imag()) > tol) return r1.imag() > 0 ? r1 : r2;
  return r2.real() < r1.real() - tol ? r2 : r1;
}

Complex canonical_mod_lattice(Complex b, const Lattice2& lattice, const std::vector<Complex>& units) {
  auto normalize = [&](Complex z) {
    auto c = lattice.coords(lattice.reduce(z));
    for (auto& x : c)
      if (x > 1.0 - 1e-9) x -= 1.0;
    return c;
  };
  auto key = [](const std::array<double, 2>& c) {
    return std::make_pair(std::round(c[0] * 1e8), std::round(c[1] * 1e8));
  };
  auto best = normalize(b);
  for (auto u : units) {
    auto cand = normalize(u * b);
    if (key(cand) < key(best)) best = cand;
  }
  return best[0] * lattice.w1() + best[1] * lattice.w2();
}

Complex snap_tau(Complex tau) {
  const Complex hex = std::exp(Complex(0.0, kPi / 3.0));
  if (std::abs(tau - kI) < 1e-8) return kI;
  if (std::abs(tau - hex) < 1e-8) return hex;
  return tau;
}

std::vector<Complex> lattice_units(Complex tau) {
  const Complex hex = std::exp(Complex(0.0, kPi / 3.0));
  if (std::abs(tau - kI) < 1e-8) return {-1.0, kI, -kI};
  if (std::abs(tau - hex) < 1e-8) {
    std::vector<Complex> units;
    for (int j = 1; j < 6; ++j) units.push_back(std::exp(Complex(0.0, kPi * j / 3.0)));
    return units;
  }
  return {-1.0};
}

}  // namespace homsurf
