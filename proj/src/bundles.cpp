#include "homsurf/bundles.hpp"

#include <cmath>

namespace homsurf {

namespace {

bool lattice_preserved(const Lattice2& l, Complex u) { return l.preserved_by(u, 1e-8); }

Complex eval_laurent(const std::map<int, Complex>& f, Complex s) {
  Complex acc = 0.0;
  for (const auto& [k, a] : f) acc += a * std::pow(s, k);
  return acc;
}

}  // namespace

SCData make_sc_data(const Lattice2& lattice, Complex c) {
  require_finite(c, "c");
  if (std::abs(c) <= kDefaultEps || !lattice_preserved(lattice, c)) throw InputError("c Lambda != Lambda");
  return {lattice, c};
}

Rational sc_turn(const SCData& d) {
  double t = std::arg(d.c) / (2 * kPi);
  if (t <= -0.5) t += 1.0;
  auto q = rationalize(t, 1000);
  if (!q || std::abs(std::abs(d.c) - 1.0) > 1e-8) throw InputError("c is not a root of unity");
  return *q;
}

SCCase sc_case(const SCData& d) {
  Rational r = sc_turn(d);
  if (r.num == 0) return SCCase::Trivial;
  if (r.den == 2) return SCCase::Sign;
  return SCCase::Root;
}

AffinePoint deck_apply(const SCData& d, std::int64_t k, Complex lambda, const AffinePoint& x) {
  return {x.z + static_cast<double>(k), std::pow(d.c, static_cast<double>(k)) * x.w + lambda};
}

std::vector<PlaneMap> deck_generators(const SCData& d) {
  make_sc_data(d.lattice, d.c);
  const Complex c = d.c, w1 = d.lattice.w1(), w2 = d.lattice.w2();
  return {[c](const AffinePoint& x) { return AffinePoint{x.z + 1.0, c * x.w}; },
          [w1](const AffinePoint& x) { return AffinePoint{x.z, x.w + w1}; },
          [w2](const AffinePoint& x) { return AffinePoint{x.z, x.w + w2}; }};
}

SCBiholomorphism sc_biholomorphism(const SCData& d, int sign, Complex z0, Complex b, Complex lambda0,
                                   std::map<int, Complex> f) {
  SCBiholomorphism phi;
  phi.turn = sc_turn(d);
  phi.kind = sc_case(d);
  phi.sign = sign;
  phi.z0 = z0;
  phi.b = b;
  phi.lambda0 = lambda0;
  phi.f = std::move(f);
  return phi;
}

AffinePoint biholo_apply(const SCBiholomorphism& phi, const AffinePoint& x) {
  if (phi.sign != 1 && phi.sign != -1) throw InputError("sign must be +1 or -1");
  if (std::abs(phi.b) <= kDefaultEps) throw InputError("b must be nonzero");
  for (const auto& [k, a] : phi.f)
    if (std::abs(k) > kLaurentDegreeBound) throw InputError("Laurent degree exceeds 8");
  const Complex s = std::exp(kTwoPiI * x.z);
  const Complex z = static_cast<double>(phi.sign) * x.z + phi.z0;
  switch (phi.kind) {
    case SCCase::Trivial:
      if (phi.turn.num != 0) throw InputError("inconsistent case: c = 1 needs turn 0");
      return {z, phi.b * x.w + eval_laurent(phi.f, s)};
    case SCCase::Sign:
      if (phi.turn.den != 2) throw InputError("inconsistent case: c = -1 needs turn 1/2");
      return {z, phi.b * x.w + phi.lambda0 / 2.0 + std::exp(Complex(0.0, kPi) * x.z) * eval_laurent(phi.f, s)};
    case SCCase::Root: {
      if (phi.sign != 1) throw InputError("inconsistent case: c != +-1 allows only z + z0");
      if (phi.turn.den <= 2) throw InputError("inconsistent case: turn must have denominator above 2");
      const Complex c = std::exp(kTwoPiI * phi.turn.value());
      const Complex twist = std::exp(kTwoPiI * (static_cast<double>(phi.turn.num) / static_cast<double>(phi.turn.den)) * x.z);
      return {z, phi.b * x.w + phi.lambda0 / (1.0 - c) + twist * eval_laurent(phi.f, s)};
    }
  }
  throw InputError("unknown case");
}

bool normalizes_deck(const PlaneMap& phi, const SCData& d, Rng& rng, int samples) {
  const double tol = 1e-8;
  for (const auto& g : deck_generators(d)) {
    std::optional<std::int64_t> k;
    Complex lambda;
    for (int i = 0; i < samples; ++i) {
      AffinePoint x{Complex(random_real(rng, -1.0, 1.0), random_real(rng, -0.1, 0.1)), random_complex(rng)};
      AffinePoint y0 = phi(x), y1 = phi(g(x));
      auto shift = as_integer(y1.z - y0.z, tol);
      if (!shift) return false;
      Complex l = y1.w - std::pow(d.c, static_cast<double>(*shift)) * y0.w;
      double scale = std::max({1.0, std::abs(y0.w), std::abs(y1.w)});
      if (!k) {
        if (!d.lattice.contains(l, tol * scale)) return false;
        k = shift;
        lambda = l;
      } else if (*k != *shift || std::abs(l - lambda) > tol * scale) {
        return false;
      }
    }
  }
  return true;
}

bool normalizes_deck(const SCBiholomorphism& phi, const SCData& d, Rng& rng, int samples) {
  if (phi.kind != sc_case(d)) return false;
  Rational t = sc_turn(d);
  if (phi.kind == SCCase::Root && (t.num * phi.turn.den - phi.turn.num * t.den) % (t.den * phi.turn.den) != 0) return false;
  return normalizes_deck([&phi](const AffinePoint& x) { return biholo_apply(phi, x); }, d, rng, samples);
}

}  // namespace homsurf
