#pragma once

#include <functional>
#include <map>
#include <vector>

#include "homsurf/lattice.hpp"
#include "homsurf/points.hpp"

namespace homsurf {

inline constexpr int kLaurentDegreeBound = 8;

// S_c = C^2 / pi, pi generated by (z + 1, c w) and the w-translations by the lattice.
struct SCData {
  Lattice2 lattice;
  Complex c{1.0, 0.0};
};

// Throws InputError unless c Lambda = Lambda.
SCData make_sc_data(const Lattice2& lattice, Complex c);

enum class SCCase { Trivial, Sign, Root };  // c = 1, c = -1, c = e^{2 pi i p/q} != +-1

struct SCBiholomorphism {
  SCCase kind = SCCase::Trivial;
  Rational turn;  // p/q with c = e^{2 pi i p/q}
  int sign = 1;
  Complex z0{0.0, 0.0};
  Complex b{1.0, 0.0};
  Complex lambda0{0.0, 0.0};
  std::map<int, Complex> f;  // Laurent polynomial in s = e^{2 pi i z}
};

using PlaneMap = std::function<AffinePoint(const AffinePoint&)>;

SCCase sc_case(const SCData& d);
// c as p/q with q <= 1000, p/q in (-1/2, 1/2].
Rational sc_turn(const SCData& d);

std::vector<PlaneMap> deck_generators(const SCData& d);
AffinePoint deck_apply(const SCData& d, std::int64_t k, Complex lambda, const AffinePoint& x);

SCBiholomorphism sc_biholomorphism(const SCData& d, int sign, Complex z0, Complex b, Complex lambda0,
                                   std::map<int, Complex> f = {});
AffinePoint biholo_apply(const SCBiholomorphism& phi, const AffinePoint& x);

// phi g phi^{-1} lies in pi for every deck generator g, tested as phi(g x) = h(phi(x)) with h = (k, lambda)
// extracted from the first sample and checked on the rest.
bool normalizes_deck(const PlaneMap& phi, const SCData& d, Rng& rng, int samples = 50);
bool normalizes_deck(const SCBiholomorphism& phi, const SCData& d, Rng& rng, int samples = 50);

}  // namespace homsurf
