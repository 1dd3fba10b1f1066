#include "doctest.h"

#include <cmath>

#include "homsurf/bundles.hpp"
#include "homsurf/split.hpp"

using namespace homsurf;

namespace {

bool close(const AffinePoint& a, const AffinePoint& b, double tol = 1e-12) {
  return std::abs(a.z - b.z) <= tol && std::abs(a.w - b.w) <= tol;
}

const Lattice2 kSquare(1.0, kI);

std::vector<Complex> units_of(const Lattice2& l) {
  std::vector<Complex> u = lattice_units(l.tau());
  u.push_back(1.0);
  return u;
}

SCBiholomorphism random_valid(const SCData& d, Rng& rng) {
  auto units = units_of(d.lattice);
  const SCCase kind = sc_case(d);
  int sign = kind == SCCase::Root ? 1 : (random_int(rng, 0, 1) ? 1 : -1);
  Complex b = units[static_cast<std::size_t>(random_int(rng, 0, static_cast<int>(units.size()) - 1))];
  Complex lambda0 = static_cast<double>(random_int(rng, -3, 3)) * d.lattice.w1() +
                    static_cast<double>(random_int(rng, -3, 3)) * d.lattice.w2();
  std::map<int, Complex> f;
  for (int j = random_int(rng, 0, 3); j > 0; --j) f[random_int(rng, -kLaurentDegreeBound, kLaurentDegreeBound)] = random_complex(rng, 0.1);
  return sc_biholomorphism(d, sign, random_complex(rng), b, lambda0, f);
}

}  // namespace

TEST_CASE("deck generators") {
  auto gens = deck_generators(make_sc_data(kSquare, 1.0));
  REQUIRE(gens.size() == 3);
  AffinePoint x{Complex(0.3, 0.1), Complex(-0.2, 0.5)};
  CHECK(close(gens[0](x), {x.z + 1.0, x.w}));
  CHECK(close(gens[1](x), {x.z, x.w + 1.0}));
  CHECK(close(gens[2](x), {x.z, x.w + kI}));

  SCData d = make_sc_data(kSquare, -1.0);
  gens = deck_generators(d);
  CHECK(close(gens[0](x), {x.z + 1.0, -x.w}));
  CHECK(close(gens[0](gens[0](x)), deck_apply(d, 2, 0.0, x)));
  CHECK(close(gens[0](gens[0](x)), {x.z + 2.0, x.w}));

  CHECK_THROWS_AS(make_sc_data(Lattice2(1.0, Complex(0.3, 1.7)), kI), InputError);
  CHECK_NOTHROW(make_sc_data(kSquare, kI));
  CHECK_NOTHROW(make_sc_data(Lattice2(1.0, std::exp(Complex(0.0, kPi / 3))), std::exp(Complex(0.0, kPi / 3))));
}

TEST_CASE("cases") {
  CHECK(sc_case(make_sc_data(kSquare, 1.0)) == SCCase::Trivial);
  CHECK(sc_case(make_sc_data(kSquare, -1.0)) == SCCase::Sign);
  CHECK(sc_case(make_sc_data(kSquare, kI)) == SCCase::Root);
  Rational t = sc_turn(make_sc_data(kSquare, -kI));
  CHECK(t.num == -1);
  CHECK(t.den == 4);
}

TEST_CASE("biholomorphism examples") {
  AffinePoint x{Complex(0.3, 0.1), Complex(-0.2, 0.5)};
  SCData one = make_sc_data(kSquare, 1.0), minus = make_sc_data(kSquare, -1.0);
  CHECK(close(biholo_apply(sc_biholomorphism(one, 1, 0.0, 1.0, 0.0), x), x));
  CHECK(close(biholo_apply(sc_biholomorphism(minus, 1, 0.0, 1.0, 0.0), x), x));
  CHECK(close(biholo_apply(sc_biholomorphism(minus, 1, 0.0, -1.0, 0.0), x), {x.z, -x.w}));
  auto bad = sc_biholomorphism(make_sc_data(kSquare, kI), -1, 0.0, 1.0, 0.0);
  CHECK_THROWS_AS(biholo_apply(bad, x), InputError);
  auto high = sc_biholomorphism(one, 1, 0.0, 1.0, 0.0, {{9, 1.0}});
  CHECK_THROWS_AS(biholo_apply(high, x), InputError);
}

TEST_CASE("normalizer examples") {
  Rng rng(301);
  SCData minus = make_sc_data(kSquare, -1.0);
  CHECK(normalizes_deck(sc_biholomorphism(minus, 1, 0.0, 1.0, 0.0), minus, rng));
  CHECK(normalizes_deck(sc_biholomorphism(minus, 1, 0.0, -1.0, 0.0), minus, rng));
  // (z, w + 1/3): lambda0 / 2 = 1/3 with lambda0 outside the lattice.
  CHECK_FALSE(normalizes_deck(sc_biholomorphism(minus, 1, 0.0, 1.0, 2.0 / 3.0), minus, rng));
  PlaneMap shift = [](const AffinePoint& x) { return AffinePoint{x.z, x.w + 1.0 / 3.0}; };
  CHECK_FALSE(normalizes_deck(shift, minus, rng));
  CHECK(normalizes_deck(shift, make_sc_data(kSquare, 1.0), rng));
}

TEST_CASE("every valid member normalizes the deck group") {
  Rng rng(303);
  const Complex omega = std::exp(Complex(0.0, kPi / 3));
  const Lattice2 hex(1.0, omega);
  std::vector<SCData> data{make_sc_data(kSquare, 1.0), make_sc_data(kSquare, -1.0), make_sc_data(kSquare, kI),
                           make_sc_data(kSquare, -kI), make_sc_data(hex, omega), make_sc_data(hex, omega * omega),
                           make_sc_data(Lattice2(1.0, Complex(0.2, 1.3)), -1.0)};
  for (const auto& d : data) {
    for (int t = 0; t < 60; ++t) CHECK(normalizes_deck(random_valid(d, rng), d, rng));
  }
}

TEST_CASE("corrupted members fail") {
  Rng rng(307);
  for (Complex c : {Complex(1.0), Complex(-1.0), kI}) {
    SCData d = make_sc_data(kSquare, c);
    for (int t = 0; t < 20; ++t) {
      auto phi = random_valid(d, rng);
      if (sc_case(d) == SCCase::Trivial || t % 2 == 0)
        phi.b *= 1.0 + random_real(rng, 0.05, 0.5);
      else
        phi.lambda0 += Complex(random_real(rng, 0.1, 0.9), random_real(rng, 0.1, 0.9));
      CHECK_FALSE(normalizes_deck(phi, d, rng));
    }
  }
}

TEST_CASE("compositions normalize the deck group") {
  Rng rng(311);
  for (Complex c : {Complex(1.0), Complex(-1.0), kI}) {
    SCData d = make_sc_data(kSquare, c);
    for (int t = 0; t < 30; ++t) {
      auto f = random_valid(d, rng), g = random_valid(d, rng);
      PlaneMap fg = [&](const AffinePoint& x) { return biholo_apply(f, biholo_apply(g, x)); };
      CHECK(normalizes_deck(fg, d, rng));
    }
  }
}
