#include "doctest.h"

#include <cmath>

#include "homsurf/divisor.hpp"
#include "homsurf/exppoly.hpp"

using namespace homsurf;

namespace {

Divisor div(std::vector<DivisorPoint> pts) { return Divisor(std::move(pts)); }

// Zeros of c1 e^{a z} + c2 e^{b z}: (log(-c1/c2) + 2 pi i k) / (b - a).
std::vector<Complex> two_term_roots(Complex a, Complex c1, Complex b, Complex c2, int count) {
  std::vector<Complex> roots;
  Complex base = std::log(-c1 / c2);
  for (int k = -count; k <= count; ++k) roots.push_back((base + kTwoPiI * static_cast<double>(k)) / (b - a));
  return roots;
}

}  // namespace

TEST_CASE("quasiperiod_group examples") {
  CHECK(quasiperiod_group(div({{5.0, 1}})).kind == QuasiperiodGroup::Kind::AllOfC);
  CHECK(quasiperiod_group(div({{0.0, 2}})).kind == QuasiperiodGroup::Kind::Trivial);
  auto q = quasiperiod_group(div({{0.0, 1}, {kTwoPiI, 1}}));
  REQUIRE(q.kind == QuasiperiodGroup::Kind::RankOne);
  CHECK(std::abs(q.generator - 1.0) < 1e-12);
  auto r = quasiperiod_group(div({{0.0, 1}, {1.0, 1}}));
  REQUIRE(r.kind == QuasiperiodGroup::Kind::RankOne);
  CHECK(std::abs(r.generator - kTwoPiI) < 1e-12);
  CHECK(quasiperiod_group(div({{0.0, 1}, {1.0, 1}, {std::sqrt(2.0), 1}})).kind == QuasiperiodGroup::Kind::Trivial);
  CHECK_THROWS_AS(quasiperiod_group(Divisor()), InputError);
}

TEST_CASE("quasiperiod generator matches root differences") {
  // Zeros of c1 + c2 e^{z} are spaced by 2 pi i.
  auto roots = two_term_roots(0.0, 2.0, 1.0, Complex(1, 1), 2);
  auto q = quasiperiod_group(div({{0.0, 1}, {1.0, 1}}));
  CHECK(std::abs((roots[1] - roots[0]) - q.generator) < 1e-12);
}

TEST_CASE("quasiperiod translation invariance and rescaling") {
  Rng rng(23);
  for (int i = 0; i < 50; ++i) {
    std::vector<DivisorPoint> pts{{0.0, 1}};
    int k = 1;
    for (int j = 0; j < random_int(rng, 1, 3); ++j) {
      k += random_int(rng, 1, 4);
      pts.push_back({kTwoPiI * static_cast<double>(k), 1});
    }
    auto d = div(pts);
    auto q = quasiperiod_group(d);
    REQUIRE(q.kind == QuasiperiodGroup::Kind::RankOne);
    auto shifted = quasiperiod_group(d.translated(random_complex(rng, 3.0)));
    CHECK(std::abs(shifted.generator - q.generator) < 1e-9);
    Complex mu = random_nonzero(rng);
    auto scaled = quasiperiod_group(d.scaled(mu));
    REQUIRE(scaled.kind == QuasiperiodGroup::Kind::RankOne);
    // Generators agree up to sign.
    Complex expect = q.generator / mu;
    CHECK(std::min(std::abs(scaled.generator - expect), std::abs(scaled.generator + expect)) < 1e-9);
  }
}

TEST_CASE("weight") {
  CHECK(std::abs(weight(div({{0.0, 1}, {kTwoPiI, 1}}), 1.0) - 1.0) < 1e-12);
  CHECK(weight(div({{0.0, 2}}), 0.0) == Complex(1.0));
  auto d = div({{Complex(0, kPi), 1}, {Complex(0, 3 * kPi), 1}});
  CHECK(std::abs(weight(d, 1.0) + 1.0) < 1e-12);
  Rng rng(29);
  for (int i = 0; i < 5; ++i) {
    auto f = random_member(d, rng);
    CHECK(rel_diff(f(1.0) / f(0.0), weight(d, 1.0)) < 1e-9);
  }
  CHECK_THROWS_WITH_AS(weight(d, 0.5), "not a quasiperiod", InputError);
  CHECK_THROWS_AS(weight(div({{0.0, 2}}), 1.0), InputError);
}

TEST_CASE("weight multiplicative") {
  auto d = div({{0.3, 1}, {Complex(0.3, 2 * kPi), 1}, {Complex(0.3, 6 * kPi), 1}});
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b)
      CHECK(rel_diff(weight(d, a + b), weight(d, a) * weight(d, b)) < 1e-9);
}

TEST_CASE("equivalent_mod_rescaling") {
  auto mu = equivalent_mod_rescaling(div({{1.0, 1}, {2.0, 1}}), div({{2.0, 1}, {4.0, 1}}));
  REQUIRE(mu);
  CHECK(std::abs(*mu - 2.0) < 1e-12);
  auto one = equivalent_mod_rescaling(div({{0.0, 1}, {1.0, 1}}), div({{0.0, 1}, {1.0, 1}}));
  REQUIRE(one);
  CHECK(std::abs(*one - 1.0) < 1e-12);
  CHECK_FALSE(equivalent_mod_rescaling(div({{1.0, 1}, {2.0, 1}}), div({{1.0, 1}, {3.0, 1}})));
}

TEST_CASE("equivalent_mod_rescaling is an equivalence on orbits") {
  Rng rng(31);
  for (int i = 0; i < 50; ++i) {
    std::vector<DivisorPoint> pts;
    for (int j = 0; j < 4; ++j) pts.push_back({random_complex(rng, 2.0), random_int(rng, 1, 2)});
    auto d = div(pts);
    Complex m1 = random_nonzero(rng), m2 = random_nonzero(rng);
    auto e = d.scaled(m1), f = e.scaled(m2);
    CHECK(equivalent_mod_rescaling(d, d));
    auto de = equivalent_mod_rescaling(d, e);
    auto ed = equivalent_mod_rescaling(e, d);
    auto df = equivalent_mod_rescaling(d, f);
    REQUIRE(de);
    REQUIRE(ed);
    REQUIRE(df);
    CHECK(d.scaled(*de).same_as(e, 1e-8));
    CHECK(e.scaled(*ed).same_as(d, 1e-8));
    CHECK(d.scaled(*df).same_as(f, 1e-8));
  }
}

TEST_CASE("equivalent_mod_affine") {
  auto r = equivalent_mod_affine(div({{0.0, 1}, {1.0, 1}}), div({{5.0, 1}, {7.0, 1}}));
  REQUIRE(r);
  CHECK(std::abs(r->first - 2.0) < 1e-12);
  CHECK(std::abs(r->second - 5.0) < 1e-12);
  auto d = div({{Complex(1, 2), 1}, {3.0, 2}});
  auto same = equivalent_mod_affine(d, d);
  REQUIRE(same);
  CHECK(std::abs(same->first - 1.0) < 1e-12);
  CHECK(std::abs(same->second) < 1e-12);
  CHECK_FALSE(equivalent_mod_affine(div({{0.0, 2}}), div({{0.0, 1}, {1.0, 1}})));
}
