#include "doctest.h"

#include <cmath>

#include "homsurf/exppoly.hpp"

using namespace homsurf;

namespace {

Divisor div(std::vector<DivisorPoint> pts) { return Divisor(std::move(pts)); }

// p(d/dz) f evaluated at z from repeated derivatives.
Complex apply_by_derivatives(const Polynomial& p, const ExpPoly& f, Complex z) {
  Complex acc = 0.0;
  ExpPoly g = f;
  for (int k = 0; k <= p.degree(); ++k) {
    acc += p.coeff(k) * g(z);
    g = g.derivative();
  }
  return acc;
}

Divisor random_divisor(Rng& rng, int max_degree) {
  std::vector<DivisorPoint> pts;
  int deg = random_int(rng, 1, max_degree);
  while (deg > 0) {
    int m = std::min(deg, random_int(rng, 1, 3));
    pts.push_back({random_complex(rng, 3.0), m});
    deg -= m;
  }
  return Divisor(std::move(pts));
}

}  // namespace

TEST_CASE("evaluate") {
  CHECK(evaluate(ExpPoly(), 5.0) == Complex(0.0));
  CHECK(std::abs(evaluate(ExpPoly::polynomial({1.0, 1.0}), 2.0) - 3.0) < 1e-15);
  Complex v = evaluate(ExpPoly::exponential(1.0), Complex(0, kPi));
  CHECK(std::abs(v - std::exp(Complex(0, kPi))) < 1e-15);
  CHECK(std::abs(v + 1.0) < 1e-12);
}

TEST_CASE("translate") {
  auto shifted = translate(ExpPoly::polynomial({0.0, 1.0}), 1.0);
  CHECK(approx_equal(shifted, ExpPoly::polynomial({-1.0, 1.0})));

  auto e = translate(ExpPoly::exponential(1.0), 1.0);
  CHECK(approx_equal(e, ExpPoly::exponential(1.0, std::exp(-1.0))));
  Rng rng(3);
  for (int i = 0; i < 3; ++i) {
    Complex z = random_complex(rng, 2.0);
    CHECK(std::abs(e(z) - std::exp(z - 1.0)) < 1e-12);
  }
  auto f = ExpPoly::term(Complex(0.3, 1), Polynomial({1.0, 2.0, 3.0}));
  CHECK(distance(translate(f, 0.0), f) == 0.0);
}

TEST_CASE("translate properties") {
  Rng rng(11);
  for (int i = 0; i < 100; ++i) {
    auto d = random_divisor(rng, 6);
    auto f = random_member(d, rng);
    Complex s = random_complex(rng), t = random_complex(rng), z = random_complex(rng, 2.0);
    CHECK(distance(translate(translate(f, s), t), translate(f, s + t)) < 1e-9);
    Complex lhs = evaluate(translate(f, t), z), rhs = evaluate(f, z - t);
    CHECK(rel_diff(lhs, rhs) < 1e-9);
  }
}

TEST_CASE("apply_operator examples") {
  DiffOperator d(Polynomial({0.0, 1.0}));
  CHECK(apply_operator(d, ExpPoly::constant(7.0)).is_zero());
  CHECK(apply_operator(monic_polynomial(div({{0.0, 2}})), ExpPoly::polynomial({1.0, 5.0})).is_zero());
  auto p = monic_polynomial(div({{0.0, 1}, {1.0, 1}}));
  CHECK(apply_operator(p, ExpPoly::constant(3.0) + ExpPoly::exponential(1.0, 4.0)).is_zero());
  CHECK_FALSE(apply_operator(p, ExpPoly::exponential(2.0)).is_zero());
}

TEST_CASE("apply_operator agrees with repeated differentiation") {
  Rng rng(5);
  for (int i = 0; i < 50; ++i) {
    auto d = random_divisor(rng, 5);
    auto op = monic_polynomial(d);
    DiffOperator plain(op.monic());
    auto f = ExpPoly::term(random_complex(rng, 2.0), Polynomial({random_complex(rng), random_complex(rng)})) +
             ExpPoly::exponential(random_complex(rng, 2.0), random_complex(rng));
    Complex z = random_complex(rng);
    Complex oracle = apply_by_derivatives(op.monic(), f, z);
    CHECK(rel_diff(apply_operator(op, f)(z), oracle) < 1e-8);
    CHECK(rel_diff(apply_operator(plain, f)(z), oracle) < 1e-8);
  }
}

TEST_CASE("annihilator is exact on V_D") {
  Rng rng(17);
  for (int i = 0; i < 50; ++i) {
    auto d = random_divisor(rng, 8);
    auto op = monic_polynomial(d);
    for (const auto& b : basis_of(d)) CHECK(apply_operator(op, b).is_zero());
    CHECK(apply_operator(op, random_member(d, rng, 5.0)).is_zero());
  }
}

TEST_CASE("apply_operator is linear") {
  Rng rng(19);
  for (int i = 0; i < 50; ++i) {
    auto d = random_divisor(rng, 4);
    DiffOperator op(monic_polynomial(d).monic());
    auto f = random_member(random_divisor(rng, 4), rng);
    auto g = random_member(random_divisor(rng, 4), rng);
    Complex a = random_complex(rng);
    auto lhs = apply_operator(op, a * f + g);
    auto rhs = a * apply_operator(op, f) + apply_operator(op, g);
    CHECK(distance(lhs, rhs) < 1e-9);
  }
}

TEST_CASE("basis_of") {
  auto b = basis_of(div({{0.0, 2}}));
  REQUIRE(b.size() == 2);
  CHECK(approx_equal(b[0], ExpPoly::constant(1.0)));
  CHECK(approx_equal(b[1], ExpPoly::polynomial({0.0, 1.0})));
  auto e = basis_of(div({{0.0, 1}, {kTwoPiI, 1}}));
  REQUIRE(e.size() == 2);
  CHECK(approx_equal(e[1], ExpPoly::exponential(kTwoPiI)));
  CHECK(basis_of(div({{5.0, 1}})).size() == 1);
  CHECK_THROWS_AS(basis_of(Divisor()), InputError);
}

TEST_CASE("contains") {
  auto d = div({{0.0, 2}});
  CHECK(contains(d, ExpPoly::polynomial({3.0, 1.0})));
  CHECK_FALSE(contains(d, ExpPoly::polynomial({0.0, 0.0, 1.0})));
  CHECK(contains(div({{0.0, 1}, {kTwoPiI, 1}}), ExpPoly::exponential(kTwoPiI)));
}

TEST_CASE("monic_polynomial") {
  auto p = monic_polynomial(div({{0.0, 2}})).monic();
  CHECK(p.degree() == 2);
  CHECK(p.coeff(0) == Complex(0.0));
  CHECK(p.coeff(1) == Complex(0.0));
  CHECK(p.coeff(2) == Complex(1.0));
  auto q = monic_polynomial(div({{1.0, 1}, {-1.0, 1}})).monic();
  CHECK(std::abs(q.coeff(0) + 1.0) < 1e-15);
  CHECK(std::abs(q.coeff(1)) < 1e-15);
  auto r = monic_polynomial(div({{0.0, 1}, {kTwoPiI, 1}})).monic();
  CHECK(std::abs(r.coeff(1) + kTwoPiI) < 1e-15);
  CHECK(std::abs(r.coeff(0)) < 1e-15);
  CHECK_THROWS_AS(monic_polynomial(Divisor()), InputError);
}

TEST_CASE("canonical form merges and sorts") {
  auto f = ExpPoly({{Complex(1, 0), Polynomial({1.0})}, {Complex(0, 1), Polynomial({2.0})},
                    {Complex(1, 1e-12), Polynomial({3.0})}});
  REQUIRE(f.terms().size() == 2);
  CHECK(f.terms()[0].frequency == Complex(0, 1));
  CHECK(f.terms()[1].poly.coeff(0) == Complex(4.0));
  CHECK((f - f).is_zero());
}
