#include "doctest.h"

#include <cmath>

#include "homsurf/json_io.hpp"

using namespace homsurf;

namespace {

Json parse(const char* text) { return Json::parse(text); }

bool close(Complex a, Complex b, double tol = 1e-12) { return std::abs(a - b) <= tol; }

const AffinePoint& affine(const SurfacePoint& x) { return std::get<AffinePoint>(x); }

}  // namespace

TEST_CASE("complex numbers") {
  CHECK(complex_from_json(parse("2.5")) == Complex(2.5, 0.0));
  CHECK(complex_from_json(parse("[1, -2]")) == Complex(1.0, -2.0));
  CHECK(complex_from_json(parse(R"({"re": 1, "im": 3})")) == Complex(1.0, 3.0));
  CHECK(close(complex_from_json(parse(R"({"twopii": 1})")), kTwoPiI));
  CHECK(close(complex_from_json(parse(R"({"re": 1, "pii": -0.5})")), Complex(1.0, -kPi / 2)));
  CHECK_THROWS_AS(complex_from_json(parse(R"("x")")), InputError);
  CHECK_THROWS_AS(complex_from_json(parse("[1, 2, 3]")), InputError);
  CHECK_THROWS_AS(complex_from_json(parse(R"({"abs": 1})")), InputError);
  CHECK_THROWS_AS(complex_from_json(parse("{}")), InputError);
  Complex z(0.25, -7.0);
  CHECK(complex_from_json(complex_to_json(z)) == z);
}

TEST_CASE("divisors and exponential polynomials") {
  Divisor d = divisor_from_json(parse(R"([0, {"point": {"twopii": 1}, "mult": 2}])"));
  CHECK(d.degree() == 3);
  CHECK(d.multiplicity_at(kTwoPiI) == 2);
  CHECK(divisor_from_json(divisor_to_json(d)).same_as(d));
  ExpPoly f = exppoly_from_json(parse(R"([{"frequency": 0, "poly": [0, 1]}, {"frequency": [0, 1], "poly": [2]}])"));
  CHECK(close(f(Complex(0.5, 0.0)), 0.5 + 2.0 * std::exp(Complex(0.0, 0.5))));
  CHECK(approx_equal(exppoly_from_json(exppoly_to_json(f)), f));
  CHECK(close(exppoly_from_json(parse("3"))(1.0), 3.0));
  CHECK_THROWS_AS(exppoly_from_json(parse(R"([{"poly": [1]}])")), InputError);
}

TEST_CASE("family parameters") {
  auto id = family_from_json("Bg1", parse(R"({"n": 3, "c": 2})"));
  CHECK(id.label == Family::BGamma1);
  CHECK(id.n == 3);
  CHECK(id.c == Complex(2.0, 0.0));
  CHECK(family_from_json("Bb1", parse(R"({"divisor": [{"point": 0, "mult": 2}]})")).divisor->degree() == 2);
  CHECK_THROWS_AS(family_from_json("Bb1", parse(R"({"divisor": [0]})")), InputError);
  CHECK_THROWS_AS(family_from_json("C8", parse(R"({"alpha": 1})")), InputError);
  CHECK_THROWS_AS(family_from_json("Bd1", parse(R"({"hopf": 2})")), InputError);
  CHECK_THROWS_AS(family_from_json("Q7", Json()), InputError);
}

TEST_CASE("elements and points round trip for every family") {
  Rng rng(5);
  for (Family f : all_families()) {
    auto id = default_family(f);
    auto fam = make_family(id);
    for (int i = 0; i < 20; ++i) {
      auto g = fam->random_element(rng);
      Json ej = element_to_json(g);
      // The OnElement form of the B-gamma families is accepted with an explicit matrix.
      auto back = element_from_json(id, ej);
      CHECK_MESSAGE(fam->distance(g, back) < 1e-15, id.name());
      auto x = fam->random_point(rng);
      auto y = point_from_json(id, point_to_json(x));
      CHECK_MESSAGE(fam->point_distance(x, y) < 1e-15, id.name());
    }
  }
}

TEST_CASE("element schemas are checked") {
  auto a3 = default_family(Family::A3);
  CHECK_THROWS_AS(element_from_json(a3, parse(R"({"matrix": [[2, 0], [0, 1]], "x": [0, 0]})")), InputError);
  CHECK_THROWS_AS(element_from_json(default_family(Family::D1), parse("[1, 2, 3]")), InputError);
  CHECK_THROWS_AS(element_from_json(default_family(Family::C2), parse("[1, 0, 0]")), InputError);
  CHECK_THROWS_AS(element_from_json(default_family(Family::A1), parse(R"({"matrix": [[1, 0], [0]]})")), InputError);
  CHECK_THROWS_AS(point_from_json(default_family(Family::C9), parse(R"({"alpha": [1, 1], "beta": [2, 2]})")), InputError);
  CHECK_THROWS_AS(point_from_json(default_family(Family::A1), parse("[0, 0, 0]")), InputError);
  CHECK_THROWS_AS(point_from_json(default_family(Family::BDelta3), parse(R"({"chart": 2, "z": 0, "w": 0})")), InputError);
}

TEST_CASE("act examples") {
  auto d1 = default_family(Family::D1);
  auto y = affine(act(element_from_json(d1, parse("[1, 2]")), point_from_json(d1, parse("[0, 0]"))));
  CHECK(close(y.z, 1.0));
  CHECK(close(y.w, 2.0));

  auto d2 = default_family(Family::D2);
  y = affine(act(element_from_json(d2, parse(R"([{"pii": 1}, 0])")), point_from_json(d2, parse("[0, 1]"))));
  CHECK(close(y.z, Complex(0.0, kPi)));
  CHECK(close(y.w, -1.0));

  auto b1 = family_from_json("Bβ1", parse(R"({"divisor": [{"point": 0, "mult": 2}]})"));
  auto g = element_from_json(b1, parse(R"({"t": 1, "f": [{"frequency": 0, "poly": [0, 1]}]})"));
  y = affine(act(g, point_from_json(b1, parse("[0, 0]"))));
  CHECK(close(y.z, 1.0));
  CHECK(close(y.w, 1.0));

  // f must lie in V_D.
  CHECK_THROWS_AS(element_from_json(b1, parse(R"({"t": 1, "f": [{"frequency": 0, "poly": [0, 0, 1]}]})")), InputError);

  auto bg = family_from_json("Bγ1", parse(R"({"n": 1, "c": 2})"));
  auto e = element_from_json(bg, Json{{"lambda", std::log(2.0)}, {"b", 0}, {"form", {0, 0}}});
  y = affine(act(e, point_from_json(bg, parse("[1, 1]"))));
  CHECK(close(y.z, 2.0, 1e-12));
  CHECK(close(y.w, 4.0, 1e-12));
}

TEST_CASE("classify examples") {
  auto u = classify_json(parse(R"({"ambient": "uaff", "generators": [[0, 1]]})"));
  CHECK(u["label"] == "D2_1");
  auto c = classify_json(parse(R"({"ambient": "C2", "generators": [[1, 0]]})"));
  CHECK(c["label"] == "D1_1");
  CHECK(c["rank"] == 1);
  auto q = classify_json(parse(R"({"ambient": "qd", "divisor": [0, {"twopii": 1}], "generators": [[1, 0], [0, 1]]})"));
  CHECK(q["label"] == "Bβ1D");
  CHECK(q["parameters"]["n"] == 1);
  auto t = classify_json(parse(R"({"ambient": "C2", "generators": [[1, 0], [[0, 1], 0]]})"));
  CHECK(t["label"] == "D1_3");
  CHECK(close(complex_from_json(t["tau"]), kI, 1e-9));
}

TEST_CASE("classify errors") {
  CHECK_THROWS_AS(classify_json(parse(R"({"ambient": "P2", "generators": []})")), InputError);
  CHECK_THROWS_AS(classify_json(parse(R"({"generators": []})")), InputError);
  CHECK_THROWS_AS(classify_json(parse(R"({"ambient": "C2", "generators": [[1, 0], [1.4142135623730951, 0]]})")),
                  ClassificationError);
  CHECK_THROWS_AS(classify_json(parse(R"({"ambient": "qd", "generators": [[1, 0]]})")), InputError);
}

TEST_CASE("covers") {
  auto d2 = default_family(Family::D2);
  AffinePoint x{Complex(0.3, 0.1), Complex(-0.2, 0.4)};
  auto p = affine(apply_cover("D2_1", d2, Json(), x));
  CHECK(close(p.z, x.z));
  CHECK(close(p.w, std::exp(kTwoPiI * std::exp(-x.z) * x.w)));
  CHECK_THROWS_AS(apply_cover("D2_7", d2, Json(), x), InputError);
  CHECK_THROWS_AS(apply_cover("D2_1", default_family(Family::D1), Json(), x), InputError);

  auto d1 = default_family(Family::D1);
  auto a = std::get<QuotientPoint>(apply_cover("D1_2", d1, Json(), AffinePoint{Complex(1.25, 0.5), Complex(-0.75, 0.0)}));
  CHECK(close(a.representative.z, Complex(0.25, 0.5)));
  CHECK(close(a.representative.w, Complex(0.25, 0.0)));

  auto c2 = default_family(Family::C2);
  auto b = std::get<QuotientPoint>(apply_cover("C2′", c2, parse(R"({"delta": [2]})"), AffinePoint{3.0, 1.0}));
  CHECK(close(b.representative.z, 1.0));
  CHECK_THROWS_AS(apply_cover("C2′", c2, Json(), AffinePoint{3.0, 1.0}), InputError);

  auto c9 = default_family(Family::C9);
  auto conic = std::get<Proj2Point>(apply_cover("C9′", c9, Json(), QuadricPoint{ProjPoint::affine(1.0), ProjPoint::affine(-1.0)}));
  CHECK(std::abs(conic[1] * conic[1] - 4.0 * conic[0] * conic[2]) > 1e-6);

  auto bb = default_family(Family::BBeta1);
  auto q = affine(apply_cover("Bβ1D", bb, Json(), x));
  CHECK(close(q.z, std::exp(kTwoPiI * x.z)));
  CHECK(close(q.w, std::exp(kTwoPiI * x.w)));
  CHECK_THROWS_AS(apply_cover("Bβ1B1", bb, Json(), x), InputError);

  auto bd = default_family(Family::BDelta1);
  auto h = affine(apply_cover("Bδ1′", bd, parse(R"({"lambda": 0.5})"), AffinePoint{4.0, 0.0}));
  // Representatives satisfy |lambda| < |x| <= 1.
  CHECK(close(h.z, 1.0));
  CHECK_THROWS_AS(apply_cover("Bδ1′", bd, parse(R"({"lambda": 1.5})"), AffinePoint{4.0, 0.0}), InputError);
  CHECK_THROWS_AS(apply_cover("A1", bd, Json(), x), InputError);
}
