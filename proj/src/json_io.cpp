#include "homsurf/json_io.hpp"

#include <cmath>

#include "homsurf/d1.hpp"

namespace homsurf {

namespace {

[[noreturn]] void bad(const std::string& what) { throw InputError("invalid JSON: " + what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

std::vector<Complex> complex_list(const Json& j) {
  if (!j.is_array()) bad("expected an array of complex numbers");
  std::vector<Complex> out;
  for (const auto& e : j) out.push_back(complex_from_json(e));
  return out;
}

Json complex_list_to_json(const std::vector<Complex>& v) {
  Json out = Json::array();
  for (Complex c : v) out.push_back(complex_to_json(c));
  return out;
}

ProjPoint proj_from_json(const Json& j) {
  auto v = complex_list(j);
  if (v.size() != 2) bad("projective line point needs two homogeneous coordinates");
  if (std::abs(v[0]) == 0.0 && std::abs(v[1]) == 0.0) bad("homogeneous coordinates are all zero");
  return {v[0], v[1]};
}

Json proj_to_json(const ProjPoint& p) { return complex_list_to_json({p.z1(), p.z2()}); }

AffinePoint affine_from_json(const Json& j) {
  auto v = complex_list(j);
  if (v.size() != 2) bad("affine point needs two coordinates");
  return {v[0], v[1]};
}

Json affine_to_json(const AffinePoint& p) { return complex_list_to_json({p.z, p.w}); }

int int_field(const Json& j, const char* key, int fallback) {
  if (!j.is_object() || !j.contains(key)) return fallback;
  if (!j.at(key).is_number_integer()) bad(std::string("\"") + key + "\" must be an integer");
  return j.at(key).get<int>();
}

Complex complex_field(const Json& j, const char* key, Complex fallback) {
  if (!j.is_object() || !j.contains(key)) return fallback;
  return complex_from_json(j.at(key));
}

Json vec2_list_to_json(const std::vector<Vec2>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(complex_list_to_json({x[0], x[1]}));
  return out;
}

Json classify_c2(const Json& gens) {
  std::vector<Vec2> v;
  for (const auto& g : gens) {
    auto p = affine_from_json(g);
    v.emplace_back(p.z, p.w);
  }
  auto c = classify_D1_subgroup(v);
  Json out{{"label", c.label.name()}, {"rank", c.rank}, {"normalized_generators", vec2_list_to_json(c.normalized_generators)},
           {"normalizer", {{"matrix", matrix_to_json(c.normalizer)}}}};
  if (c.label.index >= 3 && c.label.index <= 5) out["tau"] = complex_to_json(c.label.tau);
  if (c.label.index == 5) {
    out["sigma"] = complex_to_json(c.label.sigma);
    out["sigma_warning"] = c.sigma_warning;
  }
  return out;
}

Json classify_uaff(const Json& gens) {
  std::vector<UAffElement> v;
  for (const auto& g : gens) {
    auto p = affine_from_json(g);
    v.push_back({p.z, p.w});
  }
  auto c = classify_subgroup(v);
  const D2Label& l = c.label;
  Json normalized = Json::array();
  for (const auto& g : c.normalized_generators) normalized.push_back(complex_list_to_json({g.a, g.b}));
  Json params = Json::object();
  switch (l.index) {
    case 2:
      params["tau"] = complex_to_json(l.tau);
      break;
    case 3:
    case 7:
    case 9:
    case 10:
    case 11:
    case 12:
    case 13:
      params["k"] = l.k;
      break;
    case 4:
      params["k"] = l.k;
      params["b"] = complex_to_json(l.b);
      break;
    case 5:
      params["k"] = l.k;
      params["b"] = complex_to_json(l.b);
      params["tau"] = complex_to_json(l.tau);
      break;
    case 6:
      params["a"] = complex_to_json(l.a);
      break;
    case 8:
      params["k"] = l.k;
      params["tau"] = complex_to_json(l.tau);
      break;
    case 14:
      params["a1"] = complex_to_json(l.a1);
      params["a2"] = complex_to_json(l.a2);
      break;
    default:
      break;
  }
  return {{"label", l.name()},
          {"parameters", params},
          {"normalized_generators", normalized},
          {"normalizer", {{"gamma", complex_to_json(c.normalizer.gamma)}, {"beta", complex_to_json(c.normalizer.beta)}}}};
}

Json classify_qd(const Json& input, const Json& gens) {
  Divisor d = divisor_from_json(field(input, "divisor"));
  std::vector<CentralizerElement> v;
  for (const auto& g : gens) {
    auto p = affine_from_json(g);
    v.push_back({p.z, p.w});
  }
  auto c = classify_pi(v, d);
  const BBeta1Label& l = c.label;
  Json normalized = Json::array();
  for (const auto& g : l.generators()) normalized.push_back(complex_list_to_json({g.varpi, g.s}));
  return {{"label", l.name()},
          {"parameters",
           {{"n", l.n}, {"s", complex_to_json(l.s)}, {"tau", complex_to_json(l.tau)}, {"delta_rank", l.delta_rank},
            {"divisor", divisor_to_json(l.divisor)}}},
          {"normalized_generators", normalized},
          {"normalizer", {{"mu", complex_to_json(c.mu)}, {"nu", complex_to_json(c.nu)}, {"t", complex_to_json(c.t)}}}};
}

BBeta1Label::Example example_letter(char c) {
  using E = BBeta1Label::Example;
  static constexpr E kLetters[] = {E::A, E::B, E::C, E::D, E::E, E::F, E::G, E::H, E::I};
  if (c < 'A' || c > 'I') throw InputError("unknown cover label");
  return kLetters[c - 'A'];
}

void require_family(const FamilyId& f, Family want, const std::string& label) {
  if (f.label != want) throw InputError("cover " + label + " does not apply to family " + f.name());
}

const AffinePoint& affine_of(const SurfacePoint& x, const std::string& label) {
  auto p = std::get_if<AffinePoint>(&x);
  if (!p) throw InputError("cover " + label + " needs a point of C^2");
  return *p;
}

std::optional<int> suffix_index(const std::string& label, const std::string& prefix) {
  if (label.rfind(prefix, 0) != 0) return std::nullopt;
  try {
    std::size_t used = 0;
    int k = std::stoi(label.substr(prefix.size()), &used);
    if (used != label.size() - prefix.size()) return std::nullopt;
    return k;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array()) {
    if (j.size() != 2 || !j[0].is_number() || !j[1].is_number()) bad("complex number must be [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
  }
  if (j.is_object()) {
    Complex z = 0.0;
    bool any = false;
    for (const auto& [key, value] : j.items()) {
      if (!value.is_number()) bad("complex component \"" + key + "\" must be a number");
      double v = value.get<double>();
      if (key == "re")
        z += v;
      else if (key == "im")
        z += Complex(0.0, v);
      else if (key == "pii")
        z += Complex(0.0, kPi * v);
      else if (key == "twopii")
        z += kTwoPiI * v;
      else
        bad("unknown complex component \"" + key + "\"");
      any = true;
    }
    if (!any) bad("empty complex number");
    return z;
  }
  bad("expected a complex number");
}

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Divisor divisor_from_json(const Json& j) {
  if (!j.is_array()) bad("divisor must be an array");
  std::vector<DivisorPoint> pts;
  for (const auto& e : j) {
    if (e.is_object() && e.contains("point"))
      pts.push_back({complex_from_json(e.at("point")), int_field(e, "mult", 1)});
    else
      pts.push_back({complex_from_json(e), 1});
  }
  return Divisor(std::move(pts));
}

Json divisor_to_json(const Divisor& d) {
  Json out = Json::array();
  for (const auto& p : d.points()) out.push_back({{"point", complex_to_json(p.point)}, {"mult", p.mult}});
  return out;
}

ExpPoly exppoly_from_json(const Json& j) {
  if (j.is_number()) return ExpPoly::constant(j.get<double>());
  if (!j.is_array()) bad("exponential polynomial must be an array of terms");
  std::vector<ExpTerm> terms;
  for (const auto& t : j) terms.push_back({complex_from_json(field(t, "frequency")), Polynomial(complex_list(field(t, "poly")))});
  return ExpPoly(std::move(terms));
}

Json exppoly_to_json(const ExpPoly& f) {
  Json out = Json::array();
  for (const auto& t : f.terms())
    out.push_back({{"frequency", complex_to_json(t.frequency)}, {"poly", complex_list_to_json(t.poly.coeffs())}});
  return out;
}

MatX matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) bad("matrix must be a nonempty array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  MatX m(rows, rows);
  for (Eigen::Index r = 0; r < rows; ++r) {
    auto row = complex_list(j[static_cast<std::size_t>(r)]);
    if (static_cast<Eigen::Index>(row.size()) != rows) bad("matrix must be square");
    for (Eigen::Index c = 0; c < rows; ++c) m(r, c) = row[static_cast<std::size_t>(c)];
  }
  return m;
}

Json matrix_to_json(const MatX& m) {
  Json out = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    out.push_back(row);
  }
  return out;
}

FamilyId family_from_json(const std::string& name, const Json& params) {
  FamilyId id = default_family(parse_family(name));
  if (!params.is_null() && !params.is_object()) bad("\"params\" must be an object");
  id.n = int_field(params, "n", id.n);
  id.c = complex_field(params, "c", id.c);
  id.alpha = complex_field(params, "alpha", id.alpha);
  if (params.is_object() && params.contains("divisor")) id.divisor = make_bbeta_divisor(divisor_from_json(params.at("divisor")));
  if (params.is_object() && params.contains("hopf")) id.hopf = complex_from_json(params.at("hopf"));
  id.validate();
  return id;
}

GroupElement element_from_json(const FamilyId& family, const Json& j) {
  auto fam = make_family(family);
  const Payload shape = fam->identity().payload;
  Payload payload;
  if (std::holds_alternative<TupleElement>(shape)) {
    payload = TupleElement{complex_list(j.is_object() ? field(j, "x") : j)};
  } else if (std::holds_alternative<MatrixElement>(shape)) {
    MatrixElement e;
    if (j.contains("matrices"))
      for (const auto& m : j.at("matrices")) e.mats.push_back(matrix_from_json(m));
    else
      e.mats.push_back(matrix_from_json(field(j, "matrix")));
    if (j.contains("x")) e.x = complex_list(j.at("x"));
    payload = std::move(e);
  } else if (std::holds_alternative<OnElement>(shape)) {
    BinaryForm p = complex_list(field(j, "form"));
    if (j.contains("matrix")) {
      payload = OnElement{Mat2(matrix_from_json(j.at("matrix"))), std::move(p), complex_field(j, "lambda", 0.0)};
    } else {
      BGamma sub = family.label == Family::BGamma1   ? BGamma::One
                   : family.label == Family::BGamma2 ? BGamma::Two
                   : family.label == Family::BGamma3 ? BGamma::Three
                                                     : BGamma::Four;
      if (sub == BGamma::Four || family.label == Family::BDelta3 || family.label == Family::BDelta4)
        bad("this family needs \"matrix\" and \"form\"");
      payload = bgamma_element(sub, family.n, family.c, complex_field(j, "lambda", 0.0), complex_field(j, "b", 0.0), std::move(p));
    }
  } else if (std::holds_alternative<UAffElement>(shape)) {
    auto p = j.is_object() ? AffinePoint{complex_from_json(field(j, "a")), complex_from_json(field(j, "b"))} : affine_from_json(j);
    payload = UAffElement{p.z, p.w};
  } else if (std::holds_alternative<GDElement>(shape)) {
    payload = gd_element(family.divisor, complex_from_json(field(j, "t")), exppoly_from_json(field(j, "f")));
  } else {
    payload = rgd_element(family.divisor, complex_from_json(field(j, "t")), complex_field(j, "lambda", 1.0),
                          exppoly_from_json(field(j, "f")));
  }
  GroupElement g{family, std::move(payload)};
  fam->validate(g);
  return g;
}

Json element_to_json(const GroupElement& g) {
  return std::visit(
      [](const auto& e) -> Json {
        using E = std::decay_t<decltype(e)>;
        if constexpr (std::is_same_v<E, TupleElement>) {
          return complex_list_to_json(e.x);
        } else if constexpr (std::is_same_v<E, MatrixElement>) {
          Json mats = Json::array();
          for (const auto& m : e.mats) mats.push_back(matrix_to_json(m));
          return {{"matrices", mats}, {"x", complex_list_to_json(e.x)}};
        } else if constexpr (std::is_same_v<E, OnElement>) {
          return {{"matrix", matrix_to_json(e.g)}, {"form", complex_list_to_json(e.p)}, {"lambda", complex_to_json(e.lambda)}};
        } else if constexpr (std::is_same_v<E, UAffElement>) {
          return complex_list_to_json({e.a, e.b});
        } else if constexpr (std::is_same_v<E, GDElement>) {
          return {{"t", complex_to_json(e.t)}, {"f", exppoly_to_json(e.f)}};
        } else {
          return {{"t", complex_to_json(e.t)}, {"lambda", complex_to_json(e.lambda)}, {"f", exppoly_to_json(e.f)}};
        }
      },
      g.payload);
}

SurfacePoint point_from_json(const FamilyId& family, const Json& j) {
  Rng rng(0);
  const SurfacePoint shape = make_family(family)->random_point(rng);
  return std::visit(
      [&j](const auto& s) -> SurfacePoint {
        using P = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<P, AffinePoint>) {
          return affine_from_json(j);
        } else if constexpr (std::is_same_v<P, Proj2Point>) {
          auto v = complex_list(j);
          if (v.size() != 3) bad("point of P^2 needs three homogeneous coordinates");
          if (std::abs(v[0]) + std::abs(v[1]) + std::abs(v[2]) == 0.0) bad("homogeneous coordinates are all zero");
          return Proj2Point(v[0], v[1], v[2]);
        } else if constexpr (std::is_same_v<P, ProjAffinePoint>) {
          return ProjAffinePoint{proj_from_json(field(j, "z")), complex_from_json(field(j, "w"))};
        } else if constexpr (std::is_same_v<P, ProjPairPoint>) {
          return ProjPairPoint{proj_from_json(field(j, "a")), proj_from_json(field(j, "b"))};
        } else if constexpr (std::is_same_v<P, QuadricPoint>) {
          QuadricPoint q{proj_from_json(field(j, "alpha")), proj_from_json(field(j, "beta"))};
          require_distinct(q.alpha, q.beta);
          return q;
        } else if constexpr (std::is_same_v<P, BundlePoint>) {
          int chart = int_field(j, "chart", 0);
          if (chart != 0 && chart != 1) bad("\"chart\" must be 0 or 1");
          return BundlePoint{chart, complex_from_json(field(j, "z")), complex_from_json(field(j, "w"))};
        } else {
          bad("unsupported point type");
        }
      },
      shape);
}

Json point_to_json(const SurfacePoint& x) {
  return std::visit(
      [](const auto& p) -> Json {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, AffinePoint>) {
          return affine_to_json(p);
        } else if constexpr (std::is_same_v<P, ProjPoint>) {
          return proj_to_json(p);
        } else if constexpr (std::is_same_v<P, Proj2Point>) {
          return complex_list_to_json({p[0], p[1], p[2]});
        } else if constexpr (std::is_same_v<P, ProjAffinePoint>) {
          return {{"z", proj_to_json(p.z)}, {"w", complex_to_json(p.w)}};
        } else if constexpr (std::is_same_v<P, ProjPairPoint>) {
          return {{"a", proj_to_json(p.a)}, {"b", proj_to_json(p.b)}};
        } else if constexpr (std::is_same_v<P, QuadricPoint>) {
          return {{"alpha", proj_to_json(p.alpha)}, {"beta", proj_to_json(p.beta)}};
        } else if constexpr (std::is_same_v<P, BundlePoint>) {
          return {{"chart", p.chart}, {"z", complex_to_json(p.z)}, {"w", complex_to_json(p.w)}};
        } else {
          Json basis = Json::array();
          for (const auto& v : p.subgroup.basis()) basis.push_back(std::vector<double>(v.data(), v.data() + v.size()));
          return {{"representative", affine_to_json(p.representative)}, {"subgroup", basis}};
        }
      },
      x);
}

Json classify_json(const Json& input) {
  const auto& ambient = field(input, "ambient");
  if (!ambient.is_string()) bad("\"ambient\" must be a string");
  const auto& gens = field(input, "generators");
  if (!gens.is_array()) bad("\"generators\" must be an array");
  const std::string tag = ambient.get<std::string>();
  Json out;
  if (tag == "C2")
    out = classify_c2(gens);
  else if (tag == "uaff")
    out = classify_uaff(gens);
  else if (tag == "qd")
    out = classify_qd(input, gens);
  else
    throw InputError("unknown ambient \"" + tag + "\" (expected C2, uaff or qd)");
  out["ambient"] = tag;
  return out;
}

SurfacePoint apply_cover(const std::string& label, const FamilyId& family, const Json& params, const SurfacePoint& x) {
  if (!params.is_null() && !params.is_object()) bad("cover parameters must be an object");
  const std::string b1 = "Bβ1";
  if (label.rfind(b1, 0) == 0 && label.size() > b1.size()) {
    require_family(family, Family::BBeta1, label);
    auto l = make_bbeta1_label(example_letter(label[b1.size()]), *family.divisor, int_field(params, "n", 1),
                               complex_field(params, "s", 0.0), complex_field(params, "tau", kI),
                               int_field(params, "delta_rank", 1));
    if (l.name() != label) throw InputError("divisor and parameters give " + l.name() + ", not " + label);
    return quotient_cover(l).cover(affine_of(x, label));
  }
  if (label == "Bβ2′") {
    require_family(family, Family::BBeta2, label);
    return rgd_quotients(*family.divisor, int_field(params, "n", 1)).cover(affine_of(x, label));
  }
  if (auto k = suffix_index(label, "D2_"); k && *k >= 1 && *k <= 14) {
    require_family(family, Family::D2, label);
    D2Label l;
    l.index = *k;
    l.k = int_field(params, "k", 1);
    l.b = complex_field(params, "b", 0.0);
    l.tau = complex_field(params, "tau", kI);
    l.a = complex_field(params, "a", 1.0);
    l.a1 = complex_field(params, "a1", 1.0);
    l.a2 = complex_field(params, "a2", kI);
    if (!l.abelian()) throw InputError(label + " is a nontrivial bundle without product coordinates");
    const auto& p = affine_of(x, label);
    return product_cover(l, UAffElement{p.z, p.w});
  }
  if (auto k = suffix_index(label, "D1_"); k && *k >= 1 && *k <= 6) {
    require_family(family, Family::D1, label);
    D1Label l;
    l.index = *k;
    l.tau = complex_field(params, "tau", kI);
    l.sigma = complex_field(params, "sigma", 0.0);
    if (*k == 6) {
      auto v3 = complex_list(field(params, "l3")), v4 = complex_list(field(params, "l4"));
      if (v3.size() != 2 || v4.size() != 2) bad("\"l3\" and \"l4\" need two entries");
      l.l3 = Vec2(v3[0], v3[1]);
      l.l4 = Vec2(v4[0], v4[1]);
    }
    std::vector<RealVec> real;
    for (const auto& v : l.generators()) real.push_back(to_real(v[0], v[1]));
    TranslationLattice lattice(integer_span(real).basis);
    return make_quotient_point(affine_of(x, label), lattice);
  }
  if (label == "C2′") {
    require_family(family, Family::C2, label);
    std::vector<RealVec> real;
    for (Complex d : complex_list(field(params, "delta"))) real.push_back(to_real(d, 0.0));
    if (real.empty() || real.size() > 2) bad("\"delta\" needs one or two generators");
    return make_quotient_point(affine_of(x, label), TranslationLattice(integer_span(real).basis));
  }
  if (label == "C9′") {
    require_family(family, Family::C9, label);
    auto q = std::get_if<QuadricPoint>(&x);
    if (!q) throw InputError("cover C9′ needs a pair of distinct points of P^1");
    return quadric_double_cover(*q);
  }
  if (label == "Bδ1′" || label == "Bδ2′") {
    require_family(family, label == "Bδ1′" ? Family::BDelta1 : Family::BDelta2, label);
    Complex lambda = complex_from_json(field(params, "lambda"));
    if (!(std::abs(lambda) > 0.0 && std::abs(lambda) < 1.0)) throw InputError("constraint violated: 0 < |lambda| < 1");
    return hopf_reduce(affine_of(x, label), lambda);
  }
  throw InputError("no covering map for label " + label);
}

}  // namespace homsurf
