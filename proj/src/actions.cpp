#include "homsurf/actions.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

namespace homsurf {

namespace {

struct FamilyInfo {
  Family f;
  const char* name;
  const char* ascii;
};

constexpr FamilyInfo kFamilies[] = {
    {Family::A1, "A1", "A1"},           {Family::A2, "A2", "A2"},           {Family::A3, "A3", "A3"},
    {Family::BBeta1, "Bβ1", "Bb1"},     {Family::BBeta2, "Bβ2", "Bb2"},     {Family::BGamma1, "Bγ1", "Bg1"},
    {Family::BGamma2, "Bγ2", "Bg2"},    {Family::BGamma3, "Bγ3", "Bg3"},    {Family::BGamma4, "Bγ4", "Bg4"},
    {Family::BDelta1, "Bδ1", "Bd1"},    {Family::BDelta2, "Bδ2", "Bd2"},    {Family::BDelta3, "Bδ3", "Bd3"},
    {Family::BDelta4, "Bδ4", "Bd4"},    {Family::C2, "C2", "C2"},           {Family::C3, "C3", "C3"},
    {Family::C5, "C5", "C5"},           {Family::C6, "C6", "C6"},           {Family::C7, "C7", "C7"},
    {Family::C8, "C8", "C8"},           {Family::C9, "C9", "C9"},           {Family::D1, "D1", "D1"},
    {Family::D2, "D2", "D2"},           {Family::D3, "D3", "D3"},
};

BGamma bgamma_sub(Family f) {
  switch (f) {
    case Family::BGamma1:
      return BGamma::One;
    case Family::BGamma2:
      return BGamma::Two;
    case Family::BGamma3:
      return BGamma::Three;
    default:
      return BGamma::Four;
  }
}

double max_abs(const MatX& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

double mat_distance(const MatX& a, const MatX& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return std::numeric_limits<double>::infinity();
  return max_abs(a - b) / std::max({1.0, max_abs(a), max_abs(b)});
}

double tuple_distance(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, rel_diff(a[i], b[i]));
  return d;
}

MatX random_matrix(Rng& rng, int dim, bool unimodular) {
  for (;;) {
    MatX m(dim, dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) m(i, j) = random_complex(rng);
    Complex det = m.determinant();
    if (std::abs(det) < 0.2) continue;
    if (unimodular) m /= std::pow(det, 1.0 / dim);
    return m;
  }
}

ProjPoint random_proj(Rng& rng) { return {random_complex(rng), random_complex(rng)}; }

void require_size(std::size_t got, std::size_t want, const char* what) {
  if (got != want) throw InputError(std::string("payload for ") + what + " has the wrong size");
}

void require_square(const MatX& m, int dim) {
  if (m.rows() != dim || m.cols() != dim) throw InputError("matrix has the wrong dimension");
  require_invertible(m);
}

void require_unimodular(const MatX& m) {
  if (std::abs(m.determinant() - 1.0) > 1e-8) throw InputError("matrix must have determinant 1");
}

void require_nonzero(Complex a, const char* what) {
  if (std::abs(a) <= kDefaultEps) throw InputError(std::string(what) + " must be nonzero");
}

Mat2 as_mat2(const MatX& m) { return Mat2(m); }

template <class E, class P>
struct Ops {
  std::function<E()> identity;
  std::function<E(const E&, const E&)> multiply;
  std::function<E(const E&)> inverse;
  std::function<P(const E&, const P&)> act;
  std::function<double(const E&, const E&)> distance;
  std::function<double(const P&, const P&)> point_distance;
  std::function<E(Rng&)> random_element;
  std::function<P(Rng&)> random_point;
  std::function<void(const E&)> validate = [](const E&) {};
  bool quotient_points = false;
};

template <class E, class P>
class TypedFamily final : public ActionFamily {
 public:
  TypedFamily(FamilyId id, Ops<E, P> ops) : ActionFamily(std::move(id)), ops_(std::move(ops)) {}

  GroupElement identity() const override { return wrap(ops_.identity()); }

  GroupElement multiply(const GroupElement& g, const GroupElement& h) const override {
    return wrap(ops_.multiply(payload(g), payload(h)));
  }

  GroupElement inverse(const GroupElement& g) const override { return wrap(ops_.inverse(payload(g))); }

  SurfacePoint act(const GroupElement& g, const SurfacePoint& x) const override {
    const E& e = payload(g);
    if (auto p = std::get_if<P>(&x)) return ops_.act(e, *p);
    if constexpr (std::is_same_v<P, AffinePoint>) {
      if (auto q = std::get_if<QuotientPoint>(&x); q && ops_.quotient_points)
        return make_quotient_point(ops_.act(e, q->representative), q->subgroup);
    }
    throw InputError("point type does not match the surface of " + id().name());
  }

  double distance(const GroupElement& g, const GroupElement& h) const override {
    return ops_.distance(payload(g), payload(h));
  }

  double point_distance(const SurfacePoint& x, const SurfacePoint& y) const override {
    auto p = std::get_if<P>(&x);
    auto q = std::get_if<P>(&y);
    if (p && q) return ops_.point_distance(*p, *q);
    auto a = std::get_if<QuotientPoint>(&x);
    auto b = std::get_if<QuotientPoint>(&y);
    if (a && b) return same_quotient_point(*a, *b) ? 0.0 : std::max(1e-8, affine_distance(a->representative, b->representative));
    throw InputError("point type does not match the surface of " + id().name());
  }

  GroupElement random_element(Rng& rng) const override { return wrap(ops_.random_element(rng)); }
  SurfacePoint random_point(Rng& rng) const override { return ops_.random_point(rng); }

  void validate(const GroupElement& g) const override { (void)payload(g); }

 private:
  const E& payload(const GroupElement& g) const {
    if (!g.family.same_as(id())) throw InputError("family mismatch: " + g.family.name() + " vs " + id().name());
    auto e = std::get_if<E>(&g.payload);
    if (!e) throw InputError("payload does not match family " + id().name());
    ops_.validate(*e);
    return *e;
  }

  GroupElement wrap(E e) const { return {id(), std::move(e)}; }

  Ops<E, P> ops_;
};

template <class E, class P>
std::unique_ptr<ActionFamily> build(const FamilyId& id, Ops<E, P> ops) {
  return std::make_unique<TypedFamily<E, P>>(id, std::move(ops));
}

double quadric_distance(const QuadricPoint& a, const QuadricPoint& b) {
  return std::max(proj_distance(a.alpha, b.alpha), proj_distance(a.beta, b.beta));
}

QuadricPoint random_quadric(Rng& rng) {
  for (;;) {
    QuadricPoint q{random_proj(rng), random_proj(rng)};
    if (proj_distance(q.alpha, q.beta) > 0.1) return q;
  }
}

AffinePoint random_nonzero_point(Rng& rng) {
  for (;;) {
    AffinePoint x{random_complex(rng), random_complex(rng)};
    if (std::hypot(std::abs(x.z), std::abs(x.w)) > 0.1) return x;
  }
}

double hopf_distance(const AffinePoint& a, const AffinePoint& b, Complex hopf) {
  AffinePoint x = hopf_reduce(a, hopf), y = hopf_reduce(b, hopf);
  auto d = [](const AffinePoint& p, const AffinePoint& q) { return std::hypot(std::abs(p.z - q.z), std::abs(p.w - q.w)); };
  AffinePoint ys{y.z * hopf, y.w * hopf}, xs{x.z * hopf, x.w * hopf};
  return std::min({d(x, y), d(x, ys), d(xs, y)});
}

// --- Matrix groups ------------------------------------------------------------------------------

Ops<MatrixElement, AffinePoint> affine_plane_ops(bool special) {
  Ops<MatrixElement, AffinePoint> o;
  o.identity = [] { return MatrixElement{{MatX(Mat2::Identity())}, {0.0, 0.0}}; };
  o.multiply = [](const MatrixElement& g, const MatrixElement& h) {
    Vec2 v = as_mat2(g.mats[0]) * Vec2(h.x[0], h.x[1]) + Vec2(g.x[0], g.x[1]);
    return MatrixElement{{g.mats[0] * h.mats[0]}, {v[0], v[1]}};
  };
  o.inverse = [](const MatrixElement& g) {
    Mat2 inv = as_mat2(g.mats[0]).inverse();
    Vec2 v = -(inv * Vec2(g.x[0], g.x[1]));
    return MatrixElement{{MatX(inv)}, {v[0], v[1]}};
  };
  o.act = [](const MatrixElement& g, const AffinePoint& p) {
    Vec2 v = as_mat2(g.mats[0]) * Vec2(p.z, p.w) + Vec2(g.x[0], g.x[1]);
    return AffinePoint{v[0], v[1]};
  };
  o.distance = [](const MatrixElement& g, const MatrixElement& h) {
    return std::max(mat_distance(g.mats[0], h.mats[0]), tuple_distance(g.x, h.x));
  };
  o.point_distance = affine_distance;
  o.random_element = [special](Rng& rng) {
    return MatrixElement{{random_matrix(rng, 2, special)}, {random_complex(rng), random_complex(rng)}};
  };
  o.random_point = [](Rng& rng) { return AffinePoint{random_complex(rng), random_complex(rng)}; };
  o.validate = [special](const MatrixElement& g) {
    require_size(g.mats.size(), 1, "affine plane");
    require_size(g.x.size(), 2, "affine plane");
    require_square(g.mats[0], 2);
    if (special) require_unimodular(g.mats[0]);
  };
  return o;
}

// PSL(2) on P^1 paired with another factor stored in the same payload.
template <class P>
Ops<MatrixElement, P> projective_product_ops(
    std::function<MatrixElement(const MatrixElement&, const MatrixElement&)> multiply,
    std::function<MatrixElement(const MatrixElement&)> inverse, std::function<P(const MatrixElement&, const P&)> act,
    std::function<double(const P&, const P&)> pdist, std::function<P(Rng&)> rpoint,
    std::function<std::vector<Complex>(Rng&)> rscalars, std::size_t mats, std::size_t scalars,
    std::vector<Complex> identity_scalars, std::function<void(const MatrixElement&)> extra = {}) {
  Ops<MatrixElement, P> o;
  o.identity = [mats, identity_scalars] {
    return MatrixElement{std::vector<MatX>(mats, MatX(Mat2::Identity())), identity_scalars};
  };
  o.multiply = std::move(multiply);
  o.inverse = std::move(inverse);
  o.act = std::move(act);
  o.distance = [](const MatrixElement& g, const MatrixElement& h) {
    double d = tuple_distance(g.x, h.x);
    for (std::size_t i = 0; i < g.mats.size(); ++i) d = std::max(d, projective_matrix_distance(g.mats[i], h.mats[i]));
    return d;
  };
  o.point_distance = std::move(pdist);
  o.random_element = [mats, rscalars](Rng& rng) {
    MatrixElement e;
    for (std::size_t i = 0; i < mats; ++i) e.mats.push_back(random_matrix(rng, 2, true));
    e.x = rscalars(rng);
    return e;
  };
  o.random_point = std::move(rpoint);
  o.validate = [mats, scalars, extra](const MatrixElement& g) {
    require_size(g.mats.size(), mats, "projective product");
    require_size(g.x.size(), scalars, "projective product");
    for (const auto& m : g.mats) require_square(m, 2);
    if (extra) extra(g);
  };
  return o;
}

std::unique_ptr<ActionFamily> make_a1(const FamilyId& id) {
  Ops<MatrixElement, Proj2Point> o;
  o.identity = [] { return MatrixElement{{MatX(Mat3::Identity())}, {}}; };
  o.multiply = [](const MatrixElement& g, const MatrixElement& h) { return MatrixElement{{g.mats[0] * h.mats[0]}, {}}; };
  o.inverse = [](const MatrixElement& g) { return MatrixElement{{g.mats[0].inverse()}, {}}; };
  o.act = [](const MatrixElement& g, const Proj2Point& p) { return projective_act(Mat3(g.mats[0]), p); };
  o.distance = [](const MatrixElement& g, const MatrixElement& h) { return projective_matrix_distance(g.mats[0], h.mats[0]); };
  o.point_distance = [](const Proj2Point& a, const Proj2Point& b) { return proj_distance(a, b); };
  o.random_element = [](Rng& rng) { return MatrixElement{{random_matrix(rng, 3, true)}, {}}; };
  o.random_point = [](Rng& rng) { return Proj2Point(random_complex(rng), random_complex(rng), random_complex(rng)); };
  o.validate = [](const MatrixElement& g) {
    require_size(g.mats.size(), 1, "A1");
    require_size(g.x.size(), 0, "A1");
    require_square(g.mats[0], 3);
  };
  return build(id, std::move(o));
}

std::unique_ptr<ActionFamily> make_c5(const FamilyId& id) {
  return build(id, projective_product_ops<ProjAffinePoint>(
                       [](const MatrixElement& g, const MatrixElement& h) {
                         return MatrixElement{{g.mats[0] * h.mats[0]}, {g.x[0] + h.x[0]}};
                       },
                       [](const MatrixElement& g) { return MatrixElement{{g.mats[0].inverse()}, {-g.x[0]}}; },
                       [](const MatrixElement& g, const ProjAffinePoint& p) {
                         return ProjAffinePoint{mobius_act(as_mat2(g.mats[0]), p.z), p.w + g.x[0]};
                       },
                       [](const ProjAffinePoint& a, const ProjAffinePoint& b) {
                         return std::max(proj_distance(a.z, b.z), rel_diff(a.w, b.w));
                       },
                       [](Rng& rng) { return ProjAffinePoint{random_proj(rng), random_complex(rng)}; },
                       [](Rng& rng) { return std::vector<Complex>{random_complex(rng)}; }, 1, 1, {0.0}));
}

std::unique_ptr<ActionFamily> make_c6(const FamilyId& id) {
  return build(id, projective_product_ops<ProjAffinePoint>(
                       [](const MatrixElement& g, const MatrixElement& h) {
                         return MatrixElement{{g.mats[0] * h.mats[0]}, {g.x[0] * h.x[0], g.x[0] * h.x[1] + g.x[1]}};
                       },
                       [](const MatrixElement& g) {
                         return MatrixElement{{g.mats[0].inverse()}, {1.0 / g.x[0], -g.x[1] / g.x[0]}};
                       },
                       [](const MatrixElement& g, const ProjAffinePoint& p) {
                         return ProjAffinePoint{mobius_act(as_mat2(g.mats[0]), p.z), g.x[0] * p.w + g.x[1]};
                       },
                       [](const ProjAffinePoint& a, const ProjAffinePoint& b) {
                         return std::max(proj_distance(a.z, b.z), rel_diff(a.w, b.w));
                       },
                       [](Rng& rng) { return ProjAffinePoint{random_proj(rng), random_complex(rng)}; },
                       [](Rng& rng) { return std::vector<Complex>{random_nonzero(rng), random_complex(rng)}; }, 1, 2,
                       {1.0, 0.0}, [](const MatrixElement& g) { require_nonzero(g.x[0], "affine scale"); }));
}

std::unique_ptr<ActionFamily> make_c7(const FamilyId& id) {
  return build(id, projective_product_ops<ProjPairPoint>(
                       [](const MatrixElement& g, const MatrixElement& h) {
                         return MatrixElement{{g.mats[0] * h.mats[0], g.mats[1] * h.mats[1]}, {}};
                       },
                       [](const MatrixElement& g) {
                         return MatrixElement{{g.mats[0].inverse(), g.mats[1].inverse()}, {}};
                       },
                       [](const MatrixElement& g, const ProjPairPoint& p) {
                         return ProjPairPoint{mobius_act(as_mat2(g.mats[0]), p.a), mobius_act(as_mat2(g.mats[1]), p.b)};
                       },
                       [](const ProjPairPoint& a, const ProjPairPoint& b) {
                         return std::max(proj_distance(a.a, b.a), proj_distance(a.b, b.b));
                       },
                       [](Rng& rng) { return ProjPairPoint{random_proj(rng), random_proj(rng)}; },
                       [](Rng&) { return std::vector<Complex>{}; }, 2, 0, {}));
}

std::unique_ptr<ActionFamily> make_c9(const FamilyId& id) {
  return build(id, projective_product_ops<QuadricPoint>(
                       [](const MatrixElement& g, const MatrixElement& h) { return MatrixElement{{g.mats[0] * h.mats[0]}, {}}; },
                       [](const MatrixElement& g) { return MatrixElement{{g.mats[0].inverse()}, {}}; },
                       [](const MatrixElement& g, const QuadricPoint& p) { return quadric_act(as_mat2(g.mats[0]), p); },
                       quadric_distance, random_quadric, [](Rng&) { return std::vector<Complex>{}; }, 1, 0, {}));
}

std::unique_ptr<ActionFamily> make_bdelta_linear(const FamilyId& id, bool special) {
  Ops<MatrixElement, AffinePoint> o;
  const auto hopf = id.hopf;
  o.identity = [] { return MatrixElement{{MatX(Mat2::Identity())}, {}}; };
  o.multiply = [](const MatrixElement& g, const MatrixElement& h) { return MatrixElement{{g.mats[0] * h.mats[0]}, {}}; };
  o.inverse = [](const MatrixElement& g) { return MatrixElement{{g.mats[0].inverse()}, {}}; };
  o.act = [hopf](const MatrixElement& g, const AffinePoint& p) { return bdelta_act(as_mat2(g.mats[0]), p, hopf); };
  o.distance = [](const MatrixElement& g, const MatrixElement& h) { return mat_distance(g.mats[0], h.mats[0]); };
  if (hopf)
    o.point_distance = [h = *hopf](const AffinePoint& a, const AffinePoint& b) { return hopf_distance(a, b, h); };
  else
    o.point_distance = affine_distance;
  o.random_element = [special](Rng& rng) { return MatrixElement{{random_matrix(rng, 2, special)}, {}}; };
  o.random_point = [hopf](Rng& rng) {
    AffinePoint x = random_nonzero_point(rng);
    return hopf ? hopf_reduce(x, *hopf) : x;
  };
  o.validate = [special](const MatrixElement& g) {
    require_size(g.mats.size(), 1, "B-delta");
    require_size(g.x.size(), 0, "B-delta");
    require_square(g.mats[0], 2);
    if (special) require_unimodular(g.mats[0]);
  };
  return build(id, std::move(o));
}

// --- Tuple groups -------------------------------------------------------------------------------

using Tuple = std::vector<Complex>;

Ops<TupleElement, AffinePoint> tuple_ops(std::size_t size, Tuple identity, std::function<Tuple(const Tuple&, const Tuple&)> mul,
                                         std::function<Tuple(const Tuple&)> inv,
                                         std::function<AffinePoint(const Tuple&, const AffinePoint&)> act,
                                         std::function<Tuple(Rng&)> rnd, std::function<void(const Tuple&)> check = {}) {
  Ops<TupleElement, AffinePoint> o;
  o.identity = [identity] { return TupleElement{identity}; };
  o.multiply = [mul](const TupleElement& g, const TupleElement& h) { return TupleElement{mul(g.x, h.x)}; };
  o.inverse = [inv](const TupleElement& g) { return TupleElement{inv(g.x)}; };
  o.act = [act](const TupleElement& g, const AffinePoint& p) { return act(g.x, p); };
  o.distance = [](const TupleElement& g, const TupleElement& h) { return tuple_distance(g.x, h.x); };
  o.point_distance = affine_distance;
  o.random_element = [rnd](Rng& rng) { return TupleElement{rnd(rng)}; };
  o.random_point = [](Rng& rng) { return AffinePoint{random_complex(rng), random_complex(rng)}; };
  o.validate = [size, check](const TupleElement& g) {
    require_size(g.x.size(), size, "tuple element");
    for (Complex c : g.x) require_finite(c, "group element");
    if (check) check(g.x);
  };
  return o;
}

std::unique_ptr<ActionFamily> make_d1(const FamilyId& id) {
  auto o = tuple_ops(
      2, {0.0, 0.0}, [](const Tuple& g, const Tuple& h) { return Tuple{g[0] + h[0], g[1] + h[1]}; },
      [](const Tuple& g) { return Tuple{-g[0], -g[1]}; },
      [](const Tuple& g, const AffinePoint& p) { return AffinePoint{p.z + g[0], p.w + g[1]}; },
      [](Rng& rng) { return Tuple{random_complex(rng), random_complex(rng)}; });
  o.quotient_points = true;
  return build(id, std::move(o));
}

std::unique_ptr<ActionFamily> make_c2(const FamilyId& id) {
  auto o = tuple_ops(
      3, {0.0, 1.0, 0.0},
      [](const Tuple& g, const Tuple& h) { return Tuple{g[0] + h[0], g[1] * h[1], g[1] * h[2] + g[2]}; },
      [](const Tuple& g) { return Tuple{-g[0], 1.0 / g[1], -g[2] / g[1]}; },
      [](const Tuple& g, const AffinePoint& p) { return AffinePoint{p.z + g[0], g[1] * p.w + g[2]}; },
      [](Rng& rng) { return Tuple{random_complex(rng), random_nonzero(rng), random_complex(rng)}; },
      [](const Tuple& g) { require_nonzero(g[1], "affine scale"); });
  o.quotient_points = true;
  return build(id, std::move(o));
}

std::unique_ptr<ActionFamily> make_c3(const FamilyId& id) {
  return build(id, tuple_ops(
                       4, {1.0, 0.0, 1.0, 0.0},
                       [](const Tuple& g, const Tuple& h) {
                         return Tuple{g[0] * h[0], g[0] * h[1] + g[1], g[2] * h[2], g[2] * h[3] + g[3]};
                       },
                       [](const Tuple& g) { return Tuple{1.0 / g[0], -g[1] / g[0], 1.0 / g[2], -g[3] / g[2]}; },
                       [](const Tuple& g, const AffinePoint& p) { return AffinePoint{g[0] * p.z + g[1], g[2] * p.w + g[3]}; },
                       [](Rng& rng) {
                         return Tuple{random_nonzero(rng), random_complex(rng), random_nonzero(rng), random_complex(rng)};
                       },
                       [](const Tuple& g) {
                         require_nonzero(g[0], "affine scale");
                         require_nonzero(g[2], "affine scale");
                       }));
}

// (t, v) acting by (e^t z + v1, e^{alpha t} w + v2).
std::unique_ptr<ActionFamily> make_rescaling(const FamilyId& id, Complex alpha) {
  return build(id, tuple_ops(
                       3, {0.0, 0.0, 0.0},
                       [alpha](const Tuple& g, const Tuple& h) {
                         return Tuple{g[0] + h[0], std::exp(g[0]) * h[1] + g[1], std::exp(alpha * g[0]) * h[2] + g[2]};
                       },
                       [alpha](const Tuple& g) {
                         return Tuple{-g[0], -std::exp(-g[0]) * g[1], -std::exp(-alpha * g[0]) * g[2]};
                       },
                       [alpha](const Tuple& g, const AffinePoint& p) {
                         return AffinePoint{std::exp(g[0]) * p.z + g[1], std::exp(alpha * g[0]) * p.w + g[2]};
                       },
                       [](Rng& rng) { return Tuple{random_complex(rng), random_complex(rng), random_complex(rng)}; }));
}

// --- Remaining groups ---------------------------------------------------------------------------

std::unique_ptr<ActionFamily> make_d2(const FamilyId& id) {
  Ops<UAffElement, AffinePoint> o;
  o.identity = uaff_identity;
  o.multiply = uaff_multiply;
  o.inverse = uaff_inverse;
  o.act = [](const UAffElement& g, const AffinePoint& p) {
    UAffElement y = uaff_multiply(g, {p.z, p.w});
    return AffinePoint{y.a, y.b};
  };
  o.distance = uaff_distance;
  o.point_distance = affine_distance;
  o.random_element = [](Rng& rng) { return UAffElement{random_complex(rng), random_complex(rng)}; };
  o.random_point = [](Rng& rng) { return AffinePoint{random_complex(rng), random_complex(rng)}; };
  o.validate = [](const UAffElement& g) {
    require_finite(g.a, "uAff element");
    require_finite(g.b, "uAff element");
  };
  return build(id, std::move(o));
}

void require_divisor(const DivisorRef& have, const DivisorRef& want) {
  if (!have || !(have == want || have->same_as(*want))) throw InputError("element divisor does not match the family");
}

std::unique_ptr<ActionFamily> make_bbeta1(const FamilyId& id) {
  Ops<GDElement, AffinePoint> o;
  const DivisorRef d = id.divisor;
  o.identity = [d] { return gd_identity(d); };
  o.multiply = gd_multiply;
  o.inverse = gd_inverse;
  o.act = gd_act;
  o.distance = gd_distance;
  o.point_distance = affine_distance;
  o.random_element = [d](Rng& rng) { return gd_random(d, rng); };
  o.random_point = [](Rng& rng) { return AffinePoint{random_complex(rng), random_complex(rng)}; };
  o.validate = [d](const GDElement& g) { require_divisor(g.divisor, d); };
  return build(id, std::move(o));
}

std::unique_ptr<ActionFamily> make_bbeta2(const FamilyId& id) {
  Ops<RGDElement, AffinePoint> o;
  const DivisorRef d = id.divisor;
  o.identity = [d] { return rgd_identity(d); };
  o.multiply = rgd_multiply;
  o.inverse = rgd_inverse;
  o.act = rgd_act;
  o.distance = rgd_distance;
  o.point_distance = affine_distance;
  o.random_element = [d](Rng& rng) { return rgd_random(d, rng); };
  o.random_point = [](Rng& rng) { return AffinePoint{random_complex(rng), random_complex(rng)}; };
  o.validate = [d](const RGDElement& g) {
    require_divisor(g.divisor, d);
    require_nonzero(g.lambda, "rescaling");
  };
  return build(id, std::move(o));
}

BinaryForm random_form(Rng& rng, int n) {
  BinaryForm p(static_cast<std::size_t>(n + 1));
  for (auto& c : p) c = random_complex(rng);
  return p;
}

double on_element_distance(const OnElement& a, const OnElement& b, int n) {
  return std::max(on_distance(a, b, n), rel_diff(a.lambda, b.lambda));
}

std::unique_ptr<ActionFamily> make_bgamma(const FamilyId& id) {
  Ops<OnElement, AffinePoint> o;
  const int n = id.n;
  const Complex c = id.c;
  const BGamma sub = bgamma_sub(id.label);
  o.identity = [n] { return on_identity(n); };
  o.multiply = on_multiply;
  o.inverse = on_inverse;
  o.act = [sub, n, c](const OnElement& e, const AffinePoint& p) { return bgamma_act(sub, e, p, n, c); };
  o.distance = [n](const OnElement& a, const OnElement& b) { return on_element_distance(a, b, n); };
  o.point_distance = affine_distance;
  o.random_element = [sub, n, c](Rng& rng) {
    if (sub == BGamma::Four) {
      Mat2 g;
      g << random_nonzero(rng), random_complex(rng), 0.0, random_nonzero(rng);
      return OnElement{g, random_form(rng, n), 0.0};
    }
    return bgamma_element(sub, n, c, random_complex(rng), random_complex(rng), random_form(rng, n));
  };
  o.random_point = [](Rng& rng) { return AffinePoint{random_complex(rng), random_complex(rng)}; };
  o.validate = [sub, n, c](const OnElement& e) { check_bgamma_shape(sub, e, n, c); };
  o.quotient_points = sub == BGamma::Two;
  return build(id, std::move(o));
}

std::unique_ptr<ActionFamily> make_bdelta_bundle(const FamilyId& id, bool special) {
  Ops<OnElement, BundlePoint> o;
  const int n = id.n;
  o.identity = [n] { return on_identity(n); };
  o.multiply = on_multiply;
  o.inverse = on_inverse;
  o.act = [n](const OnElement& e, const BundlePoint& p) { return on_act(e, p, n); };
  o.distance = [n](const OnElement& a, const OnElement& b) { return on_distance(a, b, n); };
  o.point_distance = [n](const BundlePoint& a, const BundlePoint& b) { return bundle_distance(a, b, n); };
  o.random_element = [n, special](Rng& rng) { return OnElement{Mat2(random_matrix(rng, 2, special)), random_form(rng, n), 0.0}; };
  o.random_point = [](Rng& rng) { return BundlePoint{random_int(rng, 0, 1), random_complex(rng), random_complex(rng)}; };
  o.validate = [n, special](const OnElement& e) {
    require_size(e.p.size(), static_cast<std::size_t>(n + 1), "O(n) element");
    require_invertible(e.g);
    if (special) require_unimodular(e.g);
  };
  return build(id, std::move(o));
}

}  // namespace

const std::vector<Family>& all_families() {
  static const std::vector<Family> out = [] {
    std::vector<Family> v;
    for (const auto& info : kFamilies) v.push_back(info.f);
    return v;
  }();
  return out;
}

std::string family_name(Family f) {
  for (const auto& info : kFamilies)
    if (info.f == f) return info.name;
  throw InputError("unknown family");
}

Family parse_family(const std::string& name) {
  for (const auto& info : kFamilies)
    if (name == info.name || name == info.ascii) return info.f;
  throw InputError("unknown family: " + name);
}

std::string FamilyId::name() const { return family_name(label); }

FamilyId default_family(Family f) {
  FamilyId id;
  id.label = f;
  if (f == Family::BBeta1 || f == Family::BBeta2) id.divisor = make_bbeta_divisor(Divisor::from_points({0.0, kTwoPiI}));
  if (f == Family::BGamma2) id.c = 0.0;
  return id;
}

void FamilyId::validate() const {
  switch (label) {
    case Family::BBeta1:
    case Family::BBeta2:
      if (!divisor) throw InputError("B-beta family needs a divisor");
      if (divisor->degree() < 2) throw InputError("constraint violated: deg D >= 2");
      break;
    case Family::BGamma1:
      if (std::abs(c) <= kDefaultEps) throw InputError("constraint violated: c != 0 for B-gamma-1");
      [[fallthrough]];
    case Family::BGamma2:
    case Family::BGamma3:
    case Family::BGamma4:
    case Family::BDelta3:
    case Family::BDelta4:
      if (n < 1) throw InputError("constraint violated: n >= 1");
      break;
    case Family::C8:
      if (std::abs(alpha - 1.0) <= kDefaultEps) throw InputError("constraint violated: alpha != 1");
      if (std::abs(alpha) <= kDefaultEps) throw InputError("constraint violated: alpha != 0");
      break;
    default:
      break;
  }
  if (hopf) {
    if (label != Family::BDelta1 && label != Family::BDelta2) throw InputError("Hopf parameter only applies to B-delta-1/2");
    if (!(std::abs(*hopf) < 1.0) || std::abs(*hopf) == 0.0) throw InputError("constraint violated: 0 < |lambda| < 1");
  }
}

bool FamilyId::same_as(const FamilyId& o) const {
  if (label != o.label) return false;
  switch (label) {
    case Family::BBeta1:
    case Family::BBeta2:
      return divisor && o.divisor && (divisor == o.divisor || divisor->same_as(*o.divisor));
    case Family::BGamma1:
      return n == o.n && approx_equal(c, o.c);
    case Family::BGamma2:
    case Family::BGamma3:
    case Family::BGamma4:
    case Family::BDelta3:
    case Family::BDelta4:
      return n == o.n;
    case Family::BDelta1:
    case Family::BDelta2:
      return hopf.has_value() == o.hopf.has_value() && (!hopf || approx_equal(*hopf, *o.hopf));
    case Family::C8:
      return approx_equal(alpha, o.alpha);
    default:
      return true;
  }
}

std::unique_ptr<ActionFamily> make_family(const FamilyId& id) {
  id.validate();
  switch (id.label) {
    case Family::A1:
      return make_a1(id);
    case Family::A2:
      return build(id, affine_plane_ops(false));
    case Family::A3:
      return build(id, affine_plane_ops(true));
    case Family::BBeta1:
      return make_bbeta1(id);
    case Family::BBeta2:
      return make_bbeta2(id);
    case Family::BGamma1:
    case Family::BGamma2:
    case Family::BGamma3:
    case Family::BGamma4:
      return make_bgamma(id);
    case Family::BDelta1:
      return make_bdelta_linear(id, true);
    case Family::BDelta2:
      return make_bdelta_linear(id, false);
    case Family::BDelta3:
      return make_bdelta_bundle(id, true);
    case Family::BDelta4:
      return make_bdelta_bundle(id, false);
    case Family::C2:
      return make_c2(id);
    case Family::C3:
      return make_c3(id);
    case Family::C5:
      return make_c5(id);
    case Family::C6:
      return make_c6(id);
    case Family::C7:
      return make_c7(id);
    case Family::C8:
      return make_rescaling(id, id.alpha);
    case Family::C9:
      return make_c9(id);
    case Family::D1:
      return make_d1(id);
    case Family::D2:
      return make_d2(id);
    case Family::D3:
      return make_rescaling(id, 1.0);
  }
  throw InputError("unknown family");
}

GroupElement multiply(const GroupElement& g, const GroupElement& h) {
  if (!g.family.same_as(h.family)) throw InputError("family mismatch: " + g.family.name() + " vs " + h.family.name());
  return make_family(g.family)->multiply(g, h);
}

GroupElement inverse(const GroupElement& g) { return make_family(g.family)->inverse(g); }

SurfacePoint act(const GroupElement& g, const SurfacePoint& x) { return make_family(g.family)->act(g, x); }

QuotientPolicy quotient_policy(const FamilyId& f) {
  using K = QuotientPolicy::Kind;
  switch (f.label) {
    case Family::C2:
      return {K::Policy, "Delta in C discrete: X' = (C/Delta) x C acting on z", "make_quotient_point"};
    case Family::C5:
      return {K::Policy, "Delta in C discrete: X' = P^1 x (C/Delta)", "make_quotient_point"};
    case Family::BGamma2:
      return {K::Policy, "pi = {0} x Lambda, Lambda in C discrete (translations of w)", "make_quotient_point"};
    case Family::D1:
      return {K::Policy, "pi in C^2 discrete, normal forms D1_1 .. D1_6", "classify_D1_subgroup"};
    case Family::D2:
      return {K::Policy, "pi in the centralizer of uAff discrete, normal forms D2_1 .. D2_14", "classify_subgroup"};
    case Family::BBeta1:
      return {K::Policy, "pi in Q_D x C discrete, normal forms A .. I", "classify_pi / quotient_cover"};
    case Family::BBeta2:
      return {K::Policy, "pi generated by (n w0, lambda) in Q_D x C^*", "rgd_quotients"};
    case Family::C9:
      return {K::Policy, "Z/2 swapping the pair: X' = P^2 minus a smooth conic", "quadric_double_cover"};
    case Family::BDelta1:
    case Family::BDelta2:
      return {K::Policy, "lambda with 0 < |lambda| < 1: X' = (C^2 minus 0)/(z ~ lambda z)", "hopf_reduce"};
    default:
      return {K::NoQuotients, "", ""};
  }
}

QuotientPoint make_quotient_point(const AffinePoint& x, const TranslationLattice& subgroup) {
  RealVec r = subgroup.reduce(to_real(x.z, x.w));
  return {AffinePoint{Complex(r[0], r[1]), Complex(r[2], r[3])}, subgroup};
}

bool same_quotient_point(const QuotientPoint& a, const QuotientPoint& b, double tol) {
  const auto& x = a.representative;
  const auto& y = b.representative;
  return a.subgroup.congruent(to_real(x.z, x.w), to_real(y.z, y.w), tol);
}

}  // namespace homsurf
