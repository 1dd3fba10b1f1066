#include "homsurf/bbeta.hpp"

#include <algorithm>
#include <cmath>

#include "homsurf/lattice.hpp"
#include "homsurf/split.hpp"

namespace homsurf {

namespace {

void require_same(const DivisorRef& a, const DivisorRef& b) {
  if (!a || !b) throw InputError("element has no divisor");
  if (a != b && !a->same_as(*b)) throw InputError("divisor mismatch");
}

Complex ipow(Complex z, int e) {
  if (e >= 0) return std::pow(z, e);
  return 1.0 / std::pow(z, -e);
}

// Base point and integer offsets of a divisor [lambda] + sum [lambda + 2 pi i k_j] / varpi0.
struct Comb {
  Complex base;
  std::vector<std::int64_t> offsets;
};

Comb comb_of(const Divisor& d, Complex varpi0) {
  const auto& pts = d.points();
  std::vector<std::int64_t> k;
  for (const auto& p : pts) {
    auto idx = as_integer((p.point - pts[0].point) * varpi0 / kTwoPiI, 1e-7);
    if (!idx) throw InputError("divisor points are not on a common quasiperiod comb");
    k.push_back(*idx);
  }
  std::size_t arg = static_cast<std::size_t>(std::min_element(k.begin(), k.end()) - k.begin());
  std::int64_t kmin = k[arg];
  for (auto& x : k) x -= kmin;
  return {pts[arg].point, k};
}

// D and -D give the same quotients; keep the one with centroid in the upper half plane.
bool prefer_negated(const Divisor& d) {
  Complex c = d.centroid();
  double scale = 0.0;
  for (const auto& p : d.points()) scale = std::max(scale, std::abs(p.point));
  if (std::abs(c) > 1e-9 * std::max(1.0, scale)) return !preferred_sign(c);
  Divisor neg = d.scaled(-1.0);
  for (std::size_t j = 0; j < d.points().size(); ++j) {
    const auto& a = d.points()[j];
    const auto& b = neg.points()[j];
    if (std::abs(a.point - b.point) > 1e-9 * std::max(1.0, scale)) {
      if (std::abs(a.point.real() - b.point.real()) > 1e-9 * std::max(1.0, scale)) return b.point.real() < a.point.real();
      return b.point.imag() < a.point.imag();
    }
    if (a.mult != b.mult) return b.mult > a.mult;
  }
  return false;
}

}  // namespace

DivisorRef make_bbeta_divisor(Divisor d) {
  if (d.degree() < 2) throw InputError("Bbeta families require deg D >= 2");
  return std::make_shared<const Divisor>(std::move(d));
}

GDElement gd_element(const DivisorRef& d, Complex t, ExpPoly f) {
  require_finite(t, "t");
  if (!contains(*d, f)) throw InputError("f is not in V_D");
  return {t, std::move(f), d};
}

GDElement gd_identity(const DivisorRef& d) { return {0.0, ExpPoly(), d}; }

GDElement gd_multiply(const GDElement& g, const GDElement& h) {
  require_same(g.divisor, h.divisor);
  return {g.t + h.t, g.f + translate(h.f, g.t), g.divisor};
}

GDElement gd_inverse(const GDElement& g) { return {-g.t, -translate(g.f, -g.t), g.divisor}; }

AffinePoint gd_act(const GDElement& g, const AffinePoint& x) { return {x.z + g.t, x.w + g.f(x.z + g.t)}; }

double gd_distance(const GDElement& g, const GDElement& h) { return std::max(rel_diff(g.t, h.t), distance(g.f, h.f)); }

GDElement gd_random(const DivisorRef& d, Rng& rng) { return {random_complex(rng), random_member(*d, rng), d}; }

RGDElement rgd_element(const DivisorRef& d, Complex t, Complex lambda, ExpPoly f) {
  require_finite(t, "t");
  require_finite(lambda, "lambda");
  if (std::abs(lambda) == 0.0) throw InputError("rG_D scaling must be nonzero");
  if (!contains(*d, f)) throw InputError("f is not in V_D");
  return {t, lambda, std::move(f), d};
}

RGDElement rgd_identity(const DivisorRef& d) { return {0.0, 1.0, ExpPoly(), d}; }

RGDElement rgd_multiply(const RGDElement& g, const RGDElement& h) {
  require_same(g.divisor, h.divisor);
  return {g.t + h.t, g.lambda * h.lambda, g.f + g.lambda * translate(h.f, g.t), g.divisor};
}

RGDElement rgd_inverse(const RGDElement& g) {
  Complex li = 1.0 / g.lambda;
  return {-g.t, li, -li * translate(g.f, -g.t), g.divisor};
}

AffinePoint rgd_act(const RGDElement& g, const AffinePoint& x) {
  return {x.z + g.t, g.lambda * x.w + g.f(x.z + g.t)};
}

double rgd_distance(const RGDElement& g, const RGDElement& h) {
  return std::max({rel_diff(g.t, h.t), rel_diff(g.lambda, h.lambda), distance(g.f, h.f)});
}

RGDElement rgd_random(const DivisorRef& d, Rng& rng) {
  return {random_complex(rng), random_nonzero(rng), random_member(*d, rng), d};
}

Centralizer::Centralizer(Divisor d) : d_(std::move(d)), q_(quasiperiod_group(d_)) {
  zero_in_divisor_ = d_.multiplicity_at(0.0) > 0;
}

Complex Centralizer::weight(Complex varpi) const {
  if (!q_.contains(varpi)) throw InputError("not a quasiperiod");
  if (q_.kind == QuasiperiodGroup::Kind::Trivial) return 1.0;
  return std::exp(d_.points()[0].point * varpi);
}

CentralizerElement Centralizer::multiply(const CentralizerElement& a, const CentralizerElement& b) const {
  return {a.varpi + b.varpi, a.s + weight(a.varpi) * b.s};
}

CentralizerElement Centralizer::inverse(const CentralizerElement& a) const {
  return {-a.varpi, -weight(-a.varpi) * a.s};
}

AffinePoint Centralizer::act(const CentralizerElement& c, const AffinePoint& x) const {
  return {x.z + c.varpi, weight(c.varpi) * x.w + c.s};
}

Complex Centralizer::shear_rate(Complex varpi) const {
  return zero_in_divisor_ ? varpi : 1.0 - weight(varpi);
}

GDMorphism gd_morphism_adjoint(const GDElement& g) {
  GDElement gi = gd_inverse(g);
  return {*g.divisor, [g](const AffinePoint& x) { return gd_act(g, x); },
          [g, gi](const GDElement& k) { return gd_multiply(gd_multiply(g, k), gi); }};
}

GDMorphism gd_morphism_rescale(const DivisorRef& d, Complex mu, Complex nu) {
  if (std::abs(mu) == 0.0 || std::abs(nu) == 0.0) throw InputError("rescaling parameters must be nonzero");
  auto target = std::make_shared<const Divisor>(d->scaled(mu));
  return {*target, [mu, nu](const AffinePoint& x) { return AffinePoint{x.z / mu, nu * x.w}; },
          [mu, nu, target](const GDElement& g) { return GDElement{g.t / mu, nu * g.f.rescaled(mu), target}; }};
}

GDMorphism gd_morphism_shear(const DivisorRef& d, const ExpPoly& f0) {
  if (!contains(d->plus(0.0), f0)) throw InputError("f0 is not in V_{D+[0]}");
  return {*d, [f0](const AffinePoint& x) { return AffinePoint{x.z, x.w + f0(x.z)}; },
          [f0](const GDElement& g) { return GDElement{g.t, g.f + f0 - translate(f0, g.t), g.divisor}; }};
}

RGDMorphism rgd_morphism_adjoint(const RGDElement& g) {
  RGDElement gi = rgd_inverse(g);
  return {*g.divisor, [g](const AffinePoint& x) { return rgd_act(g, x); },
          [g, gi](const RGDElement& k) { return rgd_multiply(rgd_multiply(g, k), gi); }};
}

RGDMorphism rgd_morphism_rescale(const DivisorRef& d, Complex mu, Complex nu) {
  if (std::abs(mu) == 0.0 || std::abs(nu) == 0.0) throw InputError("rescaling parameters must be nonzero");
  auto target = std::make_shared<const Divisor>(d->scaled(mu));
  return {*target, [mu, nu](const AffinePoint& x) { return AffinePoint{x.z / mu, nu * x.w}; },
          [mu, nu, target](const RGDElement& g) {
            return RGDElement{g.t / mu, g.lambda, nu * g.f.rescaled(mu), target};
          }};
}

RGDMorphism rgd_morphism_twist(const DivisorRef& d, Complex a) {
  auto target = std::make_shared<const Divisor>(d->translated(a));
  return {*target, [a](const AffinePoint& x) { return AffinePoint{x.z, std::exp(a * x.z) * x.w}; },
          [a, target](const RGDElement& g) {
            return RGDElement{g.t, std::exp(a * g.t) * g.lambda, g.f.times_exponential(a), target};
          }};
}

std::pair<std::optional<GDMorphism>, std::optional<RGDMorphism>> morphism_family(int kind, BBetaGroup group,
                                                                                   const DivisorRef& d,
                                                                                   const MorphismParams& p) {
  if (group == BBetaGroup::GD) {
    switch (kind) {
      case 1:
        if (!p.gd) throw InputError("kind 1 needs a group element");
        return {gd_morphism_adjoint(*p.gd), std::nullopt};
      case 2:
        return {gd_morphism_rescale(d, p.mu, p.nu), std::nullopt};
      case 3:
        return {gd_morphism_shear(d, p.f0), std::nullopt};
    }
  } else {
    switch (kind) {
      case 1:
        if (!p.rgd) throw InputError("kind 1 needs a group element");
        return {std::nullopt, rgd_morphism_adjoint(*p.rgd)};
      case 2:
        return {std::nullopt, rgd_morphism_rescale(d, p.mu, p.nu)};
      case 3:
        return {std::nullopt, rgd_morphism_twist(d, p.a)};
    }
  }
  throw InputError("morphism kind must be 1, 2 or 3");
}

std::string BBeta1Label::name() const {
  static const char* letters = "-ABCDEFGHI";
  if (example == Example::None) return "Bβ1";
  std::string out = "Bβ1";
  out += letters[static_cast<int>(example)];
  if (example == Example::A || example == Example::B) out += std::to_string(sub);
  return out;
}

std::vector<CentralizerElement> BBeta1Label::generators() const {
  const double nn = n;
  std::vector<CentralizerElement> fibre{{0.0, 1.0}};
  if (delta_rank == 2) fibre.push_back({0.0, tau});
  switch (example) {
    case Example::None:
      return {};
    case Example::A:
      return fibre;
    case Example::B:
      return {{nn, 0.0}};
    case Example::C:
      return {{nn, 1.0}};
    case Example::D:
    case Example::F:
    case Example::G:
    case Example::I:
      fibre.insert(fibre.begin(), CentralizerElement{nn, 0.0});
      return fibre;
    case Example::E:
    case Example::H:
      fibre.insert(fibre.begin(), CentralizerElement{nn, s});
      return fibre;
  }
  return {};
}

namespace {

using Ex = BBeta1Label::Example;

bool fibre_lattice_example(Ex e) { return e == Ex::G || e == Ex::H || e == Ex::I; }

}  // namespace

BBeta1Label make_bbeta1_label(Ex example, const Divisor& d, int n, Complex s, Complex tau, int delta_rank) {
  if (d.degree() < 2) throw InputError("constraint violated: deg D >= 2");
  BBeta1Label label;
  label.example = example;
  label.divisor = d;
  label.n = n;
  label.s = s;
  label.tau = tau;
  const bool zero_in = d.multiplicity_at(0.0) > 0;
  if (example == Ex::None) return label;
  if (example == Ex::A) {
    if (delta_rank != 1 && delta_rank != 2) throw InputError("constraint violated: Delta has rank 1 or 2");
    label.delta_rank = delta_rank;
    label.sub = zero_in ? 1 : 0;
    label.s = 0.0;
    return label;
  }
  if (n < 1) throw InputError("constraint violated: n >= 1");
  auto q = quasiperiod_group(d);
  if (q.kind != QuasiperiodGroup::Kind::RankOne || std::abs(q.generator - 1.0) > 1e-8)
    throw InputError("constraint violated: D = [lambda] + sum [lambda + 2 pi i k_j] with coprime k_j");
  Comb comb = comb_of(d, 1.0);
  label.lambda = comb.base;
  const Complex gamma = std::exp(comb.base * static_cast<double>(n));
  const bool gamma_one = std::abs(gamma - 1.0) < 1e-8;
  auto set_m = [&](Complex turns) {
    auto m = as_integer(turns, 1e-7);
    if (!m) throw InputError("constraint violated: lambda n must be a multiple of 2 pi i");
    label.m = *m;
  };
  label.delta_rank = example == Ex::B || example == Ex::C ? 0 : (fibre_lattice_example(example) ? 2 : 1);
  if (fibre_lattice_example(example) && tau.imag() <= 0) throw InputError("constraint violated: Im tau > 0");
  switch (example) {
    case Ex::B:
      label.s = 0.0;
      label.sub = gamma_one ? 0 : 1;
      break;
    case Ex::C:
      if (zero_in || !gamma_one) throw InputError("constraint violated: C needs e^{lambda n} = 1 and lambda != 0");
      label.s = 1.0;
      set_m(comb.base * static_cast<double>(n) / kTwoPiI);
      break;
    case Ex::D:
    case Ex::G:
      if (!zero_in) throw InputError("constraint violated: D must contain 0");
      label.s = 0.0;
      break;
    case Ex::E:
    case Ex::H:
      if (zero_in || !gamma_one) throw InputError("constraint violated: e^{lambda n} = 1 and lambda != 0");
      set_m(comb.base * static_cast<double>(n) / kTwoPiI);
      break;
    case Ex::F: {
      if (std::abs(gamma + 1.0) > 1e-8) throw InputError("constraint violated: F needs e^{lambda n} = -1");
      auto odd = as_integer(comb.base * static_cast<double>(n) / Complex(0.0, kPi), 1e-7);
      if (!odd) throw InputError("constraint violated: lambda = pi i (2m+1)/n");
      label.m = (*odd - 1) / 2;
      if (*odd < 0 && (*odd % 2 != 0)) label.m = -((-*odd + 1) / 2);
      label.s = 0.0;
      break;
    }
    case Ex::I:
      if (gamma_one) throw InputError("constraint violated: I needs e^{lambda n} != 1");
      if (!Lattice2(1.0, tau).preserved_by(gamma, 1e-6))
        throw InputError("constraint violated: e^{lambda n} Z[1,tau] = Z[1,tau]");
      label.s = 0.0;
      break;
    default:
      break;
  }
  return label;
}

BBeta1Classification classify_pi(const std::vector<CentralizerElement>& gens, const Divisor& d, std::int64_t bound) {
  if (d.degree() < 2) throw InputError("Bbeta families require deg D >= 2");
  const auto q = quasiperiod_group(d, bound);
  for (const auto& g : gens) {
    require_finite(g.varpi, "quasiperiod");
    require_finite(g.s, "s");
    if (!q.contains(g.varpi)) throw ClassificationError("not a quasiperiod");
  }
  BBeta1Classification out;
  BBeta1Label& label = out.label;
  label.divisor = d;
  const bool all_fibre = std::all_of(gens.begin(), gens.end(), [&](const CentralizerElement& g) {
    return q.kind == QuasiperiodGroup::Kind::Trivial || *q.index_of(g.varpi) == 0;
  });

  auto normalize_fibre = [&](const std::vector<Complex>& basis) -> std::optional<Lattice2> {
    if (basis.size() == 1) {
      out.nu = 1.0 / basis[0];
      return std::nullopt;
    }
    Lattice2 red = Lattice2(basis[0], basis[1]).reduced();
    out.nu = 1.0 / red.w1();
    label.tau = snap_tau(red.w2() / red.w1());
    return Lattice2(1.0, label.tau);
  };

  if (all_fibre) {
    std::vector<RealVec> svecs;
    for (const auto& g : gens) svecs.push_back(to_real(g.s));
    auto span = integer_span(svecs, bound);
    if (span.rank == 0) return out;
    std::vector<Complex> basis;
    for (const auto& v : span.basis) basis.emplace_back(v[0], v[1]);
    normalize_fibre(basis);
    label.example = Ex::A;
    label.delta_rank = span.rank;
    label.sub = d.multiplicity_at(0.0) > 0 ? 1 : 0;
    return out;
  }

  // Rescale so that Q_D = Z.
  out.mu = q.generator;
  const double orientation = prefer_negated(d.scaled(out.mu)) ? -1.0 : 1.0;
  out.mu *= orientation;
  const Divisor dn = d.scaled(out.mu);
  label.divisor = dn;
  const Comb comb = comb_of(dn, 1.0);
  label.lambda = comb.base;
  const Complex lambda = comb.base;
  const Centralizer cz(dn);
  const Character chi = [lambda](Complex a) { return std::exp(lambda * a); };

  std::vector<SplitElement> split;
  for (const auto& g : gens) split.push_back({orientation * static_cast<double>(*q.index_of(g.varpi)), g.s});
  SplitAnalysis an = analyze_split(split, chi, bound);
  if (an.base_rank != 1) throw ClassificationError("projection to Q_D must have rank one");
  SplitElement lift = an.lifts[0];
  if (!preferred_sign(lift.a)) lift = split_inverse(lift, chi);
  label.n = static_cast<int>(std::llround(lift.a.real()));
  const double nn = label.n;
  const Complex gamma = std::exp(lambda * nn);
  const bool gamma_one = std::abs(gamma - 1.0) < 1e-8;
  const bool zero_in = dn.multiplicity_at(0.0) > 0;
  const Complex rate = cz.shear_rate(nn);
  const bool killable = std::abs(rate) > 1e-8;
  label.delta_rank = an.fiber_rank;

  std::optional<Lattice2> fibre;
  if (an.fiber_rank > 0) fibre = normalize_fibre(an.fiber_basis);
  Complex s = out.nu * lift.b;
  auto kill_s = [&] {
    out.t = -s / rate;
    s = 0.0;
  };
  auto set_m = [&] {
    auto m = as_integer(lambda * nn / kTwoPiI, 1e-7);
    if (!m) throw ClassificationError("lambda n is not a multiple of 2 pi i");
    label.m = *m;
  };

  if (an.fiber_rank == 0) {
    if (killable || std::abs(s) <= 1e-9) {
      if (killable) kill_s();
      label.example = Ex::B;
      label.sub = gamma_one ? 0 : 1;
      s = 0.0;
    } else {
      label.example = Ex::C;
      out.nu /= s;
      s = 1.0;
      set_m();
    }
  } else if (an.fiber_rank == 1) {
    if (zero_in) {
      label.example = Ex::D;
      kill_s();
    } else if (gamma_one) {
      label.example = Ex::E;
      s = canonical_mod_integers(s);
      set_m();
    } else if (std::abs(gamma + 1.0) < 1e-8) {
      label.example = Ex::F;
      kill_s();
      auto odd = as_integer(lambda * nn / Complex(0.0, kPi), 1e-7);
      if (!odd) throw ClassificationError("lambda n is not an odd multiple of pi i");
      label.m = (*odd - 1) / 2;
      if (*odd < 0) label.m = -((-*odd + 1) / 2);
    } else {
      throw ClassificationError("e^{lambda n} must be +1 or -1 when pi_0 has rank one");
    }
  } else {
    if (!fibre->preserved_by(gamma, 1e-6)) throw ClassificationError("e^{lambda n} does not preserve pi_0");
    if (zero_in) {
      label.example = Ex::G;
      kill_s();
    } else if (gamma_one) {
      label.example = Ex::H;
      s = canonical_mod_lattice(s, *fibre, lattice_units(label.tau));
      set_m();
    } else {
      label.example = Ex::I;
      kill_s();
    }
  }
  label.s = s;
  return out;
}

std::map<int, Complex> laurent_coefficients(const ExpPoly& f, Complex base, Complex step) {
  std::map<int, Complex> out;
  for (const auto& term : f.terms()) {
    auto e = as_integer((term.frequency - base) / step, 1e-7);
    if (!e || term.poly.degree() > 0) throw InputError("function is not a Laurent polynomial in the covering coordinate");
    out[static_cast<int>(*e)] += term.poly.coeff(0);
  }
  return out;
}

namespace {

Complex eval_laurent(const std::map<int, Complex>& c, Complex z, int stride = 1) {
  Complex acc = 0.0;
  for (const auto& [e, v] : c) acc += v * ipow(z, e * stride);
  return acc;
}

// Equivalence of points of C^2 under pi = <(n, s)> pi_0 acting by (z + kn, gamma^k w + S_k).
bool same_orbit(const AffinePoint& x, const AffinePoint& y, double n, Complex gamma, Complex s,
                const std::optional<Lattice2>& lattice, bool integers, double tol) {
  auto k = as_integer((x.z - y.z) / n, tol);
  if (!k) return false;
  // (n, s)^k = (kn, S_k) with S_k = s (1 + gamma + ... + gamma^{k-1}).
  Complex sk = 0.0;
  const std::int64_t steps = *k;
  if (steps >= 0) {
    for (std::int64_t j = 0; j < steps; ++j) sk += std::pow(gamma, static_cast<double>(j));
    sk *= s;
  } else {
    for (std::int64_t j = 1; j <= -steps; ++j) sk -= std::pow(gamma, -static_cast<double>(j));
    sk *= s;
  }
  Complex diff = x.w - std::pow(gamma, static_cast<double>(steps)) * y.w - sk;
  if (lattice) return lattice->contains(diff, tol);
  if (integers) {
    auto m = as_integer(diff, tol);
    return m.has_value();
  }
  return std::abs(diff) <= tol * std::max({1.0, std::abs(x.w), std::abs(y.w)});
}

bool close(const AffinePoint& a, const AffinePoint& b, double tol) {
  return approx_equal(a.z, b.z, tol) && approx_equal(a.w, b.w, tol);
}

}  // namespace

CoveringMap<GDElement> quotient_cover(const BBeta1Label& label, double tol) {
  CoveringMap<GDElement> out;
  out.label = label.name();
  const double n = label.n;
  const Complex lambda = label.lambda;
  const Complex s = label.s;
  const Complex gamma = std::exp(lambda * n);
  const std::int64_t m = label.m;
  std::optional<Lattice2> lattice;
  if (label.delta_rank == 2) lattice = Lattice2(1.0, label.tau);
  auto deck_step = [=](const AffinePoint& x) { return AffinePoint{x.z + n, gamma * x.w + s}; };
  auto w_shift = [](Complex c) {
    return [c](const AffinePoint& x) { return AffinePoint{x.z, x.w + c}; };
  };
  auto add_fibre_deck = [&] {
    out.deck.push_back(w_shift(1.0));
    if (lattice) out.deck.push_back(w_shift(label.tau));
  };
  auto zn = [n](Complex z) { return std::exp(kTwoPiI * z / n); };
  switch (label.example) {
    case Ex::None:
      out.cover = [](const AffinePoint& x) { return x; };
      out.act = [](const GDElement& g, const AffinePoint& x) { return gd_act(g, x); };
      out.same_point = [tol](const AffinePoint& a, const AffinePoint& b) { return close(a, b, tol); };
      break;
    case Ex::A: {
      auto reduce_w = [lattice](Complex w) { return lattice ? lattice->reduce(w) : w - std::floor(w.real()); };
      out.cover = [reduce_w](const AffinePoint& x) { return AffinePoint{x.z, reduce_w(x.w)}; };
      out.act = [reduce_w](const GDElement& g, const AffinePoint& x) {
        auto y = gd_act(g, x);
        return AffinePoint{y.z, reduce_w(y.w)};
      };
      out.same_point = [lattice, tol](const AffinePoint& a, const AffinePoint& b) {
        if (!approx_equal(a.z, b.z, tol)) return false;
        return lattice ? lattice->congruent(a.w, b.w, tol) : as_integer(a.w - b.w, tol).has_value();
      };
      add_fibre_deck();
      break;
    }
    case Ex::B:
      out.cover = [=](const AffinePoint& x) { return AffinePoint{zn(x.z), std::exp(-lambda * x.z) * x.w}; };
      out.act = [=](const GDElement& g, const AffinePoint& x) {
        Complex z = std::exp(kTwoPiI * g.t / n) * x.z;
        auto c = laurent_coefficients(g.f, lambda, kTwoPiI);
        return AffinePoint{z, std::exp(-lambda * g.t) * x.w + eval_laurent(c, z, label.n)};
      };
      out.same_point = [tol](const AffinePoint& a, const AffinePoint& b) { return close(a, b, tol); };
      out.deck.push_back(deck_step);
      break;
    case Ex::C:
      out.cover = [=](const AffinePoint& x) { return AffinePoint{zn(x.z), x.w - x.z / n}; };
      out.act = [=](const GDElement& g, const AffinePoint& x) {
        Complex z = std::exp(kTwoPiI * g.t / n) * x.z;
        auto c = laurent_coefficients(g.f, 0.0, kTwoPiI / n);
        return AffinePoint{z, x.w - g.t / n + eval_laurent(c, z)};
      };
      out.same_point = [tol](const AffinePoint& a, const AffinePoint& b) { return close(a, b, tol); };
      out.deck.push_back(deck_step);
      break;
    case Ex::D:
      out.cover = [=](const AffinePoint& x) { return AffinePoint{zn(x.z), std::exp(kTwoPiI * x.w)}; };
      out.act = [=](const GDElement& g, const AffinePoint& x) {
        Complex z = std::exp(kTwoPiI * g.t / n) * x.z;
        auto c = laurent_coefficients(g.f, 0.0, kTwoPiI);
        return AffinePoint{z, x.w * std::exp(kTwoPiI * eval_laurent(c, z, label.n))};
      };
      out.same_point = [tol](const AffinePoint& a, const AffinePoint& b) { return close(a, b, tol); };
      out.deck.push_back(deck_step);
      add_fibre_deck();
      break;
    case Ex::E:
      out.cover = [=](const AffinePoint& x) {
        return AffinePoint{zn(x.z), std::exp(kTwoPiI * (n * x.w - s * x.z) / n)};
      };
      out.act = [=](const GDElement& g, const AffinePoint& x) {
        Complex z = std::exp(kTwoPiI * g.t / n) * x.z;
        auto c = laurent_coefficients(g.f, 0.0, kTwoPiI / n);
        return AffinePoint{z, x.w * std::exp(kTwoPiI * (-s * g.t / n + eval_laurent(c, z)))};
      };
      out.same_point = [tol](const AffinePoint& a, const AffinePoint& b) { return close(a, b, tol); };
      out.deck.push_back(deck_step);
      add_fibre_deck();
      break;
    case Ex::G:
    case Ex::H: {
      const Complex shear = label.example == Ex::H ? s : Complex(0.0);
      const bool h = label.example == Ex::H;
      out.cover = [=](const AffinePoint& x) { return AffinePoint{zn(x.z), lattice->reduce(x.w - shear * x.z / n)}; };
      out.act = [=](const GDElement& g, const AffinePoint& x) {
        Complex z = std::exp(kTwoPiI * g.t / n) * x.z;
        Complex add = h ? eval_laurent(laurent_coefficients(g.f, 0.0, kTwoPiI / n), z)
                        : eval_laurent(laurent_coefficients(g.f, 0.0, kTwoPiI), z, label.n);
        return AffinePoint{z, lattice->reduce(x.w - shear * g.t / n + add)};
      };
      out.same_point = [lattice, tol](const AffinePoint& a, const AffinePoint& b) {
        return approx_equal(a.z, b.z, tol) && lattice->congruent(a.w, b.w, tol);
      };
      out.deck.push_back(deck_step);
      add_fibre_deck();
      break;
    }
    case Ex::F:
    case Ex::I: {
      // Representatives with 0 <= Re z < n and w reduced modulo pi_0.
      auto reduce = [=](const AffinePoint& x) {
        double k = std::floor(x.z.real() / n);
        Complex w = std::pow(gamma, -k) * x.w;
        w = lattice ? lattice->reduce(w) : w - std::floor(w.real());
        return AffinePoint{x.z - k * n, w};
      };
      out.cover = reduce;
      out.act = [=](const GDElement& g, const AffinePoint& x) { return reduce(gd_act(g, x)); };
      out.same_point = [=](const AffinePoint& a, const AffinePoint& b) {
        return same_orbit(a, b, n, gamma, 0.0, lattice, !lattice, tol);
      };
      out.deck.push_back(deck_step);
      add_fibre_deck();
      break;
    }
  }
  (void)m;
  return out;
}

CoveringMap<RGDElement> rgd_quotients(const Divisor& d, int n, double tol) {
  if (d.degree() < 2) throw InputError("Bbeta families require deg D >= 2");
  if (n < 1) throw InputError("n must be positive");
  auto q = quasiperiod_group(d);
  if (q.kind != QuasiperiodGroup::Kind::RankOne) throw InputError("no quotients");
  const Complex w0 = q.generator;
  const Comb comb = comb_of(d, w0);
  const Complex lambda = comb.base;
  const double nn = n;
  const Complex gamma = std::exp(d.points()[0].point * w0 * nn);
  CoveringMap<RGDElement> out;
  out.label = "Bβ2′";
  out.cover = [=](const AffinePoint& x) {
    return AffinePoint{std::exp(kTwoPiI * x.z / (nn * w0)), std::exp(-lambda * x.z) * x.w};
  };
  out.act = [=](const RGDElement& g, const AffinePoint& x) {
    Complex z = std::exp(kTwoPiI * g.t / (nn * w0)) * x.z;
    auto c = laurent_coefficients(g.f, lambda, kTwoPiI / w0);
    return AffinePoint{z, std::exp(-lambda * g.t) * g.lambda * x.w + eval_laurent(c, z, n)};
  };
  out.same_point = [tol](const AffinePoint& a, const AffinePoint& b) { return close(a, b, tol); };
  out.deck.push_back([=](const AffinePoint& x) { return AffinePoint{x.z + nn * w0, gamma * x.w}; });
  return out;
}

}  // namespace homsurf
