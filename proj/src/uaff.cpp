#include "homsurf/uaff.hpp"

#include <algorithm>
#include <cmath>

#include "homsurf/split.hpp"

namespace homsurf {

namespace {

const Character kExp = [](Complex a) { return std::exp(a); };

SplitElement to_split(const UAffElement& g) { return {g.a, g.b}; }
UAffElement from_split(const SplitElement& g) { return {g.a, g.b}; }

const Complex kHex = std::exp(Complex(0.0, kPi / 3.0));

[[noreturn]] void not_tabulated(const std::string& why) {
  throw ClassificationError("not a tabulated subgroup: " + why);
}

}  // namespace

UAffElement uaff_identity() { return {0.0, 0.0}; }

UAffElement uaff_multiply(const UAffElement& g, const UAffElement& h) { return {g.a + h.a, g.b + std::exp(g.a) * h.b}; }

UAffElement uaff_inverse(const UAffElement& g) { return {-g.a, -std::exp(-g.a) * g.b}; }

Mat3 uaff_matrix(const UAffElement& g) {
  Mat3 m;
  m << std::exp(g.a), 0.0, g.b, 0.0, 1.0, g.a, 0.0, 0.0, 1.0;
  return m;
}

UAffElement aut_apply(const UAffAutomorphism& phi, const UAffElement& g) {
  return {g.a, phi.gamma * (1.0 - std::exp(g.a)) + phi.beta * g.b};
}

UAffAutomorphism aut_compose(const UAffAutomorphism& outer, const UAffAutomorphism& inner) {
  return {outer.gamma + outer.beta * inner.gamma, outer.beta * inner.beta};
}

UAffElement commutator(const UAffElement& g, const UAffElement& h) {
  return uaff_multiply(uaff_multiply(g, h), uaff_multiply(uaff_inverse(g), uaff_inverse(h)));
}

double uaff_distance(const UAffElement& g, const UAffElement& h) { return std::max(rel_diff(g.a, h.a), rel_diff(g.b, h.b)); }

std::string D2Label::name() const { return index == 0 ? "D2" : "D2_" + std::to_string(index); }

bool D2Label::abelian() const { return index <= 6 || index == 14; }

std::vector<UAffElement> D2Label::generators() const {
  const double kk = static_cast<double>(k);
  switch (index) {
    case 0:
      return {};
    case 1:
      return {{0.0, 1.0}};
    case 2:
      return {{0.0, 1.0}, {0.0, tau}};
    case 3:
      return {{kTwoPiI * kk, 1.0}};
    case 4:
      return {{kTwoPiI * kk, b}, {0.0, 1.0}};
    case 5:
      return {{kTwoPiI * kk, b}, {0.0, 1.0}, {0.0, tau}};
    case 6:
      return {{a, 0.0}};
    case 7:
      return {{kTwoPiI * (kk + 0.5), 0.0}, {0.0, 1.0}};
    case 8:
      return {{kTwoPiI * (kk + 0.5), 0.0}, {0.0, 1.0}, {0.0, tau}};
    case 9:
      return {{Complex(0, kPi) * (kk + 0.5), 0.0}, {0.0, 1.0}, {0.0, kI}};
    case 10:
    case 11:
    case 12:
    case 13: {
      static constexpr int kSixths[] = {1, 2, 4, 5};
      double j = kSixths[index - 10];
      return {{kTwoPiI * (kk + j / 6.0), 0.0}, {0.0, 1.0}, {0.0, kHex}};
    }
    case 14:
      return {{a1, 0.0}, {a2, 0.0}};
    default:
      throw InputError("unknown D2 label index");
  }
}

D2Classification classify_subgroup(const std::vector<UAffElement>& gens, double eps) {
  std::vector<SplitElement> split;
  for (const auto& g : gens) {
    require_finite(g.a, "uaff element");
    require_finite(g.b, "uaff element");
    split.push_back(to_split(g));
  }
  SplitAnalysis an;
  try {
    an = analyze_split(split, kExp);
  } catch (const ClassificationError& e) {
    not_tabulated(e.what());
  }

  D2Classification out;
  D2Label& label = out.label;
  UAffAutomorphism& phi = out.normalizer;
  const double tol = 1e-8;

  // Scale pi_0 to 0, Z or Z[1, tau].
  std::optional<Lattice2> fiber;
  if (an.fiber_rank == 1) {
    phi.beta = 1.0 / an.fiber_basis[0];
  } else if (an.fiber_rank == 2) {
    Lattice2 red = Lattice2(an.fiber_basis[0], an.fiber_basis[1]).reduced();
    phi.beta = 1.0 / red.w1();
    Complex tau = snap_tau(red.w2() / red.w1());
    fiber = Lattice2(1.0, tau);
  }

  if (an.base_rank == 0) {
    label.index = an.fiber_rank;
    if (fiber) label.tau = fiber->w2();
  } else if (an.base_rank == 1) {
    UAffElement g = from_split(an.lifts[0]);
    if (!preferred_sign(g.a)) g = uaff_inverse(g);
    const Complex A = g.a;
    const Complex u = std::exp(A);
    Complex b = phi.beta * g.b;
    auto kill_b = [&] {
      // gamma (1 - u) + b = 0.
      phi.gamma = -b / (1.0 - u);
      b = 0.0;
    };
    auto full_turns = as_integer(A / kTwoPiI, tol);
    if (an.fiber_rank == 0) {
      if (full_turns && std::abs(b) > eps) {
        label.index = 3;
        label.k = *full_turns;
        phi.beta /= b;
      } else {
        label.index = 6;
        label.a = A;
        if (!full_turns) kill_b();
      }
    } else if (an.fiber_rank == 1) {
      auto half_turns = as_integer(A / Complex(0, kPi), tol);
      if (full_turns) {
        label.index = 4;
        label.k = *full_turns;
        label.b = canonical_mod_integers(b);
      } else if (half_turns && *half_turns % 2 != 0) {
        label.index = 7;
        label.k = (*half_turns - 1) / 2;
        kill_b();
      } else {
        not_tabulated("e^a must be +1 or -1 when pi_0 has rank one");
      }
    } else {
      const Complex tau = fiber->w2();
      label.tau = tau;
      if (!fiber->preserved_by(u, 1e-6)) not_tabulated("e^a does not preserve the fibre lattice");
      if (full_turns) {
        label.index = 5;
        label.k = *full_turns;
        label.b = canonical_mod_lattice(b, *fiber, lattice_units(tau));
      } else if (std::abs(u + 1.0) < tol) {
        label.index = 8;
        label.k = (*as_integer(A / Complex(0, kPi), tol) - 1) / 2;
        kill_b();
      } else if (std::abs(u - kI) < tol || std::abs(u + kI) < tol) {
        auto q = as_integer(A / Complex(0, kPi) - 0.5, tol);
        if (!q) not_tabulated("unexpected quarter turn");
        label.index = 9;
        label.k = *q;
        label.tau = kI;
        kill_b();
      } else {
        static constexpr int kSixths[] = {1, 2, 4, 5};
        int found = -1;
        for (int idx = 0; idx < 4; ++idx)
          if (std::abs(u - std::exp(kTwoPiI * (kSixths[idx] / 6.0))) < tol) found = idx;
        if (found < 0) not_tabulated("e^a is not a unit of the fibre lattice");
        auto q = as_integer(A / kTwoPiI - kSixths[found] / 6.0, tol);
        if (!q) not_tabulated("unexpected sixth turn");
        label.index = 10 + found;
        label.k = *q;
        label.tau = kHex;
        kill_b();
      }
    }
  } else {
    if (an.fiber_rank != 0) not_tabulated("rank two projection with nontrivial kernel");
    UAffElement g1 = from_split(an.lifts[0]), g2 = from_split(an.lifts[1]);
    const UAffElement& g = std::abs(1.0 - std::exp(g1.a)) >= std::abs(1.0 - std::exp(g2.a)) ? g1 : g2;
    phi.gamma = -phi.beta * g.b / (1.0 - std::exp(g.a));
    Lattice2 red = Lattice2(g1.a, g2.a).reduced();
    label.index = 14;
    label.a1 = red.w1();
    label.a2 = red.w2();
  }
  out.normalized_generators = label.generators();
  return out;
}

UAffElement center_intersection(const D2Label& label) {
  const double kk = static_cast<double>(label.k);
  switch (label.index) {
    case 4:
      if (auto q = rationalize(label.b)) return {kTwoPiI * kk * static_cast<double>(q->den), 0.0};
      return {0.0, 0.0};
    case 5: {
      auto c = Lattice2(1.0, label.tau).coords(label.b);
      auto x = rationalize(c[0]), y = rationalize(c[1]);
      if (x && y) return {kTwoPiI * kk * static_cast<double>(lcm64(x->den, y->den)), 0.0};
      return {0.0, 0.0};
    }
    case 6:
      if (auto q = rationalize(label.a / kTwoPiI)) return {kTwoPiI * static_cast<double>(q->num), 0.0};
      return {0.0, 0.0};
    case 7:
    case 8:
    case 9:
      return {kTwoPiI * (2.0 * kk + 1.0), 0.0};
    case 10:
      return {kTwoPiI * (6.0 * kk + 1.0), 0.0};
    case 11:
      return {kTwoPiI * (3.0 * kk + 1.0), 0.0};
    case 12:
      return {kTwoPiI * (3.0 * kk + 2.0), 0.0};
    case 13:
      return {kTwoPiI * (6.0 * kk + 5.0), 0.0};
    case 14: {
      auto c = Lattice2(label.a1, label.a2).coords(kTwoPiI);
      auto x = rationalize(c[0]), y = rationalize(c[1]);
      if (x && y) return {kTwoPiI * static_cast<double>(lcm64(x->den, y->den)), 0.0};
      return {0.0, 0.0};
    }
    default:
      return {0.0, 0.0};
  }
}

AffinePoint product_cover(const D2Label& label, const UAffElement& x) {
  if (!label.abelian()) throw Error("bundle is nontrivial");
  const Complex a = x.a, b = x.b;
  const double kk = static_cast<double>(label.k);
  switch (label.index) {
    case 0:
      return {a, b};
    case 1:
      return {a, std::exp(kTwoPiI * std::exp(-a) * b)};
    case 2:
      return {a, Lattice2(1.0, label.tau).reduce(std::exp(-a) * b)};
    case 3:
      return {std::exp(a / kk), std::exp(-a) * b - a / (kTwoPiI * kk)};
    case 4:
      return {std::exp(a / kk), std::exp(kTwoPiI * std::exp(-a) * b - a * label.b / kk)};
    case 5:
      return {std::exp(a / kk), Lattice2(1.0, label.tau).reduce(std::exp(-a) * b - a * label.b / (kTwoPiI * kk))};
    case 6:
      return {std::exp(kTwoPiI * a / label.a), b};
    case 14:
      return {Lattice2(label.a1, label.a2).reduce(a), b};
    default:
      throw Error("bundle is nontrivial");
  }
}

bool same_cover_point(const D2Label& label, const AffinePoint& p, const AffinePoint& q, double tol) {
  switch (label.index) {
    case 2:
    case 5:
      return approx_equal(p.z, q.z, tol) && Lattice2(1.0, label.tau).congruent(p.w, q.w, tol);
    case 14:
      return Lattice2(label.a1, label.a2).congruent(p.z, q.z, tol) && approx_equal(p.w, q.w, tol);
    default:
      return approx_equal(p.z, q.z, tol) && approx_equal(p.w, q.w, tol);
  }
}

}  // namespace homsurf
