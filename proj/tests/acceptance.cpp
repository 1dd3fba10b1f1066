// Acceptance suite: one line per criterion, exit status 0 iff all pass.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>

#include "homsurf/actions.hpp"
#include "homsurf/bundles.hpp"
#include "homsurf/d1.hpp"
#include "homsurf/split.hpp"

using namespace homsurf;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string sci(double x) {
  std::ostringstream out;
  out.precision(2);
  out << std::scientific << x;
  return out.str();
}

// Tracks the worst error and the number of failed boolean checks.
struct Tally {
  double max_error = 0.0;
  int failures = 0;
  int checks = 0;

  void error(double e) {
    ++checks;
    if (!(e <= max_error)) max_error = std::isnan(e) ? std::numeric_limits<double>::infinity() : e;
  }
  void expect(bool ok) {
    ++checks;
    if (!ok) ++failures;
  }
};

// Families with default and non-default parameters.
std::vector<FamilyId> family_instances() {
  std::vector<FamilyId> out;
  for (Family f : all_families()) out.push_back(default_family(f));
  for (int n : {2, 3}) {
    for (Family f : {Family::BGamma1, Family::BGamma2, Family::BGamma3, Family::BGamma4, Family::BDelta3, Family::BDelta4}) {
      auto id = default_family(f);
      id.n = n;
      out.push_back(id);
    }
  }
  auto g = default_family(Family::BGamma1);
  g.c = Complex(-0.5, 0.7);
  out.push_back(g);
  auto c8 = default_family(Family::C8);
  c8.alpha = Complex(0.3, 1.1);
  out.push_back(c8);
  for (Family f : {Family::BBeta1, Family::BBeta2}) {
    auto id = default_family(f);
    id.divisor = make_bbeta_divisor(Divisor({{0.0, 2}, {Complex(0.5, -1.0), 1}, {Complex(-1.0, 0.3), 1}}));
    out.push_back(id);
  }
  for (Family f : {Family::BDelta1, Family::BDelta2}) {
    auto id = default_family(f);
    id.hopf = Complex(0.3, -0.4);
    out.push_back(id);
  }
  return out;
}

Outcome group_axioms() {
  Tally t;
  Rng rng(101);
  const auto start = Clock::now();
  auto instances = family_instances();
  for (const auto& id : instances) {
    auto fam = make_family(id);
    const auto e = fam->identity();
    for (int i = 0; i < 1000; ++i) {
      auto a = fam->random_element(rng), b = fam->random_element(rng), c = fam->random_element(rng);
      t.error(fam->distance(fam->multiply(fam->multiply(a, b), c), fam->multiply(a, fam->multiply(b, c))));
      t.error(fam->distance(fam->multiply(e, a), a));
      t.error(fam->distance(fam->multiply(a, e), a));
      t.error(fam->distance(fam->multiply(a, fam->inverse(a)), e));
      t.error(fam->distance(fam->multiply(fam->inverse(a), a), e));
    }
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  return {t.max_error <= 1e-9 && secs < 60.0,
          std::to_string(instances.size()) + " families x 1000 triples, max rel err " + sci(t.max_error) + ", " +
              sci(secs) + " s"};
}

Outcome action_axioms() {
  Tally t;
  Rng rng(103);
  auto instances = family_instances();
  for (const auto& id : instances) {
    auto fam = make_family(id);
    for (int i = 0; i < 1000; ++i) {
      auto g = fam->random_element(rng), h = fam->random_element(rng);
      auto x = fam->random_point(rng);
      t.error(fam->point_distance(fam->act(fam->multiply(g, h), x), fam->act(g, fam->act(h, x))));
    }
  }
  return {t.max_error <= 1e-9, std::to_string(instances.size()) + " families x 1000 samples, max err " + sci(t.max_error)};
}

Mat3 naive_product(const Mat3& x, const Mat3& y) {
  Mat3 out = Mat3::Zero();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) out(i, j) += x(i, k) * y(k, j);
  return out;
}

UAffElement random_uaff(Rng& rng) { return {random_complex(rng, 2.0), random_complex(rng, 2.0)}; }

Outcome uaff_oracle() {
  Tally t;
  Rng rng(107);
  for (int i = 0; i < 10000; ++i) {
    UAffElement g = random_uaff(rng), h = random_uaff(rng);
    Mat3 want = naive_product(uaff_matrix(g), uaff_matrix(h));
    Mat3 got = uaff_matrix(uaff_multiply(g, h));
    double e = 0.0;
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) e = std::max(e, rel_diff(got(r, c), want(r, c)));
    t.error(e);
  }
  return {t.max_error <= 1e-10, "10000 pairs, max err " + sci(t.max_error)};
}

Outcome automorphisms() {
  Tally hom, comm;
  Rng rng(109);
  for (int m = 0; m < 100; ++m) {
    UAffAutomorphism phi{random_complex(rng, 2.0), random_nonzero(rng)};
    for (int i = 0; i < 100; ++i) {
      UAffElement g = random_uaff(rng), h = random_uaff(rng);
      hom.error(uaff_distance(aut_apply(phi, uaff_multiply(g, h)), uaff_multiply(aut_apply(phi, g), aut_apply(phi, h))));
    }
  }
  for (int i = 0; i < 1000; ++i) {
    UAffElement g = random_uaff(rng);
    UAffElement c = commutator(g, {0.0, 1.0});
    comm.error(std::max(std::abs(c.a), std::abs(c.b - (std::exp(g.a) - 1.0))));
  }
  return {hom.max_error <= 1e-10 && comm.max_error <= 1e-10,
          "homomorphism max err " + sci(hom.max_error) + ", commutator max err " + sci(comm.max_error)};
}

Divisor random_divisor(Rng& rng, int max_degree) {
  for (;;) {
    std::vector<DivisorPoint> pts;
    int deg = 0;
    const int target = random_int(rng, 1, max_degree);
    while (deg < target) {
      int mult = std::min(random_int(rng, 1, 3), target - deg);
      pts.push_back({random_complex(rng, 2.0), mult});
      deg += mult;
    }
    try {
      return Divisor(pts);
    } catch (const InputError&) {
    }
  }
}

Outcome annihilator() {
  Tally t;
  Rng rng(113);
  int elements = 0;
  for (int i = 0; i < 50; ++i) {
    Divisor d = random_divisor(rng, 8);
    auto p = monic_polynomial(d);
    for (const auto& f : basis_of(d)) {
      ++elements;
      double e = 0.0;
      for (const auto& term : apply_operator(p, f).terms())
        for (Complex c : term.poly.coeffs()) e = std::max(e, std::abs(c));
      t.error(e);
    }
  }
  return {t.max_error <= 1e-12, "50 divisors, " + std::to_string(elements) + " basis elements, max abs coeff " + sci(t.max_error)};
}

struct Comb {
  Complex lambda;
  std::vector<int> k;
  Divisor d;
};

Comb random_comb(Rng& rng) {
  for (;;) {
    std::set<int> ks;
    const int count = random_int(rng, 1, 4);
    while (static_cast<int>(ks.size()) < count) ks.insert(random_int(rng, 1, 20));
    int g = 0;
    for (int k : ks) g = std::gcd(g, k);
    if (g != 1) continue;
    Comb c{random_complex(rng, 2.0), {ks.begin(), ks.end()}, {}};
    std::vector<DivisorPoint> pts{{c.lambda, 1}};
    for (int k : c.k) pts.push_back({c.lambda + kTwoPiI * static_cast<double>(k), 1});
    c.d = Divisor(pts);
    return c;
  }
}

// Smallest positive translation carrying a root of every two-term sample e^{lz} + c e^{(l + 2 pi i k)z} to a root.
double root_difference_oracle(const Comb& comb, Rng& rng) {
  struct Sample {
    Complex c;
    int k;
    Complex root;
  };
  std::vector<Sample> samples;
  std::vector<double> candidates;
  for (int k : comb.k) {
    Complex c = random_nonzero(rng);
    // e^{2 pi i k z} = -1/c.
    Complex root = std::log(-1.0 / c) / (kTwoPiI * static_cast<double>(k));
    samples.push_back({c, k, root});
    for (int m = 1; m <= k; ++m) candidates.push_back(static_cast<double>(m) / k);
  }
  std::sort(candidates.begin(), candidates.end());
  auto value = [&](const Sample& s, Complex z) {
    return std::exp(comb.lambda * z) * (1.0 + s.c * std::exp(kTwoPiI * static_cast<double>(s.k) * z));
  };
  for (double t : candidates) {
    bool all = true;
    for (const auto& s : samples) {
      if (std::abs(value(s, s.root)) > 1e-9 * std::abs(std::exp(comb.lambda * s.root))) return -1.0;
      Complex z = s.root + t;
      all = all && std::abs(value(s, z)) <= 1e-8 * std::abs(std::exp(comb.lambda * z));
    }
    if (all) return t;
  }
  return -1.0;
}

Outcome quasiperiods() {
  Tally t;
  Rng rng(127);
  for (int i = 0; i < 20; ++i) {
    Comb comb = random_comb(rng);
    auto q = quasiperiod_group(comb.d);
    t.expect(q.kind == QuasiperiodGroup::Kind::RankOne && std::abs(std::abs(q.generator) - 1.0) <= 1e-8 &&
             std::abs(q.generator.imag()) <= 1e-8);
    double oracle = root_difference_oracle(comb, rng);
    t.expect(oracle > 0.0);
    t.error(std::abs(oracle - std::abs(q.generator)));
  }
  int trivial = 0;
  for (int i = 0; i < 20; ++i) {
    Divisor d;
    do {
      d = random_divisor(rng, 6);
    } while (d.max_multiplicity() < 2 || d.degree() < 2);
    bool ok = quasiperiod_group(d).kind == QuasiperiodGroup::Kind::Trivial;
    trivial += ok;
    t.expect(ok);
  }
  return {t.failures == 0 && t.max_error <= 1e-8,
          "20 combs rank one, oracle max err " + sci(t.max_error) + "; " + std::to_string(trivial) + "/20 multiple divisors trivial"};
}

Outcome weights() {
  Tally t;
  Rng rng(131);
  for (int i = 0; i < 20; ++i) {
    Comb comb = random_comb(rng);
    const Complex w0 = quasiperiod_group(comb.d).generator;
    for (int m : {1, -1, 2}) {
      const Complex w = static_cast<double>(m) * w0;
      const Complex gamma = weight(comb.d, w);
      for (int j = 0; j < 5; ++j) {
        ExpPoly f;
        do {
          f = random_member(comb.d, rng);
        } while (std::abs(f(0.0)) < 0.05);
        t.error(rel_diff(gamma, f(w) / f(0.0)));
      }
    }
    for (int a = -2; a <= 2; ++a)
      for (int b = -2; b <= 2; ++b) {
        const Complex wa = static_cast<double>(a) * w0, wb = static_cast<double>(b) * w0;
        t.error(rel_diff(weight(comb.d, wa + wb), weight(comb.d, wa) * weight(comb.d, wb)));
      }
  }
  return {t.max_error <= 1e-9, "20 divisors, max rel err " + sci(t.max_error)};
}

using Ex = BBeta1Label::Example;

struct CoverSample {
  Ex example;
  Divisor d;
  int n;
  Complex s;
  Complex tau;
  int delta_rank;
};

const Complex kPiI(0.0, kPi);

std::vector<CoverSample> cover_samples() {
  auto div = [](std::vector<DivisorPoint> p) { return Divisor(std::move(p)); };
  return {
      {Ex::A, div({{1.0, 1}, {2.0, 1}}), 1, 0.0, kI, 1},
      {Ex::A, div({{0.0, 2}}), 1, 0.0, Complex(0.2, 1.3), 2},
      {Ex::B, div({{0.0, 1}, {kTwoPiI, 1}}), 2, 0.0, kI, 0},
      {Ex::B, div({{kPiI, 1}, {3.0 * kPiI, 1}}), 1, 0.0, kI, 0},
      {Ex::C, div({{kTwoPiI, 1}, {2.0 * kTwoPiI, 1}}), 1, 1.0, kI, 0},
      {Ex::D, div({{0.0, 1}, {kTwoPiI, 1}}), 1, 0.0, kI, 1},
      {Ex::E, div({{kTwoPiI, 1}, {2.0 * kTwoPiI, 1}}), 1, Complex(0.3, 0.2), kI, 1},
      {Ex::E, div({{kPiI, 1}, {3.0 * kPiI, 1}}), 2, Complex(0.1, 0.4), kI, 1},
      {Ex::F, div({{kPiI, 1}, {3.0 * kPiI, 1}}), 1, 0.0, kI, 1},
      {Ex::G, div({{0.0, 1}, {kTwoPiI, 1}, {2.0 * kTwoPiI, 1}}), 2, 0.0, Complex(0.2, 1.3), 2},
      {Ex::H, div({{kTwoPiI, 1}, {2.0 * kTwoPiI, 1}, {4.0 * kTwoPiI, 1}}), 1, Complex(0.3, 0.6), Complex(-0.1, 1.2), 2},
      {Ex::I, div({{0.5 * kPiI, 1}, {2.5 * kPiI, 1}}), 1, 0.0, kI, 2},
      {Ex::I, div({{kTwoPiI / 3.0, 1}, {kTwoPiI * 4.0 / 3.0, 1}}), 1, 0.0, std::exp(kPiI / 3.0), 2},
  };
}

BBeta1Label label_of(const CoverSample& s) { return make_bbeta1_label(s.example, s.d, s.n, s.s, s.tau, s.delta_rank); }

AffinePoint small_point(Rng& rng) { return {random_complex(rng, 0.2), random_complex(rng, 0.2)}; }

Outcome covering_equivariance() {
  Tally t;
  Rng rng(137);
  std::set<std::string> seen;
  for (const auto& s : cover_samples()) {
    if (s.example == Ex::A) continue;
    auto label = label_of(s);
    auto d = make_bbeta_divisor(label.divisor);
    auto q = quotient_cover(label, 1e-9);
    seen.insert(q.label);
    for (int i = 0; i < 500; ++i) {
      auto x = small_point(rng);
      GDElement g{random_complex(rng, 0.2), random_member(*d, rng, 0.2), d};
      t.expect(q.same_point(q.cover(gd_act(g, x)), q.act(g, q.cover(x))));
      for (const auto& deck : q.deck) t.expect(q.same_point(q.cover(deck(x)), q.cover(x)));
    }
  }
  for (const auto& d0 : {Divisor({{0.0, 1}, {kTwoPiI, 1}}), Divisor({{Complex(0.3, 0.1), 1}, {Complex(0.3, 0.1) + 3.0 * kTwoPiI, 1}})}) {
    auto d = make_bbeta_divisor(d0);
    for (int n = 1; n <= 2; ++n) {
      auto q = rgd_quotients(d0, n, 1e-9);
      seen.insert(q.label);
      for (int i = 0; i < 500; ++i) {
        auto x = small_point(rng);
        RGDElement g{random_complex(rng, 0.2), random_nonzero(rng), random_member(*d, rng, 0.2), d};
        t.expect(q.same_point(q.cover(rgd_act(g, x)), q.act(g, q.cover(x))));
        t.expect(q.same_point(q.cover(q.deck[0](x)), q.cover(x)));
      }
    }
  }
  std::string labels;
  for (const auto& l : seen) labels += (labels.empty() ? "" : " ") + l;
  return {t.failures == 0 && seen.size() == 10,
          std::to_string(t.checks - t.failures) + "/" + std::to_string(t.checks) + " checks at 1e-9 over " + labels};
}

Mat2 random_gl2(Rng& rng) {
  for (;;) {
    Mat2 m;
    m << random_complex(rng), random_complex(rng), random_complex(rng), random_complex(rng);
    if (std::abs(m.determinant()) > 0.3) return m;
  }
}

template <class T, class Op>
std::vector<T> nielsen(std::vector<T> gens, Rng& rng, Op combine, std::function<T(const T&)> inverse) {
  const int n = static_cast<int>(gens.size());
  for (int m = 0; m < 6; ++m) {
    auto i = static_cast<std::size_t>(random_int(rng, 0, n - 1));
    if (n == 1 || random_int(rng, 0, 2) == 0) {
      gens[i] = inverse(gens[i]);
    } else {
      auto j = static_cast<std::size_t>((static_cast<int>(i) + random_int(rng, 1, n - 1)) % n);
      gens[i] = combine(gens[i], random_int(rng, 0, 1) ? gens[j] : inverse(gens[j]));
    }
  }
  std::shuffle(gens.begin(), gens.end(), rng);
  return gens;
}

int d1_round_trips(Rng& rng) {
  int ok = 0;
  for (int t = 0; t < 200; ++t) {
    D1Label l;
    l.index = 1 + t % 6;
    l.tau = {random_real(rng, -0.5, 0.5), random_real(rng, 0.9, 2.0)};
    l.sigma = random_complex(rng) + Complex(0.0, 0.3);
    l.l3 = Vec2(random_complex(rng), random_complex(rng));
    l.l4 = Vec2(random_complex(rng), random_complex(rng));
    Mat2 a = random_gl2(rng);
    std::vector<Vec2> gens;
    for (const auto& g : l.generators()) gens.push_back(a * g);
    gens = nielsen<Vec2>(
        gens, rng, [](const Vec2& x, const Vec2& y) -> Vec2 { return x + y; }, [](const Vec2& x) -> Vec2 { return -x; });
    try {
      auto c = classify_D1_subgroup(gens);
      bool same = c.label.index == l.index;
      if (l.index == 3 || l.index == 4) same = same && std::abs(c.label.tau - reduce_tau(l.tau)) < 1e-7;
      ok += same;
    } catch (const Error&) {
    }
  }
  return ok;
}

int d2_round_trips(Rng& rng) {
  int ok = 0;
  for (int t = 0; t < 200; ++t) {
    D2Label l;
    l.index = 1 + t % 14;
    l.k = l.index >= 7 ? random_int(rng, 0, 2) : random_int(rng, 1, 3);
    l.b = Complex(random_real(rng, 0.05, 0.45), random_real(rng, 0.1, 0.9));
    l.tau = Complex(random_real(rng, -0.5, 0.5), random_real(rng, 1.1, 2.0));
    l.a = Complex(random_real(rng, -1, 1), random_real(rng, 0.2, 2));
    l.a1 = Complex(random_real(rng, 0.5, 1.0), random_real(rng, -0.3, 0.3));
    l.a2 = Complex(random_real(rng, -0.3, 0.3), random_real(rng, 1.2, 2.0));
    UAffAutomorphism phi{random_complex(rng), random_nonzero(rng)};
    std::vector<UAffElement> gens;
    for (const auto& g : nielsen<UAffElement>(l.generators(), rng, uaff_multiply, uaff_inverse))
      gens.push_back(aut_apply(phi, g));
    try {
      auto base = classify_subgroup(l.generators()).label;
      auto got = classify_subgroup(gens).label;
      bool same = got.index == l.index && got.k == base.k && std::abs(got.b - base.b) < 1e-6 &&
                  std::abs(got.tau - base.tau) < 1e-6 && std::abs(got.a - base.a) < 1e-6;
      if (l.index == 14) same = same && Lattice2(got.a1, got.a2).same_as(Lattice2(l.a1, l.a2), 1e-6);
      ok += same;
    } catch (const Error&) {
    }
  }
  return ok;
}

int bbeta1_round_trips(Rng& rng) {
  int ok = 0;
  auto samples = cover_samples();
  for (int t = 0; t < 200; ++t) {
    auto label = label_of(samples[static_cast<std::size_t>(t) % samples.size()]);
    Complex mu = random_nonzero(rng), nu = random_nonzero(rng), shift = random_complex(rng);
    Divisor e = label.divisor.scaled(mu);
    Centralizer ce(e), cd(label.divisor);
    std::vector<CentralizerElement> gens;
    auto mul = [&cd](const CentralizerElement& a, const CentralizerElement& b) { return cd.multiply(a, b); };
    std::function<CentralizerElement(const CentralizerElement&)> inv = [&cd](const CentralizerElement& a) { return cd.inverse(a); };
    for (const auto& g : nielsen<CentralizerElement>(label.generators(), rng, mul, inv)) {
      Complex w = g.varpi / mu;
      gens.push_back({w, nu * g.s + shift * ce.shear_rate(w)});
    }
    try {
      auto c = classify_pi(gens, e).label;
      bool same = c.name() == label.name() && c.n == label.n && c.delta_rank == label.delta_rank &&
                  std::abs(c.s - label.s) < 1e-6;
      if (label.delta_rank == 2) same = same && std::abs(c.tau - label.tau) < 1e-6;
      ok += same;
    } catch (const Error&) {
    }
  }
  return ok;
}

Outcome round_trips() {
  Rng rng(139);
  int d1 = d1_round_trips(rng), d2 = d2_round_trips(rng), b1 = bbeta1_round_trips(rng);
  return {d1 == 200 && d2 == 200 && b1 == 200,
          "D1 " + std::to_string(d1) + "/200, D2 " + std::to_string(d2) + "/200, Bβ1 " + std::to_string(b1) + "/200"};
}

QuadricPoint random_pair(Rng& rng) {
  for (;;) {
    QuadricPoint q{{random_complex(rng), random_complex(rng)}, {random_complex(rng), random_complex(rng)}};
    if (proj_distance(q.alpha, q.beta) > 0.05) return q;
  }
}

// Roots of x0 T1^2 + x1 T1 T2 + x2 T2^2 as points of P^1.
std::array<ProjPoint, 2> conic_roots(const Proj2Point& y) {
  const Complex x0 = y[0], x1 = y[1], x2 = y[2];
  Complex s = std::sqrt(x1 * x1 - 4.0 * x0 * x2);
  if (std::abs(-x1 - s) < std::abs(-x1 + s)) s = -s;
  const Complex q = -x1 - s;
  return {ProjPoint(q, 2.0 * x0), ProjPoint(2.0 * x2, q)};
}

Outcome c9_geometry() {
  Tally quad, swap;
  int two_to_one = 0;
  Rng rng(149);
  for (int i = 0; i < 1000; ++i) {
    auto q = random_pair(rng);
    Vec3 x = quadric_embed(q);
    quad.error(std::abs(x[1] * x[1] - 4.0 * x[0] * x[2] - 1.0));
    swap.error(proj_distance(quadric_double_cover(q), quadric_double_cover({q.beta, q.alpha})));
  }
  for (int i = 0; i < 100; ++i) {
    Proj2Point y(random_complex(rng), random_complex(rng), random_complex(rng));
    auto roots = conic_roots(y);
    if (proj_distance(roots[0], roots[1]) < 1e-3) {
      --i;
      continue;
    }
    auto pre = double_cover_preimages(y);
    auto matches = [&](const QuadricPoint& p, int first) {
      return proj_distance(p.alpha, roots[first]) < 1e-9 && proj_distance(p.beta, roots[1 - first]) < 1e-9;
    };
    bool ok = (matches(pre[0], 0) && matches(pre[1], 1)) || (matches(pre[0], 1) && matches(pre[1], 0));
    for (const auto& p : pre) ok = ok && proj_distance(quadric_double_cover(p), y) < 1e-9;
    two_to_one += ok;
  }
  return {quad.max_error <= 1e-9 && swap.max_error <= 1e-9 && two_to_one == 100,
          "quadric max err " + sci(quad.max_error) + ", swap max err " + sci(swap.max_error) + ", " +
              std::to_string(two_to_one) + "/100 images with exactly two preimages"};
}

Outcome chart_consistency() {
  Tally t;
  Rng rng(151);
  for (int n = 1; n <= 3; ++n) {
    int done = 0;
    while (done < 500) {
      OnElement e{random_gl2(rng), BinaryForm(static_cast<std::size_t>(n + 1)), 0.0};
      for (auto& c : e.p) c = random_complex(rng);
      BundlePoint x{0, random_nonzero(rng), random_complex(rng)};
      BundlePoint y = bundle_transition(x, n);
      Mat2 swapped;
      swapped << e.g(1, 1), e.g(1, 0), e.g(0, 1), e.g(0, 0);
      if (std::abs(e.g(1, 0) * x.z + e.g(1, 1)) < 0.1 || std::abs(swapped(1, 0) * y.z + swapped(1, 1)) < 0.1) continue;
      BundlePoint a = on_act_in_chart(e, x, n), b = on_act_in_chart(e, y, n);
      if (std::abs(a.z) < 0.1 || std::abs(b.z) < 0.1) continue;
      b = bundle_transition(b, n);
      t.error(std::max(rel_diff(a.z, b.z), rel_diff(a.w, b.w)));
      ++done;
    }
  }
  return {t.max_error <= 1e-8, "n = 1, 2, 3 x 500 samples, max err " + sci(t.max_error)};
}

SCBiholomorphism random_valid(const SCData& d, Rng& rng) {
  std::vector<Complex> units = lattice_units(d.lattice.tau());
  units.push_back(1.0);
  const SCCase kind = sc_case(d);
  int sign = kind == SCCase::Root ? 1 : (random_int(rng, 0, 1) ? 1 : -1);
  Complex b = units[static_cast<std::size_t>(random_int(rng, 0, static_cast<int>(units.size()) - 1))];
  Complex lambda0 = static_cast<double>(random_int(rng, -3, 3)) * d.lattice.w1() +
                    static_cast<double>(random_int(rng, -3, 3)) * d.lattice.w2();
  std::map<int, Complex> f;
  for (int j = random_int(rng, 0, 3); j > 0; --j) f[random_int(rng, -kLaurentDegreeBound, kLaurentDegreeBound)] = random_complex(rng, 0.1);
  return sc_biholomorphism(d, sign, random_complex(rng), b, lambda0, f);
}

Outcome sc_normalizer() {
  Rng rng(157);
  const Lattice2 square(1.0, kI);
  int valid = 0, rejected = 0;
  for (Complex c : {Complex(1.0), Complex(-1.0), kI}) {
    SCData d = make_sc_data(square, c);
    for (int t = 0; t < 100; ++t) valid += normalizes_deck(random_valid(d, rng), d, rng);
    for (int t = 0; t < 20; ++t) {
      auto phi = random_valid(d, rng);
      if (sc_case(d) == SCCase::Trivial || t % 2 == 0)
        phi.b *= 1.0 + random_real(rng, 0.05, 0.5);
      else
        phi.lambda0 += Complex(random_real(rng, 0.1, 0.9), random_real(rng, 0.1, 0.9));
      rejected += !normalizes_deck(phi, d, rng);
    }
  }
  return {valid == 300 && rejected == 60,
          std::to_string(valid) + "/300 valid accepted, " + std::to_string(rejected) + "/60 corrupted rejected"};
}

std::pair<int, std::string> run_command(const std::string& cmd) {
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, out};
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

Outcome catalogue_cli() {
  const std::string cli = HOMSURF_CLI;
  auto [rc, out] = run_command("'" + cli + "' catalogue");
  std::vector<std::string> got;
  std::istringstream lines(out);
  for (std::string line; std::getline(lines, line);) got.push_back(line.substr(0, line.find('\t')));
  std::ifstream golden(HOMSURF_GOLDEN_DIR "/catalogue_labels.txt");
  std::vector<std::string> want;
  for (std::string line; std::getline(golden, line);)
    if (!line.empty()) want.push_back(line);
  const bool labels_ok = rc == 0 && !want.empty() && std::set(got.begin(), got.end()) == std::set(want.begin(), want.end()) &&
                         got.size() == want.size();
  const auto start = Clock::now();
  auto [vrc, vout] = run_command("'" + cli + "' verify all --samples 100 --seed 7");
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  return {labels_ok && vrc == 0 && secs < 300.0, std::to_string(got.size()) + " labels " + (labels_ok ? "match" : "DIFFER") +
                                                    " golden list; verify all exit " + std::to_string(vrc) + " in " + sci(secs) + " s"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"group axioms", group_axioms},
      {"action axiom", action_axioms},
      {"uAff matrix oracle", uaff_oracle},
      {"automorphisms and commutator", automorphisms},
      {"annihilator exactness", annihilator},
      {"quasiperiod oracle", quasiperiods},
      {"weight consistency", weights},
      {"covering equivariance", covering_equivariance},
      {"classification round trips", round_trips},
      {"C9 geometry", c9_geometry},
      {"O(n) chart consistency", chart_consistency},
      {"S_c normalizer", sc_normalizer},
      {"catalogue completeness", catalogue_cli},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("[%s] %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failed), criteria.size());
  return failed == 0 ? 0 : 1;
}
