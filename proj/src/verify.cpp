#include "homsurf/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <future>

namespace homsurf {

namespace {

class Suite {
 public:
  Suite(VerificationReport& report, int samples, double eps) : report_(report), samples_(samples), eps_(eps) {}

  // Runs the sampler `samples` times and records the largest error it returns.
  void check(const std::string& name, const std::function<double()>& sample) {
    CheckResult r{name, samples_, 0.0, true};
    for (int i = 0; i < samples_; ++i) {
      double e = sample();
      if (!(e <= r.max_error)) r.max_error = std::isnan(e) ? std::numeric_limits<double>::infinity() : e;
    }
    r.pass = r.max_error <= eps_;
    report_.checks.push_back(r);
  }

  void record_failure(const std::string& name) { report_.checks.push_back({name, 0, std::numeric_limits<double>::infinity(), false}); }

 private:
  VerificationReport& report_;
  int samples_;
  double eps_;
};

double mat_rel(const Mat3& a, const Mat3& b) {
  return (a - b).cwiseAbs().maxCoeff() / std::max({1.0, a.cwiseAbs().maxCoeff(), b.cwiseAbs().maxCoeff()});
}

QuadricPoint random_pair(Rng& rng) {
  for (;;) {
    QuadricPoint q{{random_complex(rng), random_complex(rng)}, {random_complex(rng), random_complex(rng)}};
    if (proj_distance(q.alpha, q.beta) > 0.05) return q;
  }
}

void d2_checks(Suite& s, Rng& rng) {
  s.check("uaff-matrix-oracle", [&] {
    UAffElement g{random_complex(rng), random_complex(rng)}, h{random_complex(rng), random_complex(rng)};
    return mat_rel(uaff_matrix(uaff_multiply(g, h)), uaff_matrix(g) * uaff_matrix(h));
  });
  s.check("commutator-identity", [&] {
    UAffElement g{random_complex(rng), random_complex(rng)};
    UAffElement c = commutator(g, {0.0, 1.0});
    return uaff_distance(c, {0.0, std::exp(g.a) - 1.0});
  });
  s.check("automorphism-homomorphism", [&] {
    UAffAutomorphism phi{random_complex(rng), random_nonzero(rng)};
    UAffElement g{random_complex(rng), random_complex(rng)}, h{random_complex(rng), random_complex(rng)};
    return uaff_distance(aut_apply(phi, uaff_multiply(g, h)), uaff_multiply(aut_apply(phi, g), aut_apply(phi, h)));
  });
}

void c9_checks(Suite& s, Rng& rng) {
  s.check("quadric-identity", [&] {
    Vec3 x = quadric_embed(random_pair(rng));
    return std::abs(x[1] * x[1] - 4.0 * x[0] * x[2] - 1.0) / std::max(1.0, x.squaredNorm());
  });
  s.check("double-cover-swap", [&] {
    QuadricPoint q = random_pair(rng);
    return proj_distance(quadric_double_cover(q), quadric_double_cover({q.beta, q.alpha}));
  });
  s.check("double-cover-equivariance", [&] {
    QuadricPoint q = random_pair(rng);
    Mat2 g;
    do {
      g << random_complex(rng), random_complex(rng), random_complex(rng), random_complex(rng);
    } while (std::abs(g.determinant()) < 0.2);
    return proj_distance(quadric_double_cover(quadric_act(g, q)), conic_complement_act(g, quadric_double_cover(q)));
  });
}

void chart_checks(Suite& s, Rng& rng, const ActionFamily& fam, int n) {
  s.check("chart-consistency", [&] {
    for (;;) {
      const auto g = fam.random_element(rng);
      const auto& e = std::get<OnElement>(g.payload);
      BundlePoint x{0, random_nonzero(rng), random_complex(rng)};
      BundlePoint y = bundle_transition(x, n);
      Mat2 g1 = e.g;
      Mat2 g2;
      g2 << e.g(1, 1), e.g(1, 0), e.g(0, 1), e.g(0, 0);
      if (std::abs(g1(1, 0) * x.z + g1(1, 1)) < 0.1 || std::abs(g2(1, 0) * y.z + g2(1, 1)) < 0.1) continue;
      BundlePoint a = on_act_in_chart(e, x, n);
      BundlePoint b = on_act_in_chart(e, y, n);
      if (std::abs(a.z) < 0.1 || std::abs(b.z) < 0.1) continue;
      b = bundle_transition(b, n);
      return std::max(rel_diff(a.z, b.z), rel_diff(a.w, b.w));
    }
  });
}

AffinePoint small_point(Rng& rng) { return {random_complex(rng, 0.2), random_complex(rng, 0.2)}; }

void bbeta1_checks(Suite& s, Rng& rng, const FamilyId& id) {
  const DivisorRef d = id.divisor;
  s.check("annihilator", [&] {
    ExpPoly f = random_member(*d, rng);
    ExpPoly r = apply_operator(monic_polynomial(*d), f);
    double e = 0.0;
    for (const auto& t : r.terms())
      for (Complex c : t.poly.coeffs()) e = std::max(e, std::abs(c));
    return e;
  });
  using Ex = BBeta1Label::Example;
  for (Ex ex : {Ex::A, Ex::B, Ex::C, Ex::D, Ex::E, Ex::F}) {
    std::optional<CoveringMap<GDElement>> q;
    try {
      q = quotient_cover(make_bbeta1_label(ex, *d, 1, ex == Ex::C ? Complex(1.0) : Complex(0.3, 0.2), kI, 1));
    } catch (const InputError&) {
      continue;  // the divisor does not carry this example
    }
    s.check("cover-equivariance " + q->label, [&] {
      AffinePoint x = small_point(rng);
      GDElement g{random_complex(rng, 0.2), random_member(*d, rng, 0.2), d};
      bool ok = q->same_point(q->cover(gd_act(g, x)), q->act(g, q->cover(x)));
      for (const auto& deck : q->deck) ok = ok && q->same_point(q->cover(deck(x)), q->cover(x));
      return ok ? 0.0 : 1.0;
    });
  }
}

void bbeta2_checks(Suite& s, Rng& rng, const FamilyId& id) {
  const DivisorRef d = id.divisor;
  std::optional<CoveringMap<RGDElement>> q;
  try {
    q = rgd_quotients(*d, 1);
  } catch (const InputError&) {
    return;
  }
  s.check("cover-equivariance " + q->label, [&] {
    AffinePoint x = small_point(rng);
    RGDElement g{random_complex(rng, 0.2), random_nonzero(rng), random_member(*d, rng, 0.2), d};
    bool ok = q->same_point(q->cover(rgd_act(g, x)), q->act(g, q->cover(x))) &&
              q->same_point(q->cover(q->deck[0](x)), q->cover(x));
    return ok ? 0.0 : 1.0;
  });
}

void hopf_checks(Suite& s, Rng& rng, const ActionFamily& fam, Complex hopf) {
  s.check("hopf-invariance", [&] {
    auto g = fam.random_element(rng);
    auto x = std::get<AffinePoint>(fam.random_point(rng));
    AffinePoint y{hopf * x.z, hopf * x.w};
    return fam.point_distance(fam.act(g, x), fam.act(g, y));
  });
}

}  // namespace

VerificationReport verify_family(const FamilyId& id, int samples, std::uint64_t seed, double eps) {
  VerificationReport report;
  report.family = id.name();
  report.samples = samples;
  Rng rng(seed ^ fnv1a(report.family));
  Suite s(report, samples, eps);
  try {
    auto fam = make_family(id);
    const auto e = fam->identity();
    s.check("associativity", [&] {
      auto a = fam->random_element(rng), b = fam->random_element(rng), c = fam->random_element(rng);
      return fam->distance(fam->multiply(fam->multiply(a, b), c), fam->multiply(a, fam->multiply(b, c)));
    });
    s.check("identity", [&] {
      auto a = fam->random_element(rng);
      return std::max(fam->distance(fam->multiply(e, a), a), fam->distance(fam->multiply(a, e), a));
    });
    s.check("inverse", [&] {
      auto a = fam->random_element(rng);
      auto ai = fam->inverse(a);
      return std::max(fam->distance(fam->multiply(a, ai), e), fam->distance(fam->multiply(ai, a), e));
    });
    s.check("action-compatibility", [&] {
      auto a = fam->random_element(rng), b = fam->random_element(rng);
      auto x = fam->random_point(rng);
      return fam->point_distance(fam->act(fam->multiply(a, b), x), fam->act(a, fam->act(b, x)));
    });
    s.check("action-identity", [&] {
      auto x = fam->random_point(rng);
      return fam->point_distance(fam->act(e, x), x);
    });
    switch (id.label) {
      case Family::D2:
        d2_checks(s, rng);
        break;
      case Family::C9:
        c9_checks(s, rng);
        break;
      case Family::BDelta3:
      case Family::BDelta4:
        chart_checks(s, rng, *fam, id.n);
        break;
      case Family::BBeta1:
        bbeta1_checks(s, rng, id);
        break;
      case Family::BBeta2:
        bbeta2_checks(s, rng, id);
        break;
      case Family::BDelta1:
      case Family::BDelta2:
        if (id.hopf) hopf_checks(s, rng, *fam, *id.hopf);
        break;
      default:
        break;
    }
  } catch (const Error& ex) {
    s.record_failure(std::string("exception: ") + ex.what());
  }
  for (const auto& c : report.checks) {
    report.max_error = std::max(report.max_error, c.max_error);
    report.pass = report.pass && c.pass;
  }
  return report;
}

std::vector<VerificationReport> verify_all(int samples, std::uint64_t seed, double eps) {
  std::vector<std::future<VerificationReport>> jobs;
  for (Family f : all_families())
    jobs.push_back(std::async(std::launch::async, [=] { return verify_family(default_family(f), samples, seed, eps); }));
  std::vector<VerificationReport> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

}  // namespace homsurf
