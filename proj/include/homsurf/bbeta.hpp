#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "homsurf/divisor.hpp"
#include "homsurf/exppoly.hpp"
#include "homsurf/points.hpp"

namespace homsurf {

using DivisorRef = std::shared_ptr<const Divisor>;

// Shared divisor with the degree >= 2 constraint checked.
DivisorRef make_bbeta_divisor(Divisor d);

// (t, f) in G_D = C x V_D.
struct GDElement {
  Complex t;
  ExpPoly f;
  DivisorRef divisor;
};

// (t, lambda, f) in rG_D = C x C^* x V_D.
struct RGDElement {
  Complex t;
  Complex lambda{1.0, 0.0};
  ExpPoly f;
  DivisorRef divisor;
};

// (w, s) in Q_D x C.
struct CentralizerElement {
  Complex varpi;
  Complex s;
};

GDElement gd_element(const DivisorRef& d, Complex t, ExpPoly f);
GDElement gd_identity(const DivisorRef& d);
GDElement gd_multiply(const GDElement& g, const GDElement& h);
GDElement gd_inverse(const GDElement& g);
AffinePoint gd_act(const GDElement& g, const AffinePoint& x);
double gd_distance(const GDElement& g, const GDElement& h);
GDElement gd_random(const DivisorRef& d, Rng& rng);

RGDElement rgd_element(const DivisorRef& d, Complex t, Complex lambda, ExpPoly f);
RGDElement rgd_identity(const DivisorRef& d);
RGDElement rgd_multiply(const RGDElement& g, const RGDElement& h);
RGDElement rgd_inverse(const RGDElement& g);
AffinePoint rgd_act(const RGDElement& g, const AffinePoint& x);
double rgd_distance(const RGDElement& g, const RGDElement& h);
RGDElement rgd_random(const DivisorRef& d, Rng& rng);

// Biholomorphisms of C^2 commuting with G_D.
class Centralizer {
 public:
  explicit Centralizer(Divisor d);
  const QuasiperiodGroup& quasiperiods() const { return q_; }
  Complex weight(Complex varpi) const;
  CentralizerElement multiply(const CentralizerElement& a, const CentralizerElement& b) const;
  CentralizerElement inverse(const CentralizerElement& a) const;
  AffinePoint act(const CentralizerElement& c, const AffinePoint& x) const;
  // ds/dt for the shear automorphism (z, w) -> (z, w + t f_0(z)).
  Complex shear_rate(Complex varpi) const;

 private:
  Divisor d_;
  QuasiperiodGroup q_;
  bool zero_in_divisor_;
};

template <class Element>
struct Morphism {
  Divisor target;
  std::function<AffinePoint(const AffinePoint&)> delta;
  std::function<Element(const Element&)> h;
};

using GDMorphism = Morphism<GDElement>;
using RGDMorphism = Morphism<RGDElement>;

// Kind 1: delta = g, h = Ad(g).
GDMorphism gd_morphism_adjoint(const GDElement& g);
// Kind 2: delta(z, w) = (z/mu, nu w), target mu D.
GDMorphism gd_morphism_rescale(const DivisorRef& d, Complex mu, Complex nu);
// Kind 3: delta(z, w) = (z, w + f0(z)) for f0 in V_{D+[0]}.
GDMorphism gd_morphism_shear(const DivisorRef& d, const ExpPoly& f0);
RGDMorphism rgd_morphism_adjoint(const RGDElement& g);
RGDMorphism rgd_morphism_rescale(const DivisorRef& d, Complex mu, Complex nu);
// Kind 3: delta(z, w) = (z, e^{az} w), target D + a.
RGDMorphism rgd_morphism_twist(const DivisorRef& d, Complex a);

struct MorphismParams {
  std::optional<GDElement> gd;
  std::optional<RGDElement> rgd;
  Complex mu{1.0, 0.0}, nu{1.0, 0.0}, a{0.0, 0.0};
  ExpPoly f0;
};
enum class BBetaGroup { GD, RGD };
// Dispatch on kind 1, 2 or 3; the unused alternative is empty.
std::pair<std::optional<GDMorphism>, std::optional<RGDMorphism>> morphism_family(int kind, BBetaGroup group,
                                                                                   const DivisorRef& d,
                                                                                   const MorphismParams& params);

// Normal forms of discrete subgroups of Q_D x C.
struct BBeta1Label {
  enum class Example { None, A, B, C, D, E, F, G, H, I };
  Example example = Example::None;
  int sub = 0;                  // A0/A1, B0/B1
  int n = 1;
  std::int64_t m = 0;
  Complex s{0.0, 0.0};
  Complex tau{0.0, 1.0};
  int delta_rank = 0;           // rank of the fibre group (Delta or pi_0)
  Complex lambda{0.0, 0.0};     // base point of the normalized divisor
  Divisor divisor;              // normalized divisor

  std::string name() const;
  // Generators of pi inside Q_D x C for the normalized divisor.
  std::vector<CentralizerElement> generators() const;
};

struct BBeta1Classification {
  BBeta1Label label;
  // Normalizer: (w, s) -> (w/mu, nu s + t c(w/mu)) with c the shear rate of mu D.
  Complex mu{1.0, 0.0}, nu{1.0, 0.0}, t{0.0, 0.0};
};

BBeta1Classification classify_pi(const std::vector<CentralizerElement>& gens, const Divisor& d,
                                 std::int64_t bound = kDenominatorBound);

// Label with the given example on the divisor [lambda] + sum [lambda + 2 pi i k_j] (or derived
// from n, m), checking the constraints; throws InputError naming the violated one.
BBeta1Label make_bbeta1_label(BBeta1Label::Example example, const Divisor& d, int n, Complex s = 0.0,
                              Complex tau = kI, int delta_rank = 1);

template <class Element>
struct CoveringMap {
  std::string label;
  std::function<AffinePoint(const AffinePoint&)> cover;
  std::function<AffinePoint(const Element&, const AffinePoint&)> act;
  std::function<bool(const AffinePoint&, const AffinePoint&)> same_point;
  std::vector<std::function<AffinePoint(const AffinePoint&)>> deck;
};

// same_point compares with tolerance tol.
CoveringMap<GDElement> quotient_cover(const BBeta1Label& label, double tol = 1e-8);
CoveringMap<RGDElement> rgd_quotients(const Divisor& d, int n, double tol = 1e-8);

// exponent -> coefficient for f = sum c e^{(base + step e) z}; throws if a frequency is off the grid.
std::map<int, Complex> laurent_coefficients(const ExpPoly& f, Complex base, Complex step);

}  // namespace homsurf
