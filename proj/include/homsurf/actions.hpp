#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "homsurf/bbeta.hpp"
#include "homsurf/projective.hpp"
#include "homsurf/uaff.hpp"

namespace homsurf {

enum class Family {
  A1, A2, A3,
  BBeta1, BBeta2,
  BGamma1, BGamma2, BGamma3, BGamma4,
  BDelta1, BDelta2, BDelta3, BDelta4,
  C2, C3, C5, C6, C7, C8, C9,
  D1, D2, D3
};

const std::vector<Family>& all_families();

struct FamilyId {
  Family label = Family::D1;
  int n = 1;                      // B-gamma, B-delta-3/4
  Complex c{1.0, 0.0};            // B-gamma-1 weight, nonzero
  Complex alpha{2.0, 0.0};        // C8 exponent, not 0 or 1
  DivisorRef divisor;             // B-beta; defaults to [0] + [2 pi i]
  std::optional<Complex> hopf;    // B-delta-1/2 modulo z ~ hopf z

  std::string name() const;
  // Throws InputError naming the violated constraint.
  void validate() const;
  bool same_as(const FamilyId& other) const;
};

// Accepts the table spelling (Bβ1, Bγ2, Bδ3) and ASCII forms (Bb1, Bg2, Bd3).
Family parse_family(const std::string& name);
std::string family_name(Family f);
FamilyId default_family(Family f);

// (z, w) coordinate tuples: D1 (v1, v2), C2 (t, a, b), C3 (a1, b1, a2, b2), C8 (t, v1, v2), D3 (s, v1, v2).
struct TupleElement {
  std::vector<Complex> x;
};

// Matrices plus scalars: A1 (g), A2/A3 (A; v1, v2), C5 (g; t), C6 (g; a, b), C7 (g, h), C9 (g), B-delta-1/2 (g).
struct MatrixElement {
  std::vector<MatX> mats;
  std::vector<Complex> x;
};

using Payload = std::variant<TupleElement, MatrixElement, OnElement, UAffElement, GDElement, RGDElement>;

struct GroupElement {
  FamilyId family;
  Payload payload;
};

class ActionFamily {
 public:
  explicit ActionFamily(FamilyId id) : id_(std::move(id)) {}
  virtual ~ActionFamily() = default;

  const FamilyId& id() const { return id_; }

  virtual GroupElement identity() const = 0;
  virtual GroupElement multiply(const GroupElement& g, const GroupElement& h) const = 0;
  virtual GroupElement inverse(const GroupElement& g) const = 0;
  virtual SurfacePoint act(const GroupElement& g, const SurfacePoint& x) const = 0;
  // Relative distance in the group, modulo the kernel of the action.
  virtual double distance(const GroupElement& g, const GroupElement& h) const = 0;
  virtual double point_distance(const SurfacePoint& x, const SurfacePoint& y) const = 0;
  virtual GroupElement random_element(Rng& rng) const = 0;
  virtual SurfacePoint random_point(Rng& rng) const = 0;
  // Throws InputError when the payload does not belong to the family.
  virtual void validate(const GroupElement& g) const = 0;

 private:
  FamilyId id_;
};

std::unique_ptr<ActionFamily> make_family(const FamilyId& id);

// Family checks plus dispatch through make_family.
GroupElement multiply(const GroupElement& g, const GroupElement& h);
GroupElement inverse(const GroupElement& g);
SurfacePoint act(const GroupElement& g, const SurfacePoint& x);

struct QuotientPolicy {
  enum class Kind { NoQuotients, Policy };
  Kind kind = Kind::NoQuotients;
  std::string parameters;   // parameter space of the quotients
  std::string constructor;  // library entry point building them
};

QuotientPolicy quotient_policy(const FamilyId& f);

// Quotient of C^2 by a discrete translation group: representative reduced to coordinates in [0, 1).
QuotientPoint make_quotient_point(const AffinePoint& x, const TranslationLattice& subgroup);
bool same_quotient_point(const QuotientPoint& a, const QuotientPoint& b, double tol = 1e-8);

}  // namespace homsurf
