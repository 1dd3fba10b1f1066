#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "homsurf/common.hpp"

namespace homsurf {

using RealVec = Eigen::VectorXd;
using IntRow = std::vector<std::int64_t>;

// Z-span of finitely many vectors of R^d.
struct IntegerSpan {
  int rank = 0;
  std::vector<RealVec> basis;
  std::vector<IntRow> basis_in_gens;  // basis[j] = sum_k basis_in_gens[j][k] gens[k]
  std::vector<IntRow> gens_in_basis;  // gens[k] = sum_j gens_in_basis[k][j] basis[j]
  std::vector<IntRow> relations;      // sum_k rel[k] gens[k] = 0, a Z-basis of all relations
};

int real_rank(const std::vector<RealVec>& vectors, double threshold = kRankThreshold);

// Throws ClassificationError when the span is not discrete.
IntegerSpan integer_span(const std::vector<RealVec>& gens, std::int64_t bound = kDenominatorBound,
                         double tol = kRationalResidual);

RealVec to_real(Complex z);
RealVec to_real(Complex z, Complex w);

// Discrete translation group of R^d given by R-independent generators.
class TranslationLattice {
 public:
  TranslationLattice() = default;
  explicit TranslationLattice(std::vector<RealVec> basis);

  int rank() const { return static_cast<int>(basis_.size()); }
  const std::vector<RealVec>& basis() const { return basis_; }
  // Least-squares coordinates and the residual outside the real span.
  std::pair<Eigen::VectorXd, double> coords(const RealVec& v) const;
  bool contains(const RealVec& v, double tol = 1e-8) const;
  // Representative with coordinates in [0,1).
  RealVec reduce(const RealVec& v) const;
  bool congruent(const RealVec& a, const RealVec& b, double tol = 1e-8) const;

 private:
  std::vector<RealVec> basis_;
  Eigen::MatrixXd matrix_;
};

// Lattice Z w1 + Z w2 in C.
class Lattice2 {
 public:
  Lattice2() : Lattice2(1.0, kI) {}
  Lattice2(Complex w1, Complex w2);

  Complex w1() const { return w1_; }
  Complex w2() const { return w2_; }
  Complex tau() const { return w2_ / w1_; }
  std::array<double, 2> coords(Complex z) const;
  bool contains(Complex z, double tol = 1e-8) const;
  Complex reduce(Complex z) const;
  bool congruent(Complex a, Complex b, double tol = 1e-8) const;
  bool preserved_by(Complex u, double tol = 1e-8) const;
  bool same_as(const Lattice2& other, double tol = 1e-8) const;
  // Same lattice with tau = w2/w1 in the standard fundamental domain.
  Lattice2 reduced() const;

 private:
  Complex w1_, w2_;
};

// Standard fundamental domain: Im tau > 0, -1/2 < Re tau <= 1/2, |tau| >= 1,
// and Re tau >= 0 when |tau| = 1.
Complex reduce_tau(Complex tau, double tol = 1e-12);

}  // namespace homsurf
