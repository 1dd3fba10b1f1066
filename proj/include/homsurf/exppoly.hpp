#pragma once

#include <optional>
#include <vector>

#include "homsurf/common.hpp"
#include "homsurf/divisor.hpp"

namespace homsurf {

// Coefficient list indexed by degree; trailing coefficients <= 1e-12 are trimmed.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Complex> coeffs);
  static Polynomial monomial(int degree, Complex c = 1.0);

  const std::vector<Complex>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Complex coeff(int k) const;
  Complex operator()(Complex z) const;
  Polynomial derivative() const;
  // q(z) = p(z - t), computed by repeated synthetic division.
  Polynomial shifted(Complex t) const;
  // q(z) = p(mu z).
  Polynomial rescaled(Complex mu) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(Complex c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, Complex c) { return a *= c; }
  friend Polynomial operator*(Complex c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

 private:
  void trim();
  std::vector<Complex> coeffs_;
};

struct ExpTerm {
  Complex frequency;
  Polynomial poly;
};

// Finite sum of e^{lambda_j z} p_j(z) in canonical form.
class ExpPoly {
 public:
  ExpPoly() = default;
  explicit ExpPoly(std::vector<ExpTerm> terms, double eps = kDefaultEps);
  static ExpPoly term(Complex frequency, Polynomial poly);
  static ExpPoly exponential(Complex frequency, Complex c = 1.0);
  static ExpPoly constant(Complex c);
  static ExpPoly polynomial(std::vector<Complex> coeffs);

  const std::vector<ExpTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Complex operator()(Complex z) const;
  ExpPoly derivative() const;
  // e^{a z} f(z).
  ExpPoly times_exponential(Complex a) const;
  // f(mu z).
  ExpPoly rescaled(Complex mu) const;

  ExpPoly& operator+=(const ExpPoly& other);
  ExpPoly& operator-=(const ExpPoly& other);
  ExpPoly& operator*=(Complex c);
  ExpPoly operator-() const;
  friend ExpPoly operator+(ExpPoly a, const ExpPoly& b) { return a += b; }
  friend ExpPoly operator-(ExpPoly a, const ExpPoly& b) { return a -= b; }
  friend ExpPoly operator*(ExpPoly a, Complex c) { return a *= c; }
  friend ExpPoly operator*(Complex c, ExpPoly a) { return a *= c; }

 private:
  std::vector<ExpTerm> terms_;
};

Complex evaluate(const ExpPoly& f, Complex z);
ExpPoly translate(const ExpPoly& f, Complex t);
// Largest relative coefficient difference after matching frequencies.
double distance(const ExpPoly& f, const ExpPoly& g, double eps = kDefaultEps);
bool approx_equal(const ExpPoly& f, const ExpPoly& g, double eps = kDefaultEps);

// p(d/dz) with p monic; the root factorization is kept when known.
class DiffOperator {
 public:
  explicit DiffOperator(Polynomial monic);
  static DiffOperator from_roots(const Divisor& d);

  const Polynomial& monic() const { return monic_; }
  const std::optional<std::vector<DivisorPoint>>& roots() const { return roots_; }

 private:
  Polynomial monic_;
  std::optional<std::vector<DivisorPoint>> roots_;
};

ExpPoly apply_operator(const DiffOperator& p, const ExpPoly& f);
DiffOperator monic_polynomial(const Divisor& d);
std::vector<ExpPoly> basis_of(const Divisor& d);
bool contains(const Divisor& d, const ExpPoly& f);
// Random element of V_D with coefficients in the unit square.
ExpPoly random_member(const Divisor& d, Rng& rng, double radius = 1.0);

}  // namespace homsurf
