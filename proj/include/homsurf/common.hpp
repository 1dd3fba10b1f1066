#pragma once

#include <complex>
#include <cstdint>
#include <numbers>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>

namespace homsurf {

using Complex = std::complex<double>;

inline constexpr double kDefaultEps = 1e-9;
// Coefficients at or below this magnitude are dropped by canonicalization.
inline constexpr double kDropTolerance = 1e-12;
inline constexpr std::int64_t kDenominatorBound = 1'000'000;
inline constexpr double kRationalResidual = 1e-8;
inline constexpr double kRankThreshold = 1e-8;
inline constexpr double kPi = std::numbers::pi;
inline constexpr Complex kI{0.0, 1.0};
inline constexpr Complex kTwoPiI{0.0, 2.0 * std::numbers::pi};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or out-of-domain input.
class InputError : public Error {
 public:
  using Error::Error;
};

// Generators that do not span a discrete group, or a shape not in any table.
class ClassificationError : public Error {
 public:
  using Error::Error;
};

double scale_of(Complex a, Complex b);
double rel_diff(Complex a, Complex b);
bool approx_equal(Complex a, Complex b, double eps = kDefaultEps);
bool approx_zero(Complex a, double eps = kDefaultEps);
void require_finite(Complex a, const char* what);

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

// Continued-fraction reconstruction: accepts p/q with q <= bound and
// |q x - p| <= tol * max(1, |x|).
std::optional<Rational> rationalize(double x, std::int64_t bound = kDenominatorBound,
                                    double tol = kRationalResidual);
// Real-valued rational reconstruction of a complex number.
std::optional<Rational> rationalize(Complex x, std::int64_t bound = kDenominatorBound,
                                    double tol = kRationalResidual);
std::optional<std::int64_t> as_integer(double x, double tol = kRationalResidual);
std::optional<std::int64_t> as_integer(Complex x, double tol = kRationalResidual);

std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t lcm64(std::int64_t a, std::int64_t b);

using Rng = std::mt19937_64;

double random_real(Rng& rng, double lo, double hi);
// Uniform in the square |re|,|im| <= radius.
Complex random_complex(Rng& rng, double radius = 1.0);
// Modulus in [lo, hi], uniform argument.
Complex random_nonzero(Rng& rng, double lo = 0.5, double hi = 2.0);
int random_int(Rng& rng, int lo, int hi);

std::uint64_t fnv1a(const std::string& text);

std::string format_complex(Complex z, int precision = 12);

}  // namespace homsurf
