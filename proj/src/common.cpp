#include "homsurf/common.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace homsurf {

double scale_of(Complex a, Complex b) { return std::max({1.0, std::abs(a), std::abs(b)}); }

double rel_diff(Complex a, Complex b) { return std::abs(a - b) / scale_of(a, b); }

bool approx_equal(Complex a, Complex b, double eps) { return rel_diff(a, b) <= eps; }

bool approx_zero(Complex a, double eps) { return std::abs(a) <= eps; }

void require_finite(Complex a, const char* what) {
  if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
    throw InputError(std::string("non-finite value for ") + what);
}

std::optional<Rational> rationalize(double x, std::int64_t bound, double tol) {
  if (!std::isfinite(x)) return std::nullopt;
  const double limit = tol * std::max(1.0, std::abs(x));
  if (std::abs(x) > 1e15) return std::nullopt;
  // Convergents h/k of the continued fraction of x.
  long double h_prev = 1, h = std::floor(static_cast<long double>(x));
  long double k_prev = 0, k = 1;
  long double rem = static_cast<long double>(x) - h;
  for (int iter = 0; iter < 64; ++iter) {
    if (k > static_cast<long double>(bound)) break;
    if (std::abs(k * x - h) <= limit) {
      auto num = static_cast<std::int64_t>(h);
      auto den = static_cast<std::int64_t>(k);
      std::int64_t g = std::gcd(num, den);
      if (g == 0) g = 1;
      return Rational{num / g, den / g};
    }
    if (rem == 0) break;
    long double inv = 1.0L / rem;
    long double a = std::floor(inv);
    rem = inv - a;
    long double h_next = a * h + h_prev;
    long double k_next = a * k + k_prev;
    h_prev = h;
    k_prev = k;
    h = h_next;
    k = k_next;
  }
  return std::nullopt;
}

std::optional<Rational> rationalize(Complex x, std::int64_t bound, double tol) {
  if (std::abs(x.imag()) > tol * std::max(1.0, std::abs(x))) return std::nullopt;
  return rationalize(x.real(), bound, tol);
}

std::optional<std::int64_t> as_integer(double x, double tol) {
  if (!std::isfinite(x) || std::abs(x) > 1e15) return std::nullopt;
  double r = std::round(x);
  if (std::abs(x - r) > tol * std::max(1.0, std::abs(x))) return std::nullopt;
  return static_cast<std::int64_t>(r);
}

std::optional<std::int64_t> as_integer(Complex x, double tol) {
  if (std::abs(x.imag()) > tol * std::max(1.0, std::abs(x))) return std::nullopt;
  return as_integer(x.real(), tol);
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t lcm64(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  std::int64_t g = std::gcd(a, b);
  std::int64_t out = 0;
  if (__builtin_mul_overflow(std::abs(a / g), std::abs(b), &out))
    throw Error("integer overflow in lcm");
  return out;
}

double random_real(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

Complex random_complex(Rng& rng, double radius) {
  return {random_real(rng, -radius, radius), random_real(rng, -radius, radius)};
}

Complex random_nonzero(Rng& rng, double lo, double hi) {
  return std::polar(random_real(rng, lo, hi), random_real(rng, -kPi, kPi));
}

int random_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string format_complex(Complex z, int precision) {
  std::ostringstream os;
  os.precision(precision);
  os << z.real();
  if (z.imag() != 0.0) os << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
  return os.str();
}

}  // namespace homsurf
