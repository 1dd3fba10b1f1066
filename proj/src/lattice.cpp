#include "homsurf/lattice.hpp"

#include <algorithm>
#include <cmath>

namespace homsurf {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw Error("integer overflow in lattice reduction");
  return out;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_sub_overflow(a, b, &out)) throw Error("integer overflow in lattice reduction");
  return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw Error("integer overflow in lattice reduction");
  return out;
}

using IntMatrix = std::vector<IntRow>;

IntMatrix identity_matrix(std::size_t m) {
  IntMatrix id(m, IntRow(m, 0));
  for (std::size_t i = 0; i < m; ++i) id[i][i] = 1;
  return id;
}

}  // namespace

int real_rank(const std::vector<RealVec>& vectors, double threshold) {
  if (vectors.empty()) return 0;
  const auto d = vectors.front().size();
  Eigen::MatrixXd m(d, vectors.size());
  double scale = 0.0;
  for (std::size_t k = 0; k < vectors.size(); ++k) {
    m.col(static_cast<Eigen::Index>(k)) = vectors[k];
    scale = std::max(scale, vectors[k].norm());
  }
  if (scale == 0.0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& s = svd.singularValues();
  int rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s[i] > threshold * std::max(1.0, scale)) ++rank;
  return rank;
}

IntegerSpan integer_span(const std::vector<RealVec>& gens, std::int64_t bound, double tol) {
  IntegerSpan out;
  const std::size_t m = gens.size();
  if (m == 0) return out;
  const auto d = gens.front().size();

  // Greedy R-independent subset.
  std::vector<std::size_t> chosen;
  std::vector<RealVec> chosen_vecs;
  for (std::size_t k = 0; k < m; ++k) {
    if (gens[k].size() != d) throw InputError("generators have mismatched dimensions");
    auto trial = chosen_vecs;
    trial.push_back(gens[k]);
    if (real_rank(trial) > static_cast<int>(chosen_vecs.size())) {
      chosen.push_back(k);
      chosen_vecs.push_back(gens[k]);
    }
  }
  const std::size_t r = chosen.size();
  if (r == 0) {
    out.gens_in_basis.assign(m, IntRow{});
    out.relations = identity_matrix(m);
    return out;
  }
  Eigen::MatrixXd b(d, static_cast<Eigen::Index>(r));
  for (std::size_t j = 0; j < r; ++j) b.col(static_cast<Eigen::Index>(j)) = chosen_vecs[j];
  auto qr = b.colPivHouseholderQr();

  // Rational coordinates of every generator in the chosen R-basis.
  std::vector<std::vector<Rational>> coords(m);
  std::int64_t common = 1;
  for (std::size_t k = 0; k < m; ++k) {
    Eigen::VectorXd c = qr.solve(gens[k]);
    double resid = (b * c - gens[k]).norm();
    if (resid > 1e-8 * std::max(1.0, gens[k].norm()))
      throw ClassificationError("generators are not discrete: residual outside real span");
    for (Eigen::Index j = 0; j < c.size(); ++j) {
      auto q = rationalize(c[j], bound, tol);
      if (!q) throw ClassificationError("generators are not discrete: irrational dependency");
      coords[k].push_back(*q);
      common = lcm64(common, q->den);
      if (common > bound) throw ClassificationError("generators are not discrete: denominators too large");
    }
  }
  IntMatrix c(m, IntRow(r, 0));
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t j = 0; j < r; ++j) c[k][j] = checked_mul(coords[k][j].num, common / coords[k][j].den);

  // Row echelon form by integer row operations; u tracks them, uinv their inverse.
  IntMatrix u = identity_matrix(m);
  IntMatrix uinv = identity_matrix(m);
  auto swap_rows = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    std::swap(c[i], c[j]);
    std::swap(u[i], u[j]);
    for (std::size_t row = 0; row < m; ++row) std::swap(uinv[row][i], uinv[row][j]);
  };
  // row_i -= q * row_p
  auto sub_row = [&](std::size_t i, std::size_t p, std::int64_t q) {
    if (q == 0) return;
    for (std::size_t col = 0; col < r; ++col) c[i][col] = checked_sub(c[i][col], checked_mul(q, c[p][col]));
    for (std::size_t col = 0; col < m; ++col) u[i][col] = checked_sub(u[i][col], checked_mul(q, u[p][col]));
    for (std::size_t row = 0; row < m; ++row)
      uinv[row][p] = checked_add(uinv[row][p], checked_mul(q, uinv[row][i]));
  };
  auto negate_row = [&](std::size_t i) {
    for (auto& x : c[i]) x = -x;
    for (auto& x : u[i]) x = -x;
    for (std::size_t row = 0; row < m; ++row) uinv[row][i] = -uinv[row][i];
  };

  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < r && pivot_row < m; ++col) {
    while (true) {
      std::size_t best = m;
      for (std::size_t i = pivot_row; i < m; ++i)
        if (c[i][col] != 0 && (best == m || std::abs(c[i][col]) < std::abs(c[best][col]))) best = i;
      if (best == m) break;
      swap_rows(pivot_row, best);
      bool done = true;
      for (std::size_t i = pivot_row + 1; i < m; ++i) {
        if (c[i][col] == 0) continue;
        sub_row(i, pivot_row, c[i][col] / c[pivot_row][col]);
        if (c[i][col] != 0) done = false;
      }
      if (done) break;
    }
    if (c[pivot_row][col] == 0) continue;
    if (c[pivot_row][col] < 0) negate_row(pivot_row);
    for (std::size_t i = 0; i < pivot_row; ++i) {
      std::int64_t q = c[i][col] / c[pivot_row][col];
      if (c[i][col] - q * c[pivot_row][col] < 0) --q;
      sub_row(i, pivot_row, q);
    }
    ++pivot_row;
  }
  if (pivot_row != r) throw Error("integer span: unexpected rank drop");

  out.rank = static_cast<int>(r);
  for (std::size_t j = 0; j < r; ++j) {
    // Recombine from the generators to limit rounding.
    RealVec v = RealVec::Zero(d);
    for (std::size_t k = 0; k < m; ++k) v += static_cast<double>(u[j][k]) * gens[k];
    out.basis.push_back(v);
    out.basis_in_gens.push_back(u[j]);
  }
  for (std::size_t k = 0; k < m; ++k) out.gens_in_basis.emplace_back(uinv[k].begin(), uinv[k].begin() + static_cast<long>(r));
  for (std::size_t j = r; j < m; ++j) out.relations.push_back(u[j]);
  return out;
}

RealVec to_real(Complex z) {
  RealVec v(2);
  v << z.real(), z.imag();
  return v;
}

RealVec to_real(Complex z, Complex w) {
  RealVec v(4);
  v << z.real(), z.imag(), w.real(), w.imag();
  return v;
}

TranslationLattice::TranslationLattice(std::vector<RealVec> basis) : basis_(std::move(basis)) {
  if (basis_.empty()) return;
  if (real_rank(basis_) != static_cast<int>(basis_.size()))
    throw InputError("lattice generators are not R-independent");
  matrix_.resize(basis_.front().size(), static_cast<Eigen::Index>(basis_.size()));
  for (std::size_t j = 0; j < basis_.size(); ++j) matrix_.col(static_cast<Eigen::Index>(j)) = basis_[j];
}

std::pair<Eigen::VectorXd, double> TranslationLattice::coords(const RealVec& v) const {
  if (basis_.empty()) return {Eigen::VectorXd(), v.norm()};
  Eigen::VectorXd c = matrix_.colPivHouseholderQr().solve(v);
  return {c, (matrix_ * c - v).norm()};
}

bool TranslationLattice::contains(const RealVec& v, double tol) const {
  auto [c, resid] = coords(v);
  double scale = std::max(1.0, v.norm());
  if (resid > tol * scale) return false;
  for (Eigen::Index j = 0; j < c.size(); ++j)
    if (std::abs(c[j] - std::round(c[j])) > tol * std::max(1.0, std::abs(c[j]))) return false;
  return true;
}

RealVec TranslationLattice::reduce(const RealVec& v) const {
  if (basis_.empty()) return v;
  auto [c, resid] = coords(v);
  RealVec out = v;
  for (Eigen::Index j = 0; j < c.size(); ++j) out -= std::floor(c[j]) * basis_[static_cast<std::size_t>(j)];
  return out;
}

bool TranslationLattice::congruent(const RealVec& a, const RealVec& b, double tol) const {
  return contains(a - b, tol);
}

Lattice2::Lattice2(Complex w1, Complex w2) : w1_(w1), w2_(w2) {
  require_finite(w1, "lattice generator");
  require_finite(w2, "lattice generator");
  if (std::abs(w1) == 0.0 || std::abs((w2 / w1).imag()) <= 1e-12)
    throw InputError("lattice generators are not R-independent");
}

std::array<double, 2> Lattice2::coords(Complex z) const {
  // z = x w1 + y w2 with x, y real.
  double det = (std::conj(w1_) * w2_).imag();
  double x = (std::conj(z) * w2_).imag() / det;
  double y = (std::conj(w1_) * z).imag() / det;
  return {x, y};
}

bool Lattice2::contains(Complex z, double tol) const {
  auto [x, y] = coords(z);
  return std::abs(x - std::round(x)) <= tol * std::max(1.0, std::abs(x)) &&
         std::abs(y - std::round(y)) <= tol * std::max(1.0, std::abs(y));
}

Complex Lattice2::reduce(Complex z) const {
  auto [x, y] = coords(z);
  return z - std::floor(x) * w1_ - std::floor(y) * w2_;
}

bool Lattice2::congruent(Complex a, Complex b, double tol) const { return contains(a - b, tol); }

bool Lattice2::preserved_by(Complex u, double tol) const {
  if (std::abs(u) == 0.0) return false;
  return contains(u * w1_, tol) && contains(u * w2_, tol) && contains(w1_ / u, tol) && contains(w2_ / u, tol);
}

bool Lattice2::same_as(const Lattice2& other, double tol) const {
  return contains(other.w1_, tol) && contains(other.w2_, tol) && other.contains(w1_, tol) &&
         other.contains(w2_, tol);
}

Lattice2 Lattice2::reduced() const {
  Complex a = w1_, b = w2_;
  if ((b / a).imag() < 0) b = -b;
  for (int iter = 0; iter < 1000; ++iter) {
    Complex tau = b / a;
    double shift = std::round(tau.real());
    b -= shift * a;
    tau = b / a;
    if (std::abs(tau) < 1.0 - 1e-12) {
      Complex na = b, nb = -a;
      a = na;
      b = nb;
      continue;
    }
    break;
  }
  Complex tau = b / a;
  if (tau.real() <= -0.5 + 1e-12) {
    b += a;
    tau = b / a;
  }
  if (std::abs(std::abs(tau) - 1.0) <= 1e-12 && tau.real() < -1e-12) {
    Complex na = b, nb = -a;
    a = na;
    b = nb;
  }
  return Lattice2(a, b);
}

Complex reduce_tau(Complex tau, double tol) {
  if (tau.imag() <= 0) throw InputError("tau must lie in the upper half plane");
  for (int iter = 0; iter < 1000; ++iter) {
    tau -= std::round(tau.real());
    if (std::abs(tau) < 1.0 - tol) {
      tau = -1.0 / tau;
      continue;
    }
    break;
  }
  if (tau.real() <= -0.5 + tol) tau += 1.0;
  if (std::abs(std::abs(tau) - 1.0) <= tol && tau.real() < -tol) tau = -1.0 / tau;
  return tau;
}

}  // namespace homsurf
