#include "homsurf/d1.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "homsurf/lattice.hpp"
#include "homsurf/split.hpp"

namespace homsurf {

namespace {

Complex det2(const Vec2& u, const Vec2& v) { return u[0] * v[1] - u[1] * v[0]; }

Vec2 from_real(const RealVec& r) { return {Complex(r[0], r[1]), Complex(r[2], r[3])}; }

Mat2 columns(const Vec2& a, const Vec2& b) {
  Mat2 m;
  m.col(0) = a;
  m.col(1) = b;
  return m;
}

// Some vector completing u to a basis of C^2.
Vec2 complement(const Vec2& u) { return {-std::conj(u[1]), std::conj(u[0])}; }

Vec2 combine(const std::vector<Vec2>& basis, const IntRow& coeffs) {
  Vec2 v = Vec2::Zero();
  for (std::size_t k = 0; k < coeffs.size(); ++k) v += static_cast<double>(coeffs[k]) * basis[k];
  return v;
}

// Reduced lattice Z mu1 + Z mu2 with integer coordinates of the new basis.
struct ReducedPair {
  Complex w1, w2;
  std::array<std::int64_t, 4> coeffs;  // w1 = c0 mu1 + c1 mu2, w2 = c2 mu1 + c3 mu2
};

ReducedPair reduce_pair(Complex mu1, Complex mu2) {
  Lattice2 original(mu1, mu2);
  Lattice2 red = original.reduced();
  auto a = original.coords(red.w1()), b = original.coords(red.w2());
  return {red.w1(), red.w2(),
          {std::llround(a[0]), std::llround(a[1]), std::llround(b[0]), std::llround(b[1])}};
}

// A complex line inside the real span of three vectors spanning C^2 over C.
Vec2 complex_line(const std::vector<Vec2>& b) {
  Eigen::MatrixXd m(4, 6);
  for (int k = 0; k < 3; ++k) {
    m.col(k) = to_real(kI * b[static_cast<std::size_t>(k)][0], kI * b[static_cast<std::size_t>(k)][1]);
    m.col(k + 3) = -to_real(b[static_cast<std::size_t>(k)][0], b[static_cast<std::size_t>(k)][1]);
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
  Vec2 best = Vec2::Zero();
  for (int col = 4; col < 6; ++col) {
    Eigen::VectorXd x = svd.matrixV().col(col);
    Vec2 v = x[0] * b[0] + x[1] * b[1] + x[2] * b[2];
    if (v.norm() > best.norm()) best = v;
  }
  if (best.norm() < 1e-10) throw ClassificationError("rank three group without a complex line");
  return best / best.norm();
}

struct Twisted {
  Mat2 normalizer;
  Complex tau, sigma;
};

// Z-basis (b, bj, bk) with A b = (0, 1), A bj = (1, 0), A bk = (tau, sigma), Im tau > 0.
std::optional<Twisted> twisted_form(const Vec2& b, Vec2 bj, Vec2 bk) {
  if (std::abs(det2(bj, b)) <= 1e-10 * bj.norm() * b.norm()) return std::nullopt;
  Mat2 a = columns(bj, b).inverse();
  Vec2 img = a * bk;
  if (std::abs(img[0].imag()) <= 1e-6 * std::max(1.0, std::abs(img[0]))) return std::nullopt;
  if (img[0].imag() < 0) bk = -bk;
  Complex tau0 = (a * bk)[0];
  auto red = reduce_pair(1.0, tau0);
  Vec2 nj = static_cast<double>(red.coeffs[0]) * bj + static_cast<double>(red.coeffs[1]) * bk;
  Vec2 nk = static_cast<double>(red.coeffs[2]) * bj + static_cast<double>(red.coeffs[3]) * bk;
  a = columns(nj, b).inverse();
  img = a * nk;
  // Adding multiples of b moves sigma by integers.
  img[1] -= std::floor(img[1].real() + 1e-12);
  return Twisted{a, snap_tau(img[0]), img[1]};
}

std::optional<Twisted> find_twisted(const std::vector<Vec2>& basis) {
  static constexpr int kPerm[6][3] = {{2, 0, 1}, {0, 1, 2}, {1, 2, 0}, {2, 1, 0}, {0, 2, 1}, {1, 0, 2}};
  for (const auto& p : kPerm)
    if (auto t = twisted_form(basis[p[0]], basis[p[1]], basis[p[2]])) return t;
  // Small unimodular changes of basis.
  std::array<int, 9> u{};
  for (int code = 0; code < 19683; ++code) {
    int c = code;
    for (int& e : u) {
      e = c % 3 - 1;
      c /= 3;
    }
    int det = u[0] * (u[4] * u[8] - u[5] * u[7]) - u[1] * (u[3] * u[8] - u[5] * u[6]) + u[2] * (u[3] * u[7] - u[4] * u[6]);
    if (det != 1 && det != -1) continue;
    std::array<Vec2, 3> row;
    for (int r = 0; r < 3; ++r)
      row[static_cast<std::size_t>(r)] = u[static_cast<std::size_t>(3 * r)] * basis[0] +
                                         u[static_cast<std::size_t>(3 * r + 1)] * basis[1] +
                                         u[static_cast<std::size_t>(3 * r + 2)] * basis[2];
    if (auto t = twisted_form(row[0], row[1], row[2])) return t;
  }
  return std::nullopt;
}

}  // namespace

std::string D1Label::name() const { return index == 0 ? "D1" : "D1_" + std::to_string(index); }

std::vector<Vec2> D1Label::generators() const {
  const Vec2 e1(1.0, 0.0), e2(0.0, 1.0);
  switch (index) {
    case 0:
      return {};
    case 1:
      return {e1};
    case 2:
      return {e1, e2};
    case 3:
      return {e1, Vec2(tau, 0.0)};
    case 4:
      return {e1, Vec2(tau, 0.0), e2};
    case 5:
      return {e1, Vec2(tau, sigma), e2};
    case 6:
      return {e1, e2, l3, l4};
    default:
      throw InputError("unknown D1 label index");
  }
}

D1Classification classify_D1_subgroup(const std::vector<Vec2>& gens) {
  std::vector<RealVec> real;
  for (const auto& g : gens) {
    require_finite(g[0], "D1 generator");
    require_finite(g[1], "D1 generator");
    real.push_back(to_real(g[0], g[1]));
  }
  IntegerSpan span = integer_span(real);
  std::vector<Vec2> b;
  for (const auto& v : span.basis) b.push_back(from_real(v));

  D1Classification out;
  out.rank = span.rank;
  D1Label& label = out.label;
  switch (span.rank) {
    case 0:
      break;
    case 1:
      label.index = 1;
      out.normalizer = columns(b[0], complement(b[0])).inverse();
      break;
    case 2: {
      if (std::abs(det2(b[0], b[1])) > 1e-8 * b[0].norm() * b[1].norm()) {
        label.index = 2;
        out.normalizer = columns(b[0], b[1]).inverse();
        break;
      }
      label.index = 3;
      Complex mu = b[1].dot(b[0]) / b[0].squaredNorm();  // conj-linear in the first slot
      mu = std::conj(mu);
      auto red = reduce_pair(1.0, mu);
      label.tau = snap_tau(red.w2 / red.w1);
      out.normalizer = columns(red.w1 * b[0], complement(b[0])).inverse();
      break;
    }
    case 3: {
      Vec2 v = complex_line(b);
      std::vector<RealVec> images;
      for (const auto& x : b) images.push_back(to_real(det2(v, x)));
      std::optional<IntegerSpan> bar;
      try {
        bar = integer_span(images);
      } catch (const ClassificationError&) {
      }
      if (bar && bar->rank == 1) {
        label.index = 4;
        Vec2 p1 = combine(b, bar->relations[0]), p2 = combine(b, bar->relations[1]);
        Vec2 e = combine(b, bar->basis_in_gens[0]);
        auto red = reduce_pair(v.dot(p1), v.dot(p2));
        label.tau = snap_tau(red.w2 / red.w1);
        out.normalizer = columns(red.w1 * v, e).inverse();
      } else {
        auto t = find_twisted(b);
        if (!t) throw ClassificationError("rank three group without a twisted normal form");
        label.index = 5;
        label.tau = t->tau;
        label.sigma = t->sigma;
        out.normalizer = t->normalizer;
        out.sigma_warning = std::abs(t->sigma) < 1e-8 || std::abs(t->sigma - 1.0) < 1e-8;
      }
      break;
    }
    case 4: {
      std::size_t bi = 0, bj = 1;
      double best = -1.0;
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
          if (double d = std::abs(det2(b[i], b[j])); d > best) {
            best = d;
            bi = i;
            bj = j;
          }
      label.index = 6;
      out.normalizer = columns(b[bi], b[bj]).inverse();
      std::vector<Vec2> rest;
      for (std::size_t k = 0; k < 4; ++k)
        if (k != bi && k != bj) rest.push_back(out.normalizer * b[k]);
      label.l3 = rest[0];
      label.l4 = rest[1];
      break;
    }
    default:
      throw ClassificationError("generators are not discrete: rank exceeds 4");
  }
  out.normalized_generators = label.generators();
  return out;
}

bool same_d1_subgroup(const std::vector<Vec2>& a, const std::vector<Vec2>& b, double tol) {
  auto lattice_of = [](const std::vector<Vec2>& g) {
    std::vector<RealVec> real;
    for (const auto& v : g) real.push_back(to_real(v[0], v[1]));
    return TranslationLattice(integer_span(real).basis);
  };
  auto inside = [&](const std::vector<Vec2>& g, const TranslationLattice& l) {
    return std::all_of(g.begin(), g.end(), [&](const Vec2& v) { return l.contains(to_real(v[0], v[1]), tol); });
  };
  return inside(a, lattice_of(b)) && inside(b, lattice_of(a));
}

}  // namespace homsurf
