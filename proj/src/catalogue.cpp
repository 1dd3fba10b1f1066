#include "homsurf/catalogue.hpp"

namespace homsurf {

namespace {

struct RawRow {
  const char* label;
  Family family;
  const char* parent;
  const char* surface;
  const char* group;
  const char* stabilizer;
  const char* constraints;
  const char* parameters;
  const char* topic;
};

constexpr const char* kQF = "quotient-free actions";
constexpr const char* kBb1 = "translations by exponential polynomials";
constexpr const char* kBb2 = "translations by exponential polynomials with rescaling";
constexpr const char* kBg = "triangular subgroups acting on O(n)";
constexpr const char* kBd = "linear actions and O(n) bundles";
constexpr const char* kD1 = "translation plane";
constexpr const char* kD2 = "universal cover of the affine group";
constexpr const char* kBetaC = "deg D >= 2";
constexpr const char* kGD = "G_D";
constexpr const char* kHD = "H_D";
constexpr const char* kCovAff = "uAff(C) -> G' -> Aff(C)";
constexpr const char* kBg2Group = "{e^{-a(n+1)/n} [[e^a, b], [0, 1]] : a, b in C} x| Sym^n(C^2)*";
constexpr const char* kBgStab = "(g, p), b = 0, p(1,0) = 0";
constexpr const char* kTri = "[[a, b], [0, 1/a]]";

const RawRow kRows[] = {
    {"A1", Family::A1, "", "P^2", "PSL(3,C)", "[[a00, a01, a02], [0, a11, a12], [0, a21, a22]]", "", "", kQF},
    {"A2", Family::A2, "", "C^2", "GL(2,C) x| C^2", "GL(2,C)", "", "", kQF},
    {"A3", Family::A3, "", "C^2", "SL(2,C) x| C^2", "SL(2,C)", "", "", kQF},
    {"Bβ1", Family::BBeta1, "", "C^2", kGD, kHD, kBetaC, "D", kBb1},
    {"Bβ1A0", Family::BBeta1, "Bβ1", "C x (C/Delta)", kGD, kHD, kBetaC, "D, Delta", kBb1},
    {"Bβ1A1", Family::BBeta1, "Bβ1", "C x (C/Delta)", "G_D/Delta", "H_D/Delta", kBetaC, "D, Delta", kBb1},
    {"Bβ1B0", Family::BBeta1, "Bβ1", "C* x C", "G_D/<(n,0)>", kHD, kBetaC, "D, n", kBb1},
    {"Bβ1B1", Family::BBeta1, "Bβ1", "C* x C", kGD, kHD, kBetaC, "D, n", kBb1},
    {"Bβ1C", Family::BBeta1, "Bβ1", "C* x C", kGD, kHD, kBetaC, "D, n", kBb1},
    {"Bβ1D", Family::BBeta1, "Bβ1", "C* x C*", "G_D/<(n,0),(0,1)>", kHD, kBetaC, "D, n", kBb1},
    {"Bβ1E", Family::BBeta1, "Bβ1", "C* x C*", "G_D/<(n,s),(0,1)>", kHD, kBetaC, "D, n, s", kBb1},
    {"Bβ1F", Family::BBeta1, "Bβ1", "C* -> X' -> C*", kGD, kHD, kBetaC, "D, n", kBb1},
    {"Bβ1G", Family::BBeta1, "Bβ1", "C* x (C/Lambda)", kGD, kHD, kBetaC, "D, n, Lambda", kBb1},
    {"Bβ1H", Family::BBeta1, "Bβ1", "C* x (C/Lambda)", kGD, kHD, kBetaC, "D, n, Lambda", kBb1},
    {"Bβ1I", Family::BBeta1, "Bβ1", "C/Lambda -> X' -> C*", kGD, kHD, kBetaC, "D, n, Lambda", kBb1},
    {"Bβ2", Family::BBeta2, "", "C^2", "rG_D", "rH_D", kBetaC, "D", kBb2},
    {"Bβ2′", Family::BBeta2, "Bβ2", "C* x C", "rG_D/<(n,1,0)>", kUnspecifiedStabilizer.c_str(), kBetaC, "D, n", kBb2},
    {"Bγ1", Family::BGamma1, "", "C^2", "{e^{-a(n+alpha)/n} [[e^a, b], [0, 1]] : a, b in C} x| Sym^n(C^2)*", kBgStab,
     "alpha != 1", "n, alpha", kBg},
    {"Bγ2", Family::BGamma2, "", "C^2", kBg2Group, kBgStab, "", "n", kBg},
    {"Bγ2′", Family::BGamma2, "Bγ2", "C x (C/Delta)",
     "{e^{-a(n+1)/n} [[e^a, b], [0, 1]] : a, b in C} x| (Sym^n(C^2)*/Delta)", kBgStab, "", "n, Delta", kBg},
    {"Bγ3", Family::BGamma3, "", "C^2", "{([[1, b], [0, e^{-a}]], Z2 r(Z1,Z2) + a Z1^n) : a, b in C, deg r = n-1}",
     "b = 0, r(0,1) = 0", "", "n", kBg},
    {"Bγ4", Family::BGamma4, "", "C^2", "{[[*, *], [0, *]]/Z_n} x| Sym^n(C^2)*", "(g, p), b = 0, p(0,1) = 0", "", "n",
     kBg},
    {"Bδ1", Family::BDelta1, "", "C^2 \\ 0", "SL(2,C)", "[[1, b], [0, 1]]", "", "", kBd},
    {"Bδ1′", Family::BDelta1, "Bδ1", "(C^2 \\ 0)/(z ~ lambda z)", "SL(2,C)", "[[1, b], [0, 1]]", "|lambda| < 1",
     "lambda", kBd},
    {"Bδ2", Family::BDelta2, "", "C^2 \\ 0", "GL(2,C)", "[[1, b], [0, c]]", "", "", kBd},
    {"Bδ2′", Family::BDelta2, "Bδ2", "(C^2 \\ 0)/(z ~ lambda z)", "GL(2,C)/<lambda I>", "[[1, b], [0, c]]",
     "|lambda| < 1", "lambda", kBd},
    {"Bδ3", Family::BDelta3, "", "O(n)", "(SL(2,C)/+-^n) x| Sym^n(C^2)*", "([[a, b], [0, 1/a]], p), p(1,0) = 1 - 1/a^n",
     "", "n", kBd},
    {"Bδ4", Family::BDelta4, "", "O(n)", "(GL(2,C)/Z_n) x| Sym^n(C^2)*", "([[a, b], [0, d]], p), p(1,0) = 1 - 1/a^n", "",
     "n", kBd},
    {"C2", Family::C2, "", "C^2", "C x Aff(C)", "{0} x C*", "", "", "translation times affine line"},
    {"C2′", Family::C2, "C2", "(C/Delta) x C", "(C/Delta) x Aff(C)", "{0} x C*", "", "Delta",
     "translation times affine line"},
    {"C3", Family::C3, "", "C^2", "Aff(C) x Aff(C)", "C* x C*", "", "", kQF},
    {"C5", Family::C5, "", "P^1 x C", "PSL(2,C) x C", kTri, "", "", "projective times translation line"},
    {"C5′", Family::C5, "C5", "P^1 x (C/Delta)", "PSL(2,C) x (C/Delta)", kTri, "", "Delta",
     "projective times translation line"},
    {"C6", Family::C6, "", "P^1 x C", "PSL(2,C) x (C* x| C)", "[[a, b], [0, 1/a]] x C*", "", "", kQF},
    {"C7", Family::C7, "", "P^1 x P^1", "PSL(2,C) x PSL(2,C)", "[[a, b], [0, 1/a]] x [[c, d], [0, 1/c]]", "", "", kQF},
    {"C8", Family::C8, "", "C^2", "{diag(e^t, e^{alpha t}) : t in C} x| C^2", "diag(e^t, e^{alpha t})", "alpha != 1",
     "alpha", "affine plane with 1-dimensional stabilizer"},
    {"C9", Family::C9, "", "P^1 x P^1 minus the diagonal", "PSL(2,C)", "[[a, 0], [0, 1/a]]", "", "",
     "affine quadric surface"},
    {"C9′", Family::C9, "C9", "P^2 minus (b^2 = 4ac)", "PSL(2,C)", "[[a, 0], [0, 1/a]], [[0, 1], [1, 0]]", "", "",
     "affine quadric surface"},
    {"D1", Family::D1, "", "C^2", "C^2", "0", "", "", kD1},
    {"D1_1", Family::D1, "D1", "C* x C", "C* x C", "0", "", "", kD1},
    {"D1_2", Family::D1, "D1", "C* x C*", "C* x C*", "0", "", "", kD1},
    {"D1_3", Family::D1, "D1", "(C/Delta) x C", "(C/Delta) x C", "0", "", "tau", kD1},
    {"D1_4", Family::D1, "D1", "C* x (C/Delta)", "C* x (C/Delta)", "0", "", "tau", kD1},
    {"D1_5", Family::D1, "D1", "C* -> X' -> C/Delta", "C* -> G' -> C/Delta", "0", "", "tau, sigma", kD1},
    {"D1_6", Family::D1, "D1", "C^2/Lambda", "C^2/Lambda", "0", "", "Lambda", kD1},
    {"D2", Family::D2, "", "C^2", "uAff(C)", "0", "", "", kD2},
    {"D2_1", Family::D2, "D2", "C x C*", "uAff(C)", "(0, n)", "", "", kD2},
    {"D2_2", Family::D2, "D2", "C x (C/Lambda)", "uAff(C)", "(0, n + m tau)", "E any elliptic curve", "tau", kD2},
    {"D2_3", Family::D2, "D2", "C* x C", "uAff(C)", kUnspecifiedStabilizer.c_str(), "", "k", kD2},
    {"D2_4", Family::D2, "D2", "C* x C*", kCovAff, kUnspecifiedStabilizer.c_str(), "", "k, b", kD2},
    {"D2_5", Family::D2, "D2", "C* x E_tau", kCovAff, kUnspecifiedStabilizer.c_str(), "", "k, b, tau", kD2},
    {"D2_6", Family::D2, "D2", "C* x C", kCovAff, kUnspecifiedStabilizer.c_str(), "", "a", kD2},
    {"D2_7", Family::D2, "D2", "C* -> X' -> C*", kCovAff, kUnspecifiedStabilizer.c_str(), "", "k", kD2},
    {"D2_8", Family::D2, "D2", "E_tau -> X' -> C*", kCovAff, kUnspecifiedStabilizer.c_str(), "", "k, tau", kD2},
    {"D2_9", Family::D2, "D2", "E_i -> X' -> C*", kCovAff, kUnspecifiedStabilizer.c_str(), "", "k", kD2},
    {"D2_10", Family::D2, "D2", "E_omega -> X' -> C*", kCovAff, kUnspecifiedStabilizer.c_str(), "", "k", kD2},
    {"D2_11", Family::D2, "D2", "E_omega -> X' -> C*", kCovAff, kUnspecifiedStabilizer.c_str(), "", "k", kD2},
    {"D2_12", Family::D2, "D2", "E_omega -> X' -> C*", kCovAff, kUnspecifiedStabilizer.c_str(), "", "k", kD2},
    {"D2_13", Family::D2, "D2", "E_omega -> X' -> C*", kCovAff, kUnspecifiedStabilizer.c_str(), "", "k", kD2},
    {"D2_14", Family::D2, "D2", "(C/Lambda) x C", kCovAff, kUnspecifiedStabilizer.c_str(), "", "a1, a2", kD2},
    {"D3", Family::D3, "", "C^2", "C* x| C^2", "C*", "", "", kQF},
};

}  // namespace

const std::vector<CatalogueRow>& catalogue() {
  static const std::vector<CatalogueRow> rows = [] {
    std::vector<CatalogueRow> out;
    for (const auto& r : kRows) {
      CatalogueRow row{r.label, r.family, r.parent, r.surface, r.group, r.stabilizer, r.constraints, r.parameters, "", r.topic};
      if (!row.parent.empty())
        row.quotient_policy = "quotient";
      else
        row.quotient_policy =
            quotient_policy(default_family(r.family)).kind == QuotientPolicy::Kind::Policy ? "policy" : "none";
      out.push_back(std::move(row));
    }
    return out;
  }();
  return rows;
}

std::vector<CatalogueRow> enumerate_catalogue(const std::optional<std::string>& prefix) {
  std::vector<CatalogueRow> out;
  for (const auto& row : catalogue())
    if (!prefix || row.label.rfind(*prefix, 0) == 0) out.push_back(row);
  return out;
}

}  // namespace homsurf
