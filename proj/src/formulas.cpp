#include "diaglab/formulas.hpp"

#include <algorithm>

namespace diaglab {

std::string quantity_name(Quantity q) {
  switch (q) {
    case Quantity::KappaG: return "kappa_g";
    case Quantity::KappaBarG: return "kappa_bar_g";
    case Quantity::TG: return "t_g";
    case Quantity::TBarG: return "t_bar_g";
    case Quantity::TC: return "t_c";
    case Quantity::UpperBoundTG: return "upper_bound_t_g";
  }
  return "t_g";
}

namespace {

long half(long doubled) {
  // all catalog formulas with a 1/2 factor are integral
  if (doubled % 2 != 0) throw Error("formula produced a non-integral value");
  return doubled / 2;
}

/// Basic hypercube extra connectivity, n >= 4, g in [0, n-3].
long kappa_bar_hypercube(long n, long g) { return half((g + 1) * (2 * (n - 1) - g)) + 1; }

bool extended_branch_valid(long n, long g) {
  if (n >= 5 && g >= 0 && g <= n - 4) return true;
  if (n >= 5 && g >= n - 3 && g <= n) return true;
  if (n >= 7 && g >= n + 1 && g <= 2 * n - 5) return true;
  if (n >= 7 && g >= 2 * n - 4 && g <= 2 * n - 1) return true;
  if (n >= 9 && g >= 2 * n && g <= 3 * n - 7) return true;
  return false;
}

/// Piecewise extended extra connectivity of Q_n over g in [0, 3n-7].
long kappa_bar_hypercube_extended(long n, long g) {
  if (n >= 5 && g >= 0 && g <= n - 4)
    return half(-(g + 1) * (g + 1) + (2 * n - 1) * (g + 1)) + 1;
  if (n >= 5 && g >= n - 3 && g <= n)
    return half(-(n - 2) * (n - 2) + (2 * n - 1) * (n - 2)) + 1;
  if (n >= 7 && g >= n + 1 && g <= 2 * n - 5)
    return half(-(g + 1) * (g + 1) + (4 * n - 3) * (g + 1)) - n * n + 2;
  if (n >= 7 && g >= 2 * n - 4 && g <= 2 * n - 1)
    return half(-(2 * n - 3) * (2 * n - 3) + (4 * n - 3) * (2 * n - 3)) - n * n + 2;
  if (n >= 9 && g >= 2 * n && g <= 3 * n - 7)
    return half(-(g + 1) * (g + 1) + (6 * n - 7) * (g + 1)) - 3 * n * n + 4 * n + 2;
  throw RangeError("extended hypercube connectivity: (n, g) outside every branch");
}

bool needs(const FormulaParams& p, bool want_k, bool want_g) {
  if (want_k && !p.k) return false;
  if (want_g && !p.g) return false;
  return true;
}

std::vector<FormulaEntry> build_catalog() {
  std::vector<FormulaEntry> cat;
  auto add = [&](FormulaEntry e) { cat.push_back(std::move(e)); };

  // ---- (n,k)-star ----
  add({"kappa_g_nk_star", Family::NkStar, Quantity::KappaG, std::nullopt,
       "kappa_g(S(n,k)) = n + g(k-2) - 1",
       "n >= 3, 2 <= k < n, 0 <= g <= n-k", "", false,
       [](const FormulaParams& p) {
         return needs(p, true, true) && p.n >= 3 && *p.k >= 2 && *p.k < p.n && *p.g >= 0 &&
                *p.g <= p.n - *p.k;
       },
       [](const FormulaParams& p) { return p.n + static_cast<long>(*p.g) * (*p.k - 2) - 1; },
       nullptr});

  add({"t_g_nk_star_pmc", Family::NkStar, Quantity::TG, DiagnosticModel::PMC,
       "t_g(S(n,k), PMC) = n + g(k-1) - 1",
       "n >= 4, 2 <= k < n, 0 <= g <= n-k", "", false,
       [](const FormulaParams& p) {
         return needs(p, true, true) && p.n >= 4 && *p.k >= 2 && *p.k < p.n && *p.g >= 0 &&
                *p.g <= p.n - *p.k;
       },
       [](const FormulaParams& p) { return p.n + static_cast<long>(*p.g) * (*p.k - 1) - 1; },
       nullptr});

  add({"t_g_nk_star_upper", Family::NkStar, Quantity::UpperBoundTG, std::nullopt,
       "t_g(S(n,k), D) <= n + g(k-1) - 1",
       "n >= 4, 2 <= k < n, 0 <= g <= n-k", "", false,
       [](const FormulaParams& p) {
         return needs(p, true, true) && p.n >= 4 && *p.k >= 2 && *p.k < p.n && *p.g >= 0 &&
                *p.g <= p.n - *p.k;
       },
       [](const FormulaParams& p) { return p.n + static_cast<long>(*p.g) * (*p.k - 1) - 1; },
       nullptr});

  add({"t_bar_1_nk_star", Family::NkStar, Quantity::TBarG, std::nullopt,
       "t_bar_1(S(n,k), D) = n + k - 2",
       "n >= 4, 2 <= k < n (g = 1)",
       "the k = 2 end of the stated range is too generous for MM*: exhaustive search gives "
       "t-bar_1(S(4,2), MM*) = 3 and t-bar_1(S(5,2), MM*) = 4, i.e. the unrestricted value "
       "n-1, via an isolated survivor adjacent to both private sides; PMC matches the "
       "closed form at k = 2",
       false,
       [](const FormulaParams& p) {
         return needs(p, true, false) && (!p.g || *p.g == 1) && p.n >= 4 && *p.k >= 2 &&
                *p.k < p.n;
       },
       [](const FormulaParams& p) { return static_cast<long>(p.n) + *p.k - 2; }, nullptr});

  add({"kappa_bar_g_nk_star", Family::NkStar, Quantity::KappaBarG, std::nullopt,
       "kappa_bar_g(S(n,k)) = n + g(k-2) - 1",
       "n >= 4, 3 <= k < n, 1 <= g <= n-k", "", false,
       [](const FormulaParams& p) {
         return needs(p, true, true) && p.n >= 4 && *p.k >= 3 && *p.k < p.n && *p.g >= 1 &&
                *p.g <= p.n - *p.k;
       },
       [](const FormulaParams& p) { return p.n + static_cast<long>(*p.g) * (*p.k - 2) - 1; },
       nullptr});

  add({"t_bar_g_nk_star_pmc", Family::NkStar, Quantity::TBarG, DiagnosticModel::PMC,
       "t_bar_g(S(n,k), PMC) = n + g(k-1) - 1",
       "n >= 4, 3 <= k < n, 1 <= g <= n-k", "", false,
       [](const FormulaParams& p) {
         return needs(p, true, true) && p.n >= 4 && *p.k >= 3 && *p.k < p.n && *p.g >= 1 &&
                *p.g <= p.n - *p.k;
       },
       [](const FormulaParams& p) { return p.n + static_cast<long>(*p.g) * (*p.k - 1) - 1; },
       nullptr});

  add({"t_bar_g_nk_star_mmstar", Family::NkStar, Quantity::TBarG, DiagnosticModel::MMstar,
       "t_bar_g(S(n,k), MM*) = n + g(k-1) - 1",
       "n >= 4, 3 <= k < n, 1 <= g <= n-k", "", false,
       [](const FormulaParams& p) {
         return needs(p, true, true) && p.n >= 4 && *p.k >= 3 && *p.k < p.n && *p.g >= 1 &&
                *p.g <= p.n - *p.k;
       },
       [](const FormulaParams& p) { return p.n + static_cast<long>(*p.g) * (*p.k - 1) - 1; },
       nullptr});

  add({"t_1_nk_star", Family::NkStar, Quantity::TG, std::nullopt,
       "t_1(S(n,k), D) = n + k - 2",
       "n >= 4, 3 <= k < n (g = 1)", "", false,
       [](const FormulaParams& p) {
         return needs(p, true, false) && (!p.g || *p.g == 1) && p.n >= 4 && *p.k >= 3 &&
                *p.k < p.n;
       },
       [](const FormulaParams& p) { return static_cast<long>(p.n) + *p.k - 2; }, nullptr});

  add({"t_c_nk_star", Family::NkStar, Quantity::TC, std::nullopt,
       "t_c(S(n,k)) = n + 2k - 5",
       "n >= 4, 3 <= k < n",
       "over-reaches at (4,3) under the literal maximum restriction: exhaustive PMC search "
       "gives t_c(S(4,3)) = 11, pinned by the degenerate pair splitting all 24 vertices into "
       "two conditional-faulty halves with no survivors; the closed form needs |V| large "
       "relative to n+2k-4",
       false,
       [](const FormulaParams& p) {
         return needs(p, true, false) && p.n >= 4 && *p.k >= 3 && *p.k < p.n;
       },
       [](const FormulaParams& p) { return static_cast<long>(p.n) + 2 * *p.k - 5; }, nullptr});

  // ---- arrangement ----
  add({"t_g_arrangement_upper", Family::Arrangement, Quantity::UpperBoundTG, std::nullopt,
       "t_g(A(n,k), D) <= (n-k)((g+1)(k-1) + 1)",
       "n >= 3, 2 <= k < n, 0 <= g < n-k", "", false,
       [](const FormulaParams& p) {
         return needs(p, true, true) && p.n >= 3 && *p.k >= 2 && *p.k < p.n && *p.g >= 0 &&
                *p.g < p.n - *p.k;
       },
       [](const FormulaParams& p) {
         return static_cast<long>(p.n - *p.k) * ((static_cast<long>(*p.g) + 1) * (*p.k - 1) + 1);
       },
       nullptr});

  add({"kappa_1_arrangement", Family::Arrangement, Quantity::KappaG, std::nullopt,
       "kappa_1(A(n,k)) = (2k-1)(n-k) - 1, with kappa_1(A(4,2)) = kappa_1(A(4,3)) = 4",
       "n >= 3, 2 <= k < n (n = 4 handled specially)", "", false,
       [](const FormulaParams& p) {
         if (!needs(p, true, false) || (p.g && *p.g != 1)) return false;
         return p.n >= 3 && *p.k >= 2 && *p.k < p.n;
       },
       [](const FormulaParams& p) {
         if (p.n == 4) return 4L;
         return static_cast<long>(2 * *p.k - 1) * (p.n - *p.k) - 1;
       },
       nullptr});

  add({"kappa_2_arrangement", Family::Arrangement, Quantity::KappaG, std::nullopt,
       "kappa_2(A(n,2)) = 4n - 12; kappa_2(A(n,k)) = (3k-2)(n-k) - 2",
       "n >= 8, k = 2 or k in [3, n-5] or k in {n-2, n-1}", "", false,
       [](const FormulaParams& p) {
         if (!needs(p, true, false) || (p.g && *p.g != 2)) return false;
         if (p.n < 8) return false;
         int k = *p.k;
         return k == 2 || (k >= 3 && k <= p.n - 5) || k == p.n - 2 || k == p.n - 1;
       },
       [](const FormulaParams& p) {
         if (*p.k == 2) return 4L * p.n - 12;
         return static_cast<long>(3 * *p.k - 2) * (p.n - *p.k) - 2;
       },
       nullptr});

  auto t1_arr_mm_valid = [](const FormulaParams& p) {
    if (!p.k || (p.g && *p.g != 1)) return false;
    int n = p.n, k = *p.k;
    return (n >= 6 && k >= 5 && k < n - 1) || (n >= 11 && k >= 10 && k < n);
  };
  add({"t_1_arrangement_mmstar", Family::Arrangement, Quantity::TG, DiagnosticModel::MMstar,
       "t_1(A(n,k), MM*) = (2k-1)(n-k)",
       "n >= 6, 5 <= k < n-1, or n >= 11, 10 <= k < n", "", false, t1_arr_mm_valid,
       [](const FormulaParams& p) { return static_cast<long>(2 * *p.k - 1) * (p.n - *p.k); },
       nullptr});

  add({"t_2_arrangement_mmstar", Family::Arrangement, Quantity::TG, DiagnosticModel::MMstar,
       "t_2(A(n,k), MM*) = (3k-2)(n-k)",
       "n >= 7, 4 <= k < n-1", "", false,
       [](const FormulaParams& p) {
         return needs(p, true, false) && (!p.g || *p.g == 2) && p.n >= 7 && *p.k >= 4 &&
                *p.k < p.n - 1;
       },
       [](const FormulaParams& p) { return static_cast<long>(3 * *p.k - 2) * (p.n - *p.k); },
       nullptr});

  add({"t_bar_1_arrangement_pmc", Family::Arrangement, Quantity::TBarG, DiagnosticModel::PMC,
       "t_bar_1(A(n,k), PMC) = (2k-1)(n-k)",
       "n >= 5, 2 <= k < n (g = 1)", "", false,
       [](const FormulaParams& p) {
         return needs(p, true, false) && (!p.g || *p.g == 1) && p.n >= 5 && *p.k >= 2 &&
                *p.k < p.n;
       },
       [](const FormulaParams& p) { return static_cast<long>(2 * *p.k - 1) * (p.n - *p.k); },
       nullptr});

  add({"t_bar_1_arrangement_mmstar", Family::Arrangement, Quantity::TBarG,
       DiagnosticModel::MMstar, "t_bar_1(A(n,k), MM*) = (2k-1)(n-k)",
       "n >= 6, 5 <= k < n-1, or n >= 11, 10 <= k < n", "", false, t1_arr_mm_valid,
       [](const FormulaParams& p) { return static_cast<long>(2 * *p.k - 1) * (p.n - *p.k); },
       nullptr});

  add({"kappa_bar_2_arrangement", Family::Arrangement, Quantity::KappaBarG, std::nullopt,
       "kappa_bar_2(A(n,k)) = (3k-2)(n-k) - 3",
       "n >= 8, 3 <= k <= n-5", "", false,
       [](const FormulaParams& p) {
         return needs(p, true, false) && (!p.g || *p.g == 2) && p.n >= 8 && *p.k >= 3 &&
                *p.k <= p.n - 5;
       },
       [](const FormulaParams& p) { return static_cast<long>(3 * *p.k - 2) * (p.n - *p.k) - 3; },
       nullptr});

  add({"t_bar_2_arrangement", Family::Arrangement, Quantity::TBarG, std::nullopt,
       "t_bar_2(A(n,k), D) = (3k-2)(n-k) - 1",
       "n >= 8, 3 <= k <= n-5",
       "a PMC-only variant is also reported for n >= 6, 4 <= k <= n-2; this entry keeps the "
       "conservative range",
       false,
       [](const FormulaParams& p) {
         return needs(p, true, false) && (!p.g || *p.g == 2) && p.n >= 8 && *p.k >= 3 &&
                *p.k <= p.n - 5;
       },
       [](const FormulaParams& p) { return static_cast<long>(3 * *p.k - 2) * (p.n - *p.k) - 1; },
       nullptr});

  add({"kappa_bar_3_arrangement", Family::Arrangement, Quantity::KappaBarG, std::nullopt,
       "kappa_bar_3(A(n,k)) = 4(k-1)(n-k) - 4",
       "n >= 6, 3 <= k <= n-3 or 4 <= k <= n-2", "", false,
       [](const FormulaParams& p) {
         if (!needs(p, true, false) || (p.g && *p.g != 3)) return false;
         int n = p.n, k = *p.k;
         return n >= 6 && ((k >= 3 && k <= n - 3) || (k >= 4 && k <= n - 2));
       },
       [](const FormulaParams& p) {
         return 4L * (static_cast<long>(*p.k) - 1) * (p.n - *p.k) - 4;
       },
       nullptr});

  add({"t_bar_3_arrangement", Family::Arrangement, Quantity::TBarG, std::nullopt,
       "t_bar_3(A(n,k), D) = 4(k-1)(n-k) - 1",
       "n >= 7, 4 <= k <= n-3",
       "a variant with n >= 6, 3 <= k <= n-3 is also reported; this entry keeps the "
       "conservative range",
       false,
       [](const FormulaParams& p) {
         return needs(p, true, false) && (!p.g || *p.g == 3) && p.n >= 7 && *p.k >= 4 &&
                *p.k <= p.n - 3;
       },
       [](const FormulaParams& p) {
         return 4L * (static_cast<long>(*p.k) - 1) * (p.n - *p.k) - 1;
       },
       nullptr});

  add({"t_3_arrangement_interval", Family::Arrangement, Quantity::TG, std::nullopt,
       "4(k-1)(n-k) - 1 <= t_3(A(n,k), D) <= 4(k-1)(n-k) + (n-k)",
       "n >= 6, 3 <= k <= n-3", "", true,
       [](const FormulaParams& p) {
         return needs(p, true, false) && (!p.g || *p.g == 3) && p.n >= 6 && *p.k >= 3 &&
                *p.k <= p.n - 3;
       },
       nullptr,
       [](const FormulaParams& p) {
         long base = 4L * (static_cast<long>(*p.k) - 1) * (p.n - *p.k);
         return std::pair<long, long>{base - 1, base + (p.n - *p.k)};
       }});

  // ---- hypercube ----
  add({"kappa_bar_g_hypercube", Family::Hypercube, Quantity::KappaBarG, std::nullopt,
       "kappa_bar_g(Q_n) = (g+1)(2(n-1)-g)/2 + 1",
       "n >= 4, 0 <= g <= n-3", "", false,
       [](const FormulaParams& p) {
         return needs(p, false, true) && p.n >= 4 && *p.g >= 0 && *p.g <= p.n - 3;
       },
       [](const FormulaParams& p) { return kappa_bar_hypercube(p.n, *p.g); }, nullptr});

  add({"kappa_bar_g_hypercube_extended", Family::Hypercube, Quantity::KappaBarG, std::nullopt,
       "piecewise kappa_bar_g(Q_n) over five g-ranges up to 3n-7",
       "n >= 5 with g in a stated branch (full coverage of [0, 3n-7] needs n >= 9)", "", false,
       [](const FormulaParams& p) {
         return needs(p, false, true) && extended_branch_valid(p.n, *p.g);
       },
       [](const FormulaParams& p) { return kappa_bar_hypercube_extended(p.n, *p.g); }, nullptr});

  add({"t_bar_g_hypercube_pmc", Family::Hypercube, Quantity::TBarG, DiagnosticModel::PMC,
       "t_bar_g(Q_n, PMC) = (g+1)(2n-g)/2",
       "n >= 4, 1 <= g <= n-3", "", false,
       [](const FormulaParams& p) {
         return needs(p, false, true) && p.n >= 4 && *p.g >= 1 && *p.g <= p.n - 3;
       },
       [](const FormulaParams& p) {
         return half((static_cast<long>(*p.g) + 1) * (2L * p.n - *p.g));
       },
       nullptr});

  add({"t_bar_g_hypercube_pmc_extended", Family::Hypercube, Quantity::TBarG,
       DiagnosticModel::PMC, "t_bar_g(Q_n, PMC) = kappa_bar_g(Q_n) + g (extended range)",
       "n >= 9, 0 <= g <= 3n-7", "", false,
       [](const FormulaParams& p) {
         return needs(p, false, true) && p.n >= 9 && *p.g >= 0 && *p.g <= 3 * p.n - 7;
       },
       [](const FormulaParams& p) { return kappa_bar_hypercube_extended(p.n, *p.g) + *p.g; },
       nullptr});

  add({"t_bar_g_hypercube_mmstar", Family::Hypercube, Quantity::TBarG, DiagnosticModel::MMstar,
       "t_bar_1(Q_3, MM*) = 3, t_bar_1(Q_4, MM*) = 5, t_bar_g(Q_n, MM*) = (g+1)(2n-g)/2",
       "(n, g) in {(3,1), (4,1)} or n >= 5, 1 <= g <= n-3", "", false,
       [](const FormulaParams& p) {
         if (!needs(p, false, true)) return false;
         if ((p.n == 3 || p.n == 4) && *p.g == 1) return true;
         return p.n >= 5 && *p.g >= 1 && *p.g <= p.n - 3;
       },
       [](const FormulaParams& p) {
         if (p.n == 3 && *p.g == 1) return 3L;
         if (p.n == 4 && *p.g == 1) return 5L;
         return half((static_cast<long>(*p.g) + 1) * (2L * p.n - *p.g));
       },
       nullptr});

  add({"t_bar_g_hypercube_mmstar_extended", Family::Hypercube, Quantity::TBarG,
       DiagnosticModel::MMstar,
       "t_bar_1(Q_3, MM*) = 3, t_bar_1(Q_4, MM*) = 5, else kappa_bar_g(Q_n) + g",
       "(n, g) in {(3,1), (4,1)} or n >= 9, 0 <= g <= 3n-7", "", false,
       [](const FormulaParams& p) {
         if (!needs(p, false, true)) return false;
         if ((p.n == 3 || p.n == 4) && *p.g == 1) return true;
         return p.n >= 9 && *p.g >= 0 && *p.g <= 3 * p.n - 7;
       },
       [](const FormulaParams& p) {
         if (p.n == 3 && *p.g == 1) return 3L;
         if (p.n == 4 && *p.g == 1) return 5L;
         return kappa_bar_hypercube_extended(p.n, *p.g) + *p.g;
       },
       nullptr});

  return cat;
}

}  // namespace

const std::vector<FormulaEntry>& formula_catalog() {
  static const std::vector<FormulaEntry> cat = build_catalog();
  return cat;
}

const FormulaEntry& formula_entry(const std::string& id) {
  for (const auto& e : formula_catalog())
    if (e.id == id) return e;
  throw InvalidInput("no formula catalog entry with id " + id);
}

namespace {
std::string params_text(const FormulaParams& p) {
  std::string s = "n=" + std::to_string(p.n);
  if (p.k) s += ", k=" + std::to_string(*p.k);
  if (p.g) s += ", g=" + std::to_string(*p.g);
  return s;
}
}  // namespace

long evaluate_formula(const std::string& id, int n, std::optional<int> k, std::optional<int> g) {
  const auto& e = formula_entry(id);
  if (e.interval) throw InvalidInput(id + " is an interval entry; use evaluate_formula_interval");
  FormulaParams p{n, k, g};
  if (!e.valid(p))
    throw RangeError(id + " is outside its validity range (" + e.range_text + ") at " +
                     params_text(p));
  return e.eval(p);
}

std::pair<long, long> evaluate_formula_interval(const std::string& id, int n,
                                                std::optional<int> k, std::optional<int> g) {
  const auto& e = formula_entry(id);
  if (!e.interval) {
    long v = evaluate_formula(id, n, k, g);
    return {v, v};
  }
  FormulaParams p{n, k, g};
  if (!e.valid(p))
    throw RangeError(id + " is outside its validity range (" + e.range_text + ") at " +
                     params_text(p));
  return e.eval_interval(p);
}

CrossCheckReport cross_check(const std::string& id, const FormulaParams& params,
                             long oracle_value) {
  CrossCheckReport r;
  r.id = id;
  r.params = params;
  r.oracle_value = oracle_value;
  r.formula_value = evaluate_formula(id, params.n, params.k, params.g);
  r.pass = r.formula_value == oracle_value;
  r.detail = params_text(params) + ": formula " + std::to_string(r.formula_value) +
             (r.pass ? " == " : " != ") + "oracle " + std::to_string(oracle_value);
  return r;
}

std::vector<CrossCheckReport> hypercube_extended_overlap_reports(int n_min, int n_max) {
  std::vector<CrossCheckReport> out;
  for (int n = n_min; n <= n_max; ++n) {
    for (int g = 0; g <= n - 4; ++g) {
      CrossCheckReport r;
      r.id = "kappa_bar_g_hypercube_extended vs kappa_bar_g_hypercube";
      r.params = {n, std::nullopt, g};
      r.formula_value = evaluate_formula("kappa_bar_g_hypercube_extended", n, std::nullopt, g);
      r.oracle_value = evaluate_formula("kappa_bar_g_hypercube", n, std::nullopt, g);
      r.pass = r.formula_value == r.oracle_value;
      r.detail = "n=" + std::to_string(n) + ", g=" + std::to_string(g) + ": " +
                 std::to_string(r.formula_value) + (r.pass ? " == " : " != ") +
                 std::to_string(r.oracle_value);
      out.push_back(std::move(r));
    }
  }
  return out;
}

}  // namespace diaglab
