#pragma once

#include <gmpxx.h>

#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "ddsg/errors.hpp"
#include "ddsg/ratio.hpp"

namespace ddsg {

// Exact rational scalar used by the LP layer.
using Rat = mpq_class;

inline Rat rat_of(long long num, long long den = 1) {
  static_assert(sizeof(long) == 8, "LP64 platform expected");
  Rat r(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  r.canonicalize();
  return r;
}

inline Rat rat_of(const Frac& f) { return rat_of(f.num, f.den); }

enum class Rel { Le, Eq, Ge };

struct LpRow {
  std::vector<std::pair<int, Rat>> coeffs;  // (variable, coefficient)
  Rel rel = Rel::Le;
  Rat rhs = 0;
};

// A linear (or mixed-integer) program in maximization form. Variables carry
// a finite lower bound (0 by default), an optional upper bound, and an
// optional binary flag.
struct LpModel {
  int var_count = 0;
  std::vector<Rat> objective;
  std::vector<LpRow> rows;
  std::vector<Rat> lower;
  std::vector<std::optional<Rat>> upper;
  std::vector<bool> is_binary;

  int add_var(Rat obj = 0, Rat lo = 0, std::optional<Rat> hi = std::nullopt,
              bool binary = false) {
    if (sgn(lo) < 0) throw InputError("variable lower bound must be >= 0");
    objective.push_back(std::move(obj));
    lower.push_back(std::move(lo));
    upper.push_back(std::move(hi));
    is_binary.push_back(binary);
    return var_count++;
  }

  void add_row(std::vector<std::pair<int, Rat>> coeffs, Rel rel, Rat rhs) {
    for (const auto& [j, a] : coeffs) {
      (void)a;
      if (j < 0 || j >= var_count)
        throw InputError("constraint references undeclared variable " +
                         std::to_string(j));
    }
    rows.push_back(LpRow{std::move(coeffs), rel, std::move(rhs)});
  }
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  Rat objective_value = 0;
  std::vector<Rat> primal;  // one value per model variable when Optimal
};

// Counters threaded through the solvers so benches can report work done.
struct SolveStats {
  long long lp_solves = 0;
  long long milp_nodes = 0;
};

struct MilpOptions {
  long long node_limit = 2'000'000;
  // When set, only solutions with objective strictly above the cutoff are
  // searched for; anything not beating it comes back Infeasible. Sound for
  // any cutoff that is the objective of a known feasible solution.
  std::optional<Rat> cutoff;
};

namespace lp_detail {

#ifdef DDSG_LP_PROFILE
inline long long g_profile_iters = 0;
#endif

// ---------------------------------------------------------------------------
// Presolve: folds fixed variables, turns singleton rows into bounds and
// detects trivial infeasibility. All reductions are exact and deterministic.
// ---------------------------------------------------------------------------

struct Reduced {
  bool infeasible = false;
  int ncols = 0;                      // surviving variables
  std::vector<int> col_of;            // model var -> reduced col or -1
  std::vector<int> orig_of;           // reduced col -> model var
  std::vector<Rat> fixed_value;       // per model var, valid when col_of==-1
  std::vector<Rat> obj;               // reduced objective
  std::vector<Rat> lo;
  std::vector<std::optional<Rat>> hi;
  // column-wise matrix of surviving rows
  std::vector<std::vector<std::pair<int, Rat>>> cols;  // per reduced col
  std::vector<Rel> row_rel;
  std::vector<Rat> row_rhs;
};

inline Reduced presolve(const LpModel& model, const std::vector<Rat>& lo_in,
                        const std::vector<std::optional<Rat>>& hi_in) {
  const int n = model.var_count;
  Reduced red;
  std::vector<Rat> lo = lo_in;
  std::vector<std::optional<Rat>> hi = hi_in;
  std::vector<char> fixed(n, 0);
  std::vector<Rat> value(n);
  std::vector<char> row_done(model.rows.size(), 0);

  auto fix_check = [&](int j) -> bool {  // returns true when newly fixed
    if (fixed[j]) return false;
    if (hi[j]) {
      int c = cmp(lo[j], *hi[j]);
      if (c > 0) {
        red.infeasible = true;
        return false;
      }
      if (c == 0) {
        fixed[j] = 1;
        value[j] = lo[j];
        return true;
      }
    }
    return false;
  };
  for (int j = 0; j < n && !red.infeasible; ++j) fix_check(j);

  bool changed = true;
  while (changed && !red.infeasible) {
    changed = false;
    for (size_t r = 0; r < model.rows.size() && !red.infeasible; ++r) {
      if (row_done[r]) continue;
      const LpRow& row = model.rows[r];
      Rat rhs = row.rhs;
      int live = -1;
      Rat live_coeff = 0;
      int live_count = 0;
      for (const auto& [j, a] : row.coeffs) {
        if (sgn(a) == 0) continue;
        if (fixed[j]) {
          rhs -= a * value[j];
        } else {
          ++live_count;
          live = j;
          live_coeff = a;
        }
      }
      if (live_count == 0) {
        int c = sgn(rhs);
        bool ok = (row.rel == Rel::Le && c >= 0) ||
                  (row.rel == Rel::Ge && c <= 0) ||
                  (row.rel == Rel::Eq && c == 0);
        if (!ok) red.infeasible = true;
        row_done[r] = 1;
        changed = true;
      } else if (live_count == 1) {
        // a*x rel rhs  ->  a bound on x
        Rat b = rhs / live_coeff;
        bool upper_side = (row.rel == Rel::Le) == (sgn(live_coeff) > 0);
        if (row.rel == Rel::Eq) {
          if (!hi[live] || cmp(*hi[live], b) > 0) hi[live] = b;
          if (cmp(lo[live], b) < 0) lo[live] = b;
        } else if (upper_side) {
          if (!hi[live] || cmp(*hi[live], b) > 0) hi[live] = b;
        } else {
          if (cmp(lo[live], b) < 0) lo[live] = b;
        }
        if (hi[live] && cmp(lo[live], *hi[live]) > 0) red.infeasible = true;
        fix_check(live);
        row_done[r] = 1;
        changed = true;
      }
    }
    for (int j = 0; j < n && !red.infeasible; ++j)
      if (fix_check(j)) changed = true;
  }
  if (red.infeasible) return red;

  red.col_of.assign(n, -1);
  red.fixed_value.assign(n, Rat(0));
  for (int j = 0; j < n; ++j) {
    if (fixed[j]) {
      red.fixed_value[j] = value[j];
    } else {
      red.col_of[j] = static_cast<int>(red.orig_of.size());
      red.orig_of.push_back(j);
    }
  }
  red.ncols = static_cast<int>(red.orig_of.size());
  red.obj.resize(red.ncols);
  red.lo.resize(red.ncols);
  red.hi.resize(red.ncols);
  red.cols.assign(red.ncols, {});
  for (int c = 0; c < red.ncols; ++c) {
    int j = red.orig_of[c];
    red.obj[c] = model.objective[j];
    red.lo[c] = lo[j];
    red.hi[c] = hi[j];
  }
  for (size_t r = 0; r < model.rows.size(); ++r) {
    if (row_done[r]) continue;
    const LpRow& row = model.rows[r];
    Rat rhs = row.rhs;
    int idx = static_cast<int>(red.row_rhs.size());
    std::map<int, Rat> acc;  // folds duplicate mentions within one row
    for (const auto& [j, a] : row.coeffs) {
      if (sgn(a) == 0) continue;
      if (fixed[j])
        rhs -= a * value[j];
      else
        acc[red.col_of[j]] += a;
    }
    for (const auto& [c, a] : acc)
      if (sgn(a) != 0) red.cols[c].push_back({idx, a});
    red.row_rel.push_back(row.rel);
    red.row_rhs.push_back(rhs);
  }
  return red;
}

// ---------------------------------------------------------------------------
// Bounded-variable revised simplex in exact rational arithmetic.
// Two phases, dense basis inverse, Bland's rule throughout. Deterministic:
// the entering variable is the lowest-index eligible one, the leaving
// variable the lowest-index blocker at the minimum ratio.
// ---------------------------------------------------------------------------

struct SimplexResult {
  LpStatus status = LpStatus::Infeasible;
  std::vector<Rat> x;  // per reduced column, valid when Optimal
};

class Simplex {
 public:
  explicit Simplex(const Reduced& red) : red_(red) {
    nrows_ = static_cast<int>(red.row_rhs.size());
    ncols_ = red.ncols;
  }

  SimplexResult run() {
    setup();
    if (!phase1()) return {LpStatus::Infeasible, {}};
    if (!phase2()) return {LpStatus::Unbounded, {}};
    SimplexResult res;
    res.status = LpStatus::Optimal;
    res.x.assign(ncols_, Rat(0));
    for (int j = 0; j < ncols_; ++j) res.x[j] = current_value(j);
    return res;
  }

 private:
  enum Status : char { AtLower, AtUpper, Basic };

  const Reduced& red_;
  int nrows_ = 0, ncols_ = 0, nvars_ = 0, nart_ = 0;
  std::vector<std::vector<std::pair<int, Rat>>> acols_;  // all columns
  std::vector<std::optional<Rat>> vlo_, vhi_;
  std::vector<Status> stat_;
  std::vector<int> basis_;              // row -> variable
  std::vector<int> row_of_;             // variable -> row or -1
  std::vector<std::vector<Rat>> binv_;  // dense basis inverse
  std::vector<Rat> xb_;                 // basic values by row
  std::vector<Rat> d_;                  // reduced costs
  std::vector<Rat> cost_;               // current phase objective
  bool in_phase1_ = false;
  long long iter_guard_ = 0;

  Rat bound_value(int j) const {
    return stat_[j] == AtLower ? *vlo_[j] : *vhi_[j];
  }

  Rat current_value(int j) const {
    if (stat_[j] == Basic) return xb_[row_of_[j]];
    return bound_value(j);
  }

  bool var_fixed(int j) const {
    return vlo_[j] && vhi_[j] && cmp(*vlo_[j], *vhi_[j]) == 0;
  }

  void setup() {
    // variables: structural | logical (one per row) | artificial (as needed)
    nvars_ = ncols_ + nrows_;
    vlo_.assign(nvars_, std::nullopt);
    vhi_.assign(nvars_, std::nullopt);
    stat_.assign(nvars_, AtLower);
    acols_.assign(nvars_, {});
    for (int j = 0; j < ncols_; ++j) {
      acols_[j] = red_.cols[j];
      vlo_[j] = red_.lo[j];
      vhi_[j] = red_.hi[j];
    }
    for (int i = 0; i < nrows_; ++i) {
      int s = ncols_ + i;
      acols_[s].push_back({i, Rat(1)});
      switch (red_.row_rel[i]) {
        case Rel::Le:
          vlo_[s] = Rat(0);
          break;
        case Rel::Ge:
          vhi_[s] = Rat(0);
          break;
        case Rel::Eq:
          vlo_[s] = Rat(0);
          vhi_[s] = Rat(0);
          break;
      }
    }
    basis_.resize(nrows_);
    row_of_.assign(nvars_, -1);
    xb_.assign(nrows_, Rat(0));
    std::vector<Rat> act(nrows_, Rat(0));
    for (int j = 0; j < ncols_; ++j) {
      stat_[j] = AtLower;
      if (sgn(*vlo_[j]) == 0) continue;
      for (const auto& [i, a] : red_.cols[j]) act[i] += a * *vlo_[j];
    }
    // rows whose logical cannot absorb the residual get an artificial
    for (int i = 0; i < nrows_; ++i) {
      int s = ncols_ + i;
      Rat resid = red_.row_rhs[i] - act[i];
      bool fits = (!vlo_[s] || cmp(resid, *vlo_[s]) >= 0) &&
                  (!vhi_[s] || cmp(resid, *vhi_[s]) <= 0);
      if (fits) {
        basis_[i] = s;
        stat_[s] = Basic;
        row_of_[s] = i;
        xb_[i] = resid;
      } else {
        Rat clamped =
            (vlo_[s] && cmp(resid, *vlo_[s]) < 0) ? *vlo_[s] : *vhi_[s];
        stat_[s] = (vlo_[s] && cmp(clamped, *vlo_[s]) == 0) ? AtLower : AtUpper;
        int v = nvars_ + nart_;
        acols_.push_back({{i, Rat(1)}});
        vlo_.push_back(std::nullopt);
        vhi_.push_back(std::nullopt);
        Rat art_val = resid - clamped;
        if (sgn(art_val) > 0)
          vlo_.back() = Rat(0);
        else
          vhi_.back() = Rat(0);
        stat_.push_back(Basic);
        row_of_.push_back(i);
        basis_[i] = v;
        xb_[i] = art_val;
        ++nart_;
      }
    }
    nvars_ += nart_;
    binv_.assign(nrows_, std::vector<Rat>(nrows_, Rat(0)));
    for (int i = 0; i < nrows_; ++i) binv_[i][i] = 1;
  }

  void load_costs(bool phase1) {
    in_phase1_ = phase1;
    cost_.assign(nvars_, Rat(0));
    if (phase1) {
      for (int a = 0; a < nart_; ++a) {
        int v = nvars_ - nart_ + a;
        // drive every artificial toward zero
        cost_[v] = vlo_[v] ? Rat(-1) : Rat(1);
      }
    } else {
      for (int j = 0; j < ncols_; ++j) cost_[j] = red_.obj[j];
    }
    recompute_reduced_costs();
  }

  void recompute_reduced_costs() {
    // y = c_B * Binv, then d_j = c_j - y . A_j
    std::vector<Rat> y(nrows_, Rat(0));
    for (int i = 0; i < nrows_; ++i) {
      const Rat& cb = cost_[basis_[i]];
      if (sgn(cb) == 0) continue;
      const auto& row = binv_[i];
      for (int k = 0; k < nrows_; ++k)
        if (sgn(row[k]) != 0) y[k] += cb * row[k];
    }
    d_.assign(nvars_, Rat(0));
    for (int j = 0; j < nvars_; ++j) {
      if (stat_[j] == Basic) continue;
      Rat dj = cost_[j];
      for (const auto& [i, a] : acols_[j])
        if (sgn(y[i]) != 0) dj -= y[i] * a;
      d_[j] = dj;
    }
  }

  // One simplex phase. Optimal when no entering variable remains, Unbounded
  // when an improving ray exists. Pricing is Dantzig (largest violation,
  // ties to the lowest index) until a stretch of degenerate pivots trips the
  // stall counter; then Bland's rule takes over until the objective strictly
  // moves again, which guarantees termination.
  LpStatus iterate() {
    std::vector<Rat> w(nrows_);
    std::vector<Rat> rowr(nrows_);
    const long long guard_limit =
        4'000'000LL + 2'000LL * (nrows_ + static_cast<long long>(nvars_));
    const int stall_limit = 12 + nrows_ / 4;
    int stalls = 0;
    bool bland = false;
    while (true) {
      if (++iter_guard_ > guard_limit)
        throw SolverError("simplex iteration safety cap exceeded");
#ifdef DDSG_LP_PROFILE
      ++g_profile_iters;
#endif
      int enter = -1;
      int dir = 0;
      Rat best_merit;
      for (int j = 0; j < nvars_; ++j) {
        if (stat_[j] == Basic || var_fixed(j)) continue;
        if (!in_phase1_ && j >= nvars_ - nart_) continue;
        int s = sgn(d_[j]);
        int want = (stat_[j] == AtLower) ? 1 : -1;
        if (s != want) continue;
        if (bland) {
          enter = j;
          dir = want;
          break;
        }
        Rat merit = (want > 0) ? d_[j] : Rat(-d_[j]);
        if (enter < 0 || cmp(merit, best_merit) > 0) {
          best_merit = std::move(merit);
          enter = j;
          dir = want;
        }
      }
      if (enter < 0) return LpStatus::Optimal;

      // FTRAN: w = Binv * A_enter
      for (auto& v : w) v = 0;
      for (const auto& [i, a] : acols_[enter])
        for (int k = 0; k < nrows_; ++k)
          if (sgn(binv_[k][i]) != 0) w[k] += binv_[k][i] * a;

      // ratio test: smallest step, ties to the lowest variable index; the
      // entering variable's own far bound competes as a bound flip
      bool have_t = false;
      Rat best_t = 0;
      int leave_row = -1;
      int leave_var = -1;
      if (vlo_[enter] && vhi_[enter]) {
        best_t = *vhi_[enter] - *vlo_[enter];
        have_t = true;
        leave_var = enter;
      }
      for (int i = 0; i < nrows_; ++i) {
        int delta = sgn(w[i]) * dir;
        if (delta == 0) continue;
        int bv = basis_[i];
        Rat t;
        if (delta > 0) {  // basic value decreases toward its lower bound
          if (!vlo_[bv]) continue;
          t = (xb_[i] - *vlo_[bv]) / (w[i] * dir);
        } else {  // basic value increases toward its upper bound
          if (!vhi_[bv]) continue;
          t = (*vhi_[bv] - xb_[i]) / (-(w[i] * dir));
        }
        if (!have_t || cmp(t, best_t) < 0 ||
            (cmp(t, best_t) == 0 && bv < leave_var)) {
          have_t = true;
          best_t = t;
          leave_row = i;
          leave_var = bv;
        }
      }
      if (!have_t) {
        if (in_phase1_) throw SolverError("phase-1 objective unbounded");
        return LpStatus::Unbounded;
      }

      if (sgn(best_t) > 0) {
        stalls = 0;
        bland = false;
      } else if (++stalls > stall_limit) {
        bland = true;
      }

      if (leave_var == enter) {
        // bound flip, no basis change
        for (int i = 0; i < nrows_; ++i)
          if (sgn(w[i]) != 0) xb_[i] -= w[i] * (best_t * dir);
        stat_[enter] = (stat_[enter] == AtLower) ? AtUpper : AtLower;
        continue;
      }

      const int r = leave_row;
      Rat enter_val = bound_value(enter) + best_t * dir;

      // reduced costs move by factor * (old tableau row r)
      rowr = binv_[r];
      Rat factor = d_[enter] / w[r];
      for (int k = 0; k < nvars_; ++k) {
        if ((stat_[k] == Basic && k != leave_var) || k == enter) continue;
        Rat alpha = 0;
        for (const auto& [i, a] : acols_[k])
          if (sgn(rowr[i]) != 0) alpha += rowr[i] * a;
        if (sgn(alpha) != 0) d_[k] -= factor * alpha;
      }
      d_[enter] = 0;

      for (int i = 0; i < nrows_; ++i) {
        if (i == r) continue;
        if (sgn(w[i]) != 0) xb_[i] -= w[i] * (best_t * dir);
      }
      xb_[r] = enter_val;

      // eta update of the dense inverse
      const Rat& pivot = w[r];
      for (int k = 0; k < nrows_; ++k)
        if (sgn(binv_[r][k]) != 0) binv_[r][k] /= pivot;
      for (int i = 0; i < nrows_; ++i) {
        if (i == r || sgn(w[i]) == 0) continue;
        auto& bi = binv_[i];
        const auto& br = binv_[r];
        for (int k = 0; k < nrows_; ++k)
          if (sgn(br[k]) != 0) bi[k] -= w[i] * br[k];
      }

      stat_[leave_var] = (sgn(w[r]) * dir > 0) ? AtLower : AtUpper;
      row_of_[leave_var] = -1;
      stat_[enter] = Basic;
      row_of_[enter] = r;
      basis_[r] = enter;
    }
  }

  bool phase1() {
    if (nart_ == 0) return true;
    load_costs(true);
    LpStatus s = iterate();
    if (s != LpStatus::Optimal)
      throw SolverError("phase 1 ended in an unexpected state");
    for (int a = 0; a < nart_; ++a) {
      int v = nvars_ - nart_ + a;
      if (sgn(current_value(v)) != 0) return false;
    }
    // pin artificials at zero; they can never move again
    for (int a = 0; a < nart_; ++a) {
      int v = nvars_ - nart_ + a;
      vlo_[v] = Rat(0);
      vhi_[v] = Rat(0);
      if (stat_[v] != Basic) stat_[v] = AtLower;
    }
    return true;
  }

  bool phase2() {
    load_costs(false);
    return iterate() != LpStatus::Unbounded;
  }
};

inline LpSolution assemble(const LpModel& model, const Reduced& red,
                           const SimplexResult& sim) {
  LpSolution out;
  if (sim.status != LpStatus::Optimal) {
    out.status = sim.status;
    return out;
  }
  out.status = LpStatus::Optimal;
  out.primal.assign(model.var_count, Rat(0));
  for (int j = 0; j < model.var_count; ++j)
    out.primal[j] =
        red.col_of[j] < 0 ? red.fixed_value[j] : sim.x[red.col_of[j]];
  out.objective_value = 0;
  for (int j = 0; j < model.var_count; ++j)
    if (sgn(model.objective[j]) != 0)
      out.objective_value += model.objective[j] * out.primal[j];
  return out;
}

// Continuous solve with bound overrides (used by branch-and-bound).
inline LpSolution solve_continuous(const LpModel& model,
                                   const std::vector<Rat>& lo,
                                   const std::vector<std::optional<Rat>>& hi) {
  Reduced red = presolve(model, lo, hi);
  if (red.infeasible) return LpSolution{LpStatus::Infeasible, 0, {}};
  if (red.row_rhs.empty()) {
    // no rows left: every variable sits at its best bound
    SimplexResult sim;
    sim.status = LpStatus::Optimal;
    sim.x.assign(red.ncols, Rat(0));
    for (int c = 0; c < red.ncols; ++c) {
      if (sgn(red.obj[c]) > 0) {
        if (!red.hi[c]) return LpSolution{LpStatus::Unbounded, 0, {}};
        sim.x[c] = *red.hi[c];
      } else {
        sim.x[c] = red.lo[c];
      }
    }
    return assemble(model, red, sim);
  }
  Simplex solver(red);
  return assemble(model, red, solver.run());
}

}  // namespace lp_detail

// ---------------------------------------------------------------------------
// Backend interface. The bundled backend is the exact rational simplex above
// (feasibility tolerance zero); an external high-performance solver can be
// registered under a new name and selected via DDSG_LP_BACKEND.
// ---------------------------------------------------------------------------

class LpBackend {
 public:
  virtual ~LpBackend() = default;
  virtual std::string name() const = 0;
  // Solves the continuous relaxation (integrality flags ignored).
  virtual LpSolution solve(const LpModel& model) = 0;
  // Same, with bound overrides; backends may specialize to avoid copies.
  virtual LpSolution solve_with_bounds(const LpModel& model,
                                       const std::vector<Rat>& lo,
                                       const std::vector<std::optional<Rat>>& hi) {
    LpModel copy = model;
    copy.lower = lo;
    copy.upper = hi;
    return solve(copy);
  }
};

class RationalSimplexBackend final : public LpBackend {
 public:
  std::string name() const override { return "rational"; }
  LpSolution solve(const LpModel& model) override {
    return lp_detail::solve_continuous(model, model.lower, model.upper);
  }
  LpSolution solve_with_bounds(
      const LpModel& model, const std::vector<Rat>& lo,
      const std::vector<std::optional<Rat>>& hi) override {
    return lp_detail::solve_continuous(model, lo, hi);
  }
};

namespace lp_detail {
inline std::map<std::string, std::function<std::unique_ptr<LpBackend>()>>&
backend_registry() {
  static std::map<std::string, std::function<std::unique_ptr<LpBackend>()>>
      reg = {{"rational",
              [] { return std::make_unique<RationalSimplexBackend>(); }}};
  return reg;
}
}  // namespace lp_detail

inline void register_lp_backend(
    const std::string& name,
    std::function<std::unique_ptr<LpBackend>()> factory) {
  lp_detail::backend_registry()[name] = std::move(factory);
}

inline LpBackend& active_lp_backend() {
  static std::unique_ptr<LpBackend> active = [] {
    const char* env = std::getenv("DDSG_LP_BACKEND");
    std::string name = env && *env ? env : "rational";
    auto& reg = lp_detail::backend_registry();
    auto it = reg.find(name);
    if (it == reg.end()) {
      std::string known;
      for (const auto& [k, v] : reg) known += (known.empty() ? "" : ", ") + k;
      throw InputError("unknown LP backend '" + name + "' (known: " + known +
                       ")");
    }
    return it->second();
  }();
  return *active;
}

inline void write_lp_text(const LpModel& model, std::ostream& os,
                          const std::string& name);

// When set, every model handed to solve_lp/solve_milp is written to this
// directory as model_<k>.lp before solving.
inline std::optional<std::string>& lp_dump_dir() {
  static std::optional<std::string> dir;
  return dir;
}

namespace lp_detail {
inline void maybe_dump(const LpModel& model, const char* tag) {
  if (!lp_dump_dir()) return;
  static long long counter = 0;
  std::string path =
      *lp_dump_dir() + "/model_" + std::to_string(counter++) + ".lp";
  std::ofstream os(path);
  if (!os) throw InputError("cannot write LP dump file '" + path + "'");
  write_lp_text(model, os, tag);
}
}  // namespace lp_detail

// Solves a continuous LP. Requires all integrality flags false.
inline LpSolution solve_lp(const LpModel& model, SolveStats* stats = nullptr) {
  for (bool b : model.is_binary)
    if (b) throw InputError("solve_lp given a model with integrality flags");
  if (stats) stats->lp_solves++;
  lp_detail::maybe_dump(model, "lp");
  return active_lp_backend().solve(model);
}

// Branch-and-bound over the LP relaxation. Binary flags only; branching
// picks the lowest-index fractional variable and explores the <=0 side
// first. Exceeding the node limit raises ResourceExhausted.
inline LpSolution solve_milp(const LpModel& model, MilpOptions opts = {},
                             SolveStats* stats = nullptr) {
  bool any_binary = false;
  for (bool b : model.is_binary) any_binary |= b;
  if (!any_binary) {
    if (stats) stats->lp_solves++;
    lp_detail::maybe_dump(model, "lp");
    return active_lp_backend().solve(model);
  }
  lp_detail::maybe_dump(model, "milp");

  LpModel relaxed = model;
  relaxed.is_binary.assign(model.var_count, false);
  std::vector<Rat> lo = model.lower;
  std::vector<std::optional<Rat>> hi = model.upper;
  for (int j = 0; j < model.var_count; ++j) {
    if (!model.is_binary[j]) continue;
    if (sgn(lo[j]) < 0) lo[j] = 0;
    if (!hi[j] || cmp(*hi[j], Rat(1)) > 0) hi[j] = Rat(1);
  }

  std::optional<LpSolution> incumbent;
  bool unbounded = false;
  long long nodes = 0;

  std::function<void(std::vector<Rat>&, std::vector<std::optional<Rat>>&)>
      recurse = [&](std::vector<Rat>& l, std::vector<std::optional<Rat>>& h) {
        if (unbounded) return;
        if (++nodes > opts.node_limit)
          throw ResourceExhausted("branch-and-bound node limit (" +
                                  std::to_string(opts.node_limit) +
                                  ") exceeded");
        if (stats) {
          stats->milp_nodes++;
          stats->lp_solves++;
        }
        LpSolution s = active_lp_backend().solve_with_bounds(relaxed, l, h);
        if (s.status == LpStatus::Infeasible) return;
        if (s.status == LpStatus::Unbounded) {
          unbounded = true;
          return;
        }
        if (incumbent &&
            cmp(s.objective_value, incumbent->objective_value) <= 0)
          return;
        if (opts.cutoff && cmp(s.objective_value, *opts.cutoff) <= 0) return;
        int frac = -1;
        for (int j = 0; j < model.var_count; ++j) {
          if (!model.is_binary[j]) continue;
          if (s.primal[j].get_den() != 1) {
            frac = j;
            break;
          }
        }
        if (frac < 0) {
          incumbent = std::move(s);  // strictly better than anything seen
          return;
        }
        {
          std::optional<Rat> saved = h[frac];
          h[frac] = Rat(0);
          recurse(l, h);
          h[frac] = saved;
        }
        {
          Rat saved = l[frac];
          l[frac] = Rat(1);
          recurse(l, h);
          l[frac] = saved;
        }
      };

  recurse(lo, hi);
  if (unbounded) return LpSolution{LpStatus::Unbounded, 0, {}};
  if (!incumbent) return LpSolution{LpStatus::Infeasible, 0, {}};
  return *incumbent;
}

// Debug dump in the common text LP interchange layout. Rational coefficients
// are rendered as shortest-round-trip doubles; the dump is for inspection,
// not exact interchange.
inline void write_lp_text(const LpModel& model, std::ostream& os,
                          const std::string& name = "model") {
  auto num = [](const Rat& r) {
    char buf[64];
    snprintf(buf, sizeof(buf), "%.17g", r.get_d());
    return std::string(buf);
  };
  os << "\\ " << name << "\n";
  os << "Maximize\n obj:";
  bool first = true;
  for (int j = 0; j < model.var_count; ++j) {
    if (sgn(model.objective[j]) == 0) continue;
    os << (first ? " " : " + ") << num(model.objective[j]) << " x" << j;
    first = false;
  }
  if (first) os << " 0 x0";
  os << "\nSubject To\n";
  for (size_t r = 0; r < model.rows.size(); ++r) {
    os << " c" << r << ":";
    bool f = true;
    for (const auto& [j, a] : model.rows[r].coeffs) {
      if (sgn(a) == 0) continue;
      if (f)
        os << " " << num(a) << " x" << j;
      else
        os << (sgn(a) > 0 ? " + " : " - ") << num(abs(a)) << " x" << j;
      f = false;
    }
    const char* rel = model.rows[r].rel == Rel::Le   ? "<="
                      : model.rows[r].rel == Rel::Ge ? ">="
                                                     : "=";
    os << " " << rel << " " << num(model.rows[r].rhs) << "\n";
  }
  os << "Bounds\n";
  for (int j = 0; j < model.var_count; ++j) {
    if (model.upper[j])
      os << " " << num(model.lower[j]) << " <= x" << j << " <= "
         << num(*model.upper[j]) << "\n";
    else if (sgn(model.lower[j]) != 0)
      os << " x" << j << " >= " << num(model.lower[j]) << "\n";
  }
  bool any_bin = false;
  for (bool b : model.is_binary) any_bin |= b;
  if (any_bin) {
    os << "Binaries\n";
    for (int j = 0; j < model.var_count; ++j)
      if (model.is_binary[j]) os << " x" << j << "\n";
  }
  os << "End\n";
}

}  // namespace ddsg
