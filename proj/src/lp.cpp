#include "ckc/lp.hpp"

#include <algorithm>
#include <optional>

#include "ckc/errors.hpp"

namespace ckc {

void LinearProgram::add_row(std::vector<Rat> a, Rel rel, Rat rhs) {
  rows.push_back(Row{std::move(a), rel, std::move(rhs)});
}

void LinearProgram::check() const {
  if (num_vars <= 0) throw Error("LP has no variables");
  if (static_cast<int>(lo.size()) != num_vars || static_cast<int>(hi.size()) != num_vars)
    throw Error("LP bounds size mismatch");
  for (int j = 0; j < num_vars; ++j)
    if (lo[j] > hi[j]) throw Error("LP box bound lo > hi");
  for (const Row& r : rows)
    if (static_cast<int>(r.a.size()) != num_vars) throw Error("LP row length mismatch");
  if (!objective.empty() && static_cast<int>(objective.size()) != num_vars)
    throw Error("LP objective length mismatch");
}

namespace {

struct Bound {
  bool finite = false;
  Rat v;
};

// Bounded-variable tableau simplex. Variable order: structurals, slacks,
// artificials; Bland's rule picks the smallest eligible index, so runs are
// deterministic and never cycle.
class Simplex {
 public:
  explicit Simplex(const LinearProgram& lp) : lp_(lp) {
    nv_ = lp.num_vars;
    m_ = static_cast<int>(lp.rows.size());
    ncols_ = nv_ + m_;
    lo_.resize(ncols_);
    hi_.resize(ncols_);
    for (int j = 0; j < nv_; ++j) {
      lo_[j] = Bound{true, lp.lo[j]};
      hi_[j] = Bound{true, lp.hi[j]};
    }
    for (int i = 0; i < m_; ++i) {
      const int s = nv_ + i;
      switch (lp.rows[i].rel) {
        case Rel::Le:
          lo_[s] = Bound{true, Rat(0)};
          hi_[s] = Bound{false, Rat(0)};
          break;
        case Rel::Ge:
          lo_[s] = Bound{false, Rat(0)};
          hi_[s] = Bound{true, Rat(0)};
          break;
        case Rel::Eq:
          lo_[s] = Bound{true, Rat(0)};
          hi_[s] = Bound{true, Rat(0)};
          break;
      }
    }
    tab_.assign(m_, std::vector<Rat>(ncols_, Rat(0)));
    for (int i = 0; i < m_; ++i) {
      for (int j = 0; j < nv_; ++j) tab_[i][j] = lp.rows[i].a[j];
      tab_[i][nv_ + i] = 1;
    }
    state_.assign(ncols_, AtLo);
    for (int j = 0; j < ncols_; ++j)
      if (!lo_[j].finite) state_[j] = AtHi;
    basic_.assign(m_, -1);
    xb_.assign(m_, Rat(0));
  }

  bool phase1() {
    // Slacks start basic; rows whose slack value violates its bound get an
    // artificial variable instead, and phase 1 drives their sum to zero.
    std::vector<Rat> resid(m_);
    for (int i = 0; i < m_; ++i) {
      Rat v = lp_.rows[i].rhs;
      for (int j = 0; j < nv_; ++j)
        if (sgn(tab_[i][j]) != 0) v -= tab_[i][j] * value_at_bound(j);
      resid[i] = std::move(v);
    }
    std::vector<int> art_rows;
    for (int i = 0; i < m_; ++i) {
      const int s = nv_ + i;
      const bool fits_low = !lo_[s].finite || resid[i] >= lo_[s].v;
      const bool fits_high = !hi_[s].finite || resid[i] <= hi_[s].v;
      const bool eq_row = lp_.rows[i].rel == Rel::Eq;
      if (fits_low && fits_high && !eq_row) {
        basic_[i] = s;
        state_[s] = Basic;
        xb_[i] = resid[i];
      } else {
        art_rows.push_back(i);
      }
    }
    for (int i : art_rows) {
      const int t = ncols_;
      const int sign_r = sgn(resid[i]) < 0 ? -1 : 1;
      for (auto& row : tab_) row.push_back(Rat(0));
      lo_.push_back(Bound{true, Rat(0)});
      hi_.push_back(Bound{false, Rat(0)});
      state_.push_back(Basic);
      tab_[i][t] = 1;
      if (sign_r < 0)
        for (int j = 0; j <= t; ++j) tab_[i][j] = -tab_[i][j];
      basic_[i] = t;
      xb_[i] = sign_r < 0 ? Rat(-resid[i]) : resid[i];
      ++ncols_;
      artificials_.push_back(t);
    }

    std::vector<Rat> cost(ncols_, Rat(0));
    for (int t : artificials_) cost[t] = -1;
    run(cost);

    for (int i = 0; i < m_; ++i)
      if (basic_[i] >= nv_ + m_ && sgn(xb_[i]) != 0) return false;

    // Pivot basic artificials (all at zero now) out where possible; fix every
    // artificial to [0,0] so phase 2 cannot move them.
    for (int i = 0; i < m_; ++i) {
      const int b = basic_[i];
      if (b < nv_ + m_) continue;
      int col = -1;
      for (int j = 0; j < nv_ + m_; ++j)
        if (state_[j] != Basic && sgn(tab_[i][j]) != 0) {
          col = j;
          break;
        }
      if (col >= 0) pivot(i, col, value_at_bound(col));
    }
    for (int t : artificials_) {
      lo_[t] = Bound{true, Rat(0)};
      hi_[t] = Bound{true, Rat(0)};
    }
    return true;
  }

  void phase2() {
    std::vector<Rat> cost(ncols_, Rat(0));
    for (int j = 0; j < nv_; ++j)
      cost[j] = lp_.maximize ? lp_.objective[j] : Rat(-lp_.objective[j]);
    run(cost);
  }

  std::vector<Rat> values() const {
    std::vector<Rat> out(nv_);
    for (int j = 0; j < nv_; ++j) out[j] = current_value(j);
    return out;
  }

 private:
  enum State { Basic, AtLo, AtHi };

  Rat value_at_bound(int j) const {
    if (state_[j] == AtHi) return hi_[j].finite ? hi_[j].v : Rat(0);
    return lo_[j].finite ? lo_[j].v : Rat(0);
  }

  Rat current_value(int j) const {
    if (state_[j] == Basic) {
      for (int i = 0; i < m_; ++i)
        if (basic_[i] == j) return xb_[i];
      throw Error("basis bookkeeping broken");
    }
    return value_at_bound(j);
  }

  void recompute_reduced_costs(const std::vector<Rat>& cost) {
    zrow_.assign(ncols_, Rat(0));
    for (int j = 0; j < ncols_; ++j) zrow_[j] = cost[j];
    for (int i = 0; i < m_; ++i) {
      const Rat& cb = cost[basic_[i]];
      if (sgn(cb) == 0) continue;
      for (int j = 0; j < ncols_; ++j)
        if (sgn(tab_[i][j]) != 0) zrow_[j] -= cb * tab_[i][j];
    }
  }

  void pivot(int row, int col, Rat entering_value) {
    const Rat piv = tab_[row][col];
    if (sgn(piv) == 0) throw Error("zero pivot");
    for (int j = 0; j < ncols_; ++j)
      if (sgn(tab_[row][j]) != 0) tab_[row][j] /= piv;
    for (int i = 0; i < m_; ++i) {
      if (i == row || sgn(tab_[i][col]) == 0) continue;
      const Rat f = tab_[i][col];
      for (int j = 0; j < ncols_; ++j)
        if (sgn(tab_[row][j]) != 0) tab_[i][j] -= f * tab_[row][j];
    }
    if (!zrow_.empty() && sgn(zrow_[col]) != 0) {
      const Rat f = zrow_[col];
      for (int j = 0; j < ncols_; ++j)
        if (sgn(tab_[row][j]) != 0) zrow_[j] -= f * tab_[row][j];
    }
    state_[basic_[row]] = AtLo;  // caller fixes the true side below
    basic_[row] = col;
    state_[col] = Basic;
    xb_[row] = std::move(entering_value);
  }

  void run(const std::vector<Rat>& cost) {
    recompute_reduced_costs(cost);
    for (long iter = 0;; ++iter) {
      if (iter > 200000) throw Error("simplex iteration cap exceeded");
      int enter = -1, dir = 0;
      for (int j = 0; j < ncols_; ++j) {
        if (state_[j] == Basic) continue;
        if (lo_[j].finite && hi_[j].finite && lo_[j].v == hi_[j].v) continue;  // fixed var
        const int sd = sgn(zrow_[j]);
        if (state_[j] == AtLo && sd > 0) {
          enter = j;
          dir = 1;
          break;
        }
        if (state_[j] == AtHi && sd < 0) {
          enter = j;
          dir = -1;
          break;
        }
      }
      if (enter < 0) return;  // optimal for this cost vector

      // ratio test: smallest step that hits a basic bound or the entering
      // variable's opposite bound; Bland tie-break on variable index
      std::optional<Rat> best_delta;
      int leave_row = -1;        // -1 => bound flip
      int leave_var = ncols_;    // for tie-breaking
      if (lo_[enter].finite && hi_[enter].finite) {
        best_delta = hi_[enter].v - lo_[enter].v;
        leave_row = -1;
        leave_var = enter;
      }
      for (int i = 0; i < m_; ++i) {
        const int s = sgn(tab_[i][enter]);
        if (s == 0) continue;
        const int change = -s * dir;  // sign of d(xb_i)/d(delta)
        const int b = basic_[i];
        Rat limit;
        if (change > 0) {
          if (!hi_[b].finite) continue;
          limit = (hi_[b].v - xb_[i]) / (tab_[i][enter] * Rat(-dir));
        } else {
          if (!lo_[b].finite) continue;
          limit = (lo_[b].v - xb_[i]) / (tab_[i][enter] * Rat(-dir));
        }
        if (!best_delta || limit < *best_delta || (limit == *best_delta && b < leave_var)) {
          best_delta = limit;
          leave_row = i;
          leave_var = b;
        }
      }
      if (!best_delta) throw Error("LP unbounded");
      const Rat delta = *best_delta;

      // move basics
      if (sgn(delta) != 0)
        for (int i = 0; i < m_; ++i)
          if (sgn(tab_[i][enter]) != 0) xb_[i] -= tab_[i][enter] * Rat(dir) * delta;

      if (leave_row < 0) {
        state_[enter] = (dir > 0) ? AtHi : AtLo;
        continue;
      }
      const int leaving = basic_[leave_row];
      const Rat entering_value = value_at_bound(enter) + Rat(dir) * delta;
      const int change = -sgn(tab_[leave_row][enter]) * dir;
      pivot(leave_row, enter, entering_value);
      state_[leaving] = (change > 0) ? AtHi : AtLo;
    }
  }

  const LinearProgram& lp_;
  int nv_ = 0, m_ = 0, ncols_ = 0;
  std::vector<std::vector<Rat>> tab_;
  std::vector<Bound> lo_, hi_;
  std::vector<int> state_;
  std::vector<int> basic_;
  std::vector<Rat> xb_;
  std::vector<Rat> zrow_;
  std::vector<int> artificials_;
};

void fill_tight_sets(const LinearProgram& lp, LpOutcome& out) {
  for (int i = 0; i < static_cast<int>(lp.rows.size()); ++i) {
    Rat lhs(0);
    for (int j = 0; j < lp.num_vars; ++j)
      if (sgn(lp.rows[i].a[j]) != 0) lhs += lp.rows[i].a[j] * out.values[j];
    if (lhs == lp.rows[i].rhs) out.tight_rows.push_back(i);
  }
  for (int j = 0; j < lp.num_vars; ++j) {
    if (out.values[j] == lp.lo[j]) out.tight_lower.push_back(j);
    if (out.values[j] == lp.hi[j]) out.tight_upper.push_back(j);
  }
}

void assert_feasible(const LinearProgram& lp, const std::vector<Rat>& x) {
  for (int j = 0; j < lp.num_vars; ++j)
    if (x[j] < lp.lo[j] || x[j] > lp.hi[j]) throw Error("simplex produced out-of-box point");
  for (const auto& row : lp.rows) {
    Rat lhs(0);
    for (int j = 0; j < lp.num_vars; ++j)
      if (sgn(row.a[j]) != 0) lhs += row.a[j] * x[j];
    const bool ok = (row.rel == Rel::Le && lhs <= row.rhs) || (row.rel == Rel::Ge && lhs >= row.rhs) ||
                    (row.rel == Rel::Eq && lhs == row.rhs);
    if (!ok) throw Error("simplex produced infeasible point");
  }
}

}  // namespace

LpOutcome solve_feasible(const LinearProgram& lp) {
  lp.check();
  Simplex s(lp);
  LpOutcome out;
  if (!s.phase1()) {
    out.status = LpStatus::Infeasible;
    return out;
  }
  out.status = LpStatus::Feasible;
  out.values = s.values();
  assert_feasible(lp, out.values);
  fill_tight_sets(lp, out);
  return out;
}

LpOutcome solve_extreme_optimal(const LinearProgram& lp) {
  lp.check();
  if (lp.objective.empty()) throw Error("extreme-optimal solve needs an objective");
  Simplex s(lp);
  LpOutcome out;
  if (!s.phase1()) {
    out.status = LpStatus::Infeasible;
    return out;
  }
  s.phase2();
  out.status = LpStatus::OptimalExtreme;
  out.values = s.values();
  assert_feasible(lp, out.values);
  fill_tight_sets(lp, out);

  // vertex certificate: tight rows + tight box bounds must have full rank
  std::vector<std::vector<Rat>> rows;
  for (int i : out.tight_rows) rows.push_back(lp.rows[i].a);
  for (int j : out.tight_lower) {
    std::vector<Rat> e(lp.num_vars, Rat(0));
    e[j] = 1;
    rows.push_back(std::move(e));
  }
  for (int j : out.tight_upper) {
    std::vector<Rat> e(lp.num_vars, Rat(0));
    e[j] = 1;
    rows.push_back(std::move(e));
  }
  if (rank_of_rows(std::move(rows)) != lp.num_vars)
    throw Error("simplex result is not an extreme point");
  return out;
}

int count_fractional(const LinearProgram& lp, const LpOutcome& out) {
  if (out.status == LpStatus::Infeasible) throw Error("no point to count fractionals on");
  int count = 0;
  for (int j = 0; j < lp.num_vars; ++j)
    if (out.values[j] > lp.lo[j] && out.values[j] < lp.hi[j]) ++count;
  return count;
}

int rank_of_rows(std::vector<std::vector<Rat>> rows) {
  if (rows.empty()) return 0;
  const int ncols = static_cast<int>(rows[0].size());
  int rank = 0;
  for (int col = 0; col < ncols && rank < static_cast<int>(rows.size()); ++col) {
    int piv = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r)
      if (sgn(rows[r][col]) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[rank], rows[piv]);
    for (int r = rank + 1; r < static_cast<int>(rows.size()); ++r) {
      if (sgn(rows[r][col]) == 0) continue;
      const Rat f = rows[r][col] / rows[rank][col];
      for (int c = col; c < ncols; ++c)
        if (sgn(rows[rank][c]) != 0) rows[r][c] -= f * rows[rank][c];
    }
    ++rank;
  }
  return rank;
}

}  // namespace ckc
