#include "corrcast/lp.hpp"

#include <algorithm>

#include "corrcast/error.hpp"

namespace corrcast::lp {
namespace {

struct Phase1 {
  bool feasible;
  std::vector<Rational> point;
  std::vector<std::size_t> dual_support;
};

// Dense tableau. Columns: [structural | slack per row | artificial per row that needs one].
Phase1 run_phase1(std::size_t n, std::span<const Row> rows, std::span<const std::size_t> active) {
  const std::size_t m = active.size();
  std::vector<int> slack_sign(m);
  std::vector<bool> flipped(m);
  std::vector<bool> needs_artificial(m);
  std::size_t artificials = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const Row& r = rows[active[i]];
    int sign = r.sense == Sense::at_most ? 1 : -1;
    flipped[i] = r.rhs < 0;
    if (flipped[i]) sign = -sign;
    slack_sign[i] = sign;
    needs_artificial[i] = sign < 0;
    if (needs_artificial[i]) ++artificials;
  }
  const std::size_t slack0 = n;
  const std::size_t art0 = n + m;
  const std::size_t cols = n + m + artificials;
  // tableau rows 0..m-1 constraints; last column is rhs
  std::vector<std::vector<Rational>> t(m, std::vector<Rational>(cols + 1));
  std::vector<std::size_t> basis(m);
  std::vector<std::size_t> initial(m);  // column of e_i in the starting basis
  std::vector<Rational> cost(cols, 0);
  std::size_t next_art = art0;
  for (std::size_t i = 0; i < m; ++i) {
    const Row& r = rows[active[i]];
    if (r.coeffs.size() != n) throw PreconditionError("row width does not match variable count");
    const int f = flipped[i] ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) t[i][j] = f * r.coeffs[j];
    t[i][slack0 + i] = slack_sign[i];
    t[i][cols] = f * r.rhs;
    if (needs_artificial[i]) {
      t[i][next_art] = 1;
      cost[next_art] = 1;
      basis[i] = initial[i] = next_art++;
    } else {
      basis[i] = initial[i] = slack0 + i;
    }
  }
  // reduced costs d_j = c_j - c_B B^-1 A_j, objective value z = c_B B^-1 b
  std::vector<Rational> d(cols + 1, 0);
  for (std::size_t j = 0; j < cols; ++j) d[j] = cost[j];
  for (std::size_t i = 0; i < m; ++i)
    if (cost[basis[i]] != 0)
      for (std::size_t j = 0; j <= cols; ++j) d[j] -= t[i][j];
  // d[cols] now holds -z

  for (;;) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j)
      if (d[j] < 0) {
        enter = j;
        break;
      }
    if (enter == cols) break;
    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rational ratio = t[i][cols] / t[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) break;  // unbounded direction; cannot happen for a phase-1 objective bounded below
    Rational pivot = t[leave][enter];
    for (auto& v : t[leave]) v /= pivot;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      Rational factor = t[i][enter];
      for (std::size_t j = 0; j <= cols; ++j)
        if (t[leave][j] != 0) t[i][j] -= factor * t[leave][j];
    }
    if (d[enter] != 0) {
      Rational factor = d[enter];
      for (std::size_t j = 0; j <= cols; ++j)
        if (t[leave][j] != 0) d[j] -= factor * t[leave][j];
    }
    basis[leave] = enter;
  }

  Phase1 out;
  Rational objective = -d[cols];
  out.feasible = objective == 0;
  if (out.feasible) {
    out.point.assign(n, 0);
    for (std::size_t i = 0; i < m; ++i)
      if (basis[i] < n) out.point[basis[i]] = t[i][cols];
  } else {
    // y_i = c_{e_i} - d_{e_i}
    for (std::size_t i = 0; i < m; ++i) {
      Rational y = cost[initial[i]] - d[initial[i]];
      if (y != 0) out.dual_support.push_back(i);
    }
  }
  return out;
}

std::vector<std::size_t> all_rows(std::size_t m) {
  std::vector<std::size_t> v(m);
  for (std::size_t i = 0; i < m; ++i) v[i] = i;
  return v;
}

}  // namespace

Result solve_feasibility(std::size_t num_vars, std::span<const Row> rows) {
  auto active = all_rows(rows.size());
  Phase1 first = run_phase1(num_vars, rows, active);
  Result result;
  result.feasible = first.feasible;
  if (first.feasible) {
    result.point = std::move(first.point);
    return result;
  }
  std::vector<std::size_t> conflict;
  for (std::size_t i : first.dual_support) conflict.push_back(active[i]);
  if (conflict.empty()) conflict = active;
  // deletion filter
  for (std::size_t k = 0; k < conflict.size();) {
    std::vector<std::size_t> trial;
    for (std::size_t j = 0; j < conflict.size(); ++j)
      if (j != k) trial.push_back(conflict[j]);
    if (!trial.empty() && !run_phase1(num_vars, rows, trial).feasible)
      conflict = std::move(trial);
    else
      ++k;
  }
  std::sort(conflict.begin(), conflict.end());
  result.conflict = std::move(conflict);
  return result;
}

}  // namespace corrcast::lp
