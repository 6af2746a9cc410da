#include "ctv/lp.hpp"

#include <cassert>
#include <limits>
#include <stdexcept>

namespace ctv {
namespace {

constexpr size_t kNone = std::numeric_limits<size_t>::max();

// Dense tableau simplex over exact rationals, Bland's anti-cycling rule.
// Columns are [structural vars | artificials]; the artificial block starts
// as the identity, so after pivoting it holds B^{-1} and yields duals.
class Simplex {
 public:
  // rows x (ncols) constraint matrix with rhs >= 0 required by the caller.
  Simplex(size_t nstruct, size_t nrows)
      : n_(nstruct), m_(nrows), t_(nrows, std::vector<Rational>(nstruct + nrows + 1)) {}

  Rational& coef(size_t i, size_t j) { return t_[i][j]; }

  void set_rhs(size_t i, const Rational& v) { t_[i][n_ + m_] = v; }
  const Rational& get_rhs(size_t i) const { return t_[i][n_ + m_]; }

  void init_artificials() {
    basis_.resize(m_);
    for (size_t i = 0; i < m_; ++i) {
      t_[i][n_ + i] = Rational(1);
      basis_[i] = n_ + i;
    }
  }

  // Declare that column j (structural) is the initial basic variable of
  // row i (its coefficient must already be 1 in that row and 0 elsewhere).
  void set_basic(size_t i, size_t j) { basis_[i] = j; }

  size_t num_cols() const { return n_ + m_; }
  size_t basic_var(size_t i) const { return basis_[i]; }

  bool is_artificial(size_t j) const { return j >= n_; }

  // Minimizes cost over the current feasible tableau. cost has an entry per
  // column (artificials included). Artificial columns never enter. Returns
  // the optimal value. The tableau must represent a feasible basis.
  Rational optimize(const std::vector<Rational>& cost) {
    while (true) {
      size_t enter = kNone;
      for (size_t j = 0; j < n_; ++j) {
        bool basic = false;
        for (size_t i = 0; i < m_; ++i)
          if (basis_[i] == j) { basic = true; break; }
        if (basic) continue;
        if (reduced_cost(j, cost).sign() < 0) { enter = j; break; }
      }
      if (enter == kNone) break;
      size_t leave = kNone;
      Rational best;
      for (size_t i = 0; i < m_; ++i) {
        if (t_[i][enter].sign() <= 0) continue;
        Rational ratio = get_rhs(i) / t_[i][enter];
        if (leave == kNone || ratio < best ||
            (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == kNone) throw std::logic_error("simplex: unbounded objective");
      pivot(leave, enter);
    }
    Rational val;
    for (size_t i = 0; i < m_; ++i)
      if (basis_[i] != kNone) val += cost[basis_[i]] * get_rhs(i);
    return val;
  }

  // y = c_B B^{-1}, one entry per row, read off the artificial block.
  std::vector<Rational> duals(const std::vector<Rational>& cost) const {
    std::vector<Rational> y(m_);
    for (size_t k = 0; k < m_; ++k) {
      Rational v;
      for (size_t i = 0; i < m_; ++i)
        if (basis_[i] != kNone) v += cost[basis_[i]] * t_[i][n_ + k];
      y[k] = v;
    }
    return y;
  }

  std::vector<Rational> solution() const {
    std::vector<Rational> z(n_ + m_);
    for (size_t i = 0; i < m_; ++i)
      if (basis_[i] != kNone) z[basis_[i]] = get_rhs(i);
    return z;
  }

  // Pivot basic artificials out where possible; rows where the whole
  // structural part vanished are redundant and get cleared.
  void purge_artificials() {
    for (size_t i = 0; i < m_; ++i) {
      if (basis_[i] == kNone || !is_artificial(basis_[i])) continue;
      size_t piv = kNone;
      for (size_t j = 0; j < n_; ++j) {
        if (t_[i][j].sign() != 0) { piv = j; break; }
      }
      if (piv == kNone) {
        basis_[i] = kNone;  // redundant row
      } else {
        pivot(i, piv);
      }
    }
  }

 private:
  // r_j = c_j - c_B^T (B^{-1} M_j); the current tableau column is B^{-1} M_j.
  Rational reduced_cost(size_t j, const std::vector<Rational>& cost) const {
    Rational r = cost[j];
    for (size_t i = 0; i < m_; ++i)
      if (basis_[i] != kNone) r -= cost[basis_[i]] * t_[i][j];
    return r;
  }

  void pivot(size_t row, size_t col) {
    Rational inv = Rational(1) / t_[row][col];
    for (auto& x : t_[row]) x *= inv;
    for (size_t i = 0; i < m_; ++i) {
      if (i == row || t_[i][col].is_zero()) continue;
      Rational f = t_[i][col];
      for (size_t j = 0; j <= n_ + m_; ++j) t_[i][j] -= f * t_[row][j];
    }
    basis_[row] = col;
  }

  size_t n_, m_;
  std::vector<std::vector<Rational>> t_;
  std::vector<size_t> basis_;
};

}  // namespace

bool satisfies(const LinearSystem& sys, const std::vector<Rational>& x) {
  if (x.size() != sys.num_vars) return false;
  for (const auto& row : sys.rows) {
    Rational v = dot(row.a, x);
    switch (row.rel) {
      case Rel::EQ: if (v != row.b) return false; break;
      case Rel::LE: if (v > row.b) return false; break;
      case Rel::LT: if (v >= row.b) return false; break;
    }
  }
  return true;
}

bool verify_farkas(const LinearSystem& sys, const FarkasCertificate& cert) {
  if (cert.multipliers.size() != sys.rows.size()) return false;
  bool strict_used = false;
  for (size_t i = 0; i < sys.rows.size(); ++i) {
    const Rational& m = cert.multipliers[i];
    if (sys.rows[i].rel != Rel::EQ && m.sign() < 0) return false;
    if (sys.rows[i].rel == Rel::LT && m.sign() > 0) strict_used = true;
  }
  for (size_t j = 0; j < sys.num_vars; ++j) {
    Rational s;
    for (size_t i = 0; i < sys.rows.size(); ++i)
      s += cert.multipliers[i] * sys.rows[i].a[j];
    if (!s.is_zero()) return false;
  }
  Rational c;
  for (size_t i = 0; i < sys.rows.size(); ++i) c += cert.multipliers[i] * sys.rows[i].b;
  if (c.sign() < 0) return true;
  return c.sign() == 0 && strict_used;
}

FeasResult solve_feasibility(const LinearSystem& sys) {
  for (const auto& row : sys.rows) {
    if (row.a.size() != sys.num_vars)
      throw std::invalid_argument("solve_feasibility: row dimension mismatch");
  }

  size_t n = sys.num_vars;
  size_t nrows = sys.rows.size();
  bool has_strict = false;
  for (const auto& row : sys.rows)
    if (row.rel == Rel::LT) has_strict = true;

  // Structural columns: u_0..u_{n-1}, v_0..v_{n-1} (x = u - v), then the
  // margin delta (if strict rows exist), then one slack per inequality row
  // (including the internal "delta <= 1" row).
  size_t delta_col = has_strict ? 2 * n : kNone;
  size_t next = 2 * n + (has_strict ? 1 : 0);
  std::vector<size_t> slack_col(nrows, kNone);
  for (size_t i = 0; i < nrows; ++i)
    if (sys.rows[i].rel != Rel::EQ) slack_col[i] = next++;
  size_t beta_slack = has_strict ? next++ : kNone;
  size_t nstruct = next;
  size_t m = nrows + (has_strict ? 1 : 0);

  Simplex sx(nstruct, m);
  sx.init_artificials();
  std::vector<int> row_sign(m, 1);

  for (size_t i = 0; i < nrows; ++i) {
    const auto& row = sys.rows[i];
    int s = row.b.sign() < 0 ? -1 : 1;
    row_sign[i] = s;
    Rational sgn_r(s);
    for (size_t j = 0; j < n; ++j) {
      sx.coef(i, j) = sgn_r * row.a[j];
      sx.coef(i, n + j) = -sgn_r * row.a[j];
    }
    if (row.rel == Rel::LT) sx.coef(i, delta_col) = sgn_r;
    if (slack_col[i] != kNone) sx.coef(i, slack_col[i]) = sgn_r;
    sx.set_rhs(i, sgn_r * row.b);
    if (s > 0 && slack_col[i] != kNone) sx.set_basic(i, slack_col[i]);
  }
  if (has_strict) {
    size_t i = nrows;
    sx.coef(i, delta_col) = Rational(1);
    sx.coef(i, beta_slack) = Rational(1);
    sx.set_rhs(i, Rational(1));
    sx.set_basic(i, beta_slack);
  }

  // Phase one: drive artificials to zero.
  std::vector<Rational> phase1(nstruct + m);
  for (size_t j = nstruct; j < nstruct + m; ++j) phase1[j] = Rational(1);
  // Rows whose slack is not the initial basic variable keep their
  // artificial basic; rows with a basic slack have a zero artificial that
  // simply never appears in the basis.
  Rational infeas = sx.optimize(phase1);

  auto extract_farkas = [&](const std::vector<Rational>& cost) {
    std::vector<Rational> y = sx.duals(cost);
    FarkasCertificate cert;
    cert.multipliers.resize(nrows);
    for (size_t i = 0; i < nrows; ++i)
      cert.multipliers[i] = -Rational(row_sign[i]) * y[i];
    return cert;
  };

  if (infeas.sign() > 0) {
    FarkasCertificate cert = extract_farkas(phase1);
    if (!verify_farkas(sys, cert)) throw std::logic_error("invalid Farkas certificate (phase 1)");
    return cert;
  }

  auto extract_point = [&]() {
    std::vector<Rational> z = sx.solution();
    std::vector<Rational> x(n);
    for (size_t j = 0; j < n; ++j) x[j] = z[j] - z[n + j];
    return x;
  };

  if (!has_strict) {
    std::vector<Rational> x = extract_point();
    if (!satisfies(sys, x)) throw std::logic_error("simplex produced an invalid point");
    return LpFeasible{std::move(x)};
  }

  sx.purge_artificials();
  std::vector<Rational> phase2(nstruct + m);
  phase2[delta_col] = Rational(-1);
  Rational neg_delta = sx.optimize(phase2);

  if (neg_delta.sign() < 0) {
    std::vector<Rational> x = extract_point();
    if (!satisfies(sys, x)) throw std::logic_error("simplex produced an invalid point");
    return LpFeasible{std::move(x)};
  }
  FarkasCertificate cert = extract_farkas(phase2);
  if (!verify_farkas(sys, cert)) throw std::logic_error("invalid Farkas certificate (phase 2)");
  return cert;
}

}  // namespace ctv
