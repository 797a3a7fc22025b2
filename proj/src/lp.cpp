#include "minfill/lp.hpp"

#include <optional>

#include "minfill/error.hpp"

namespace minfill {
namespace {

// Dense tableau [T | rhs] with one extra reduced-cost row at index `rows`.
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), cells_((rows + 1) * (cols + 1)), basis_(rows, 0) {}

  Rational& at(std::size_t r, std::size_t c) { return cells_[r * (cols_ + 1) + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return cells_[r * (cols_ + 1) + c]; }
  Rational& rhs(std::size_t r) { return at(r, cols_); }
  Rational& cost(std::size_t c) { return at(rows_, c); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::vector<std::size_t>& basis() { return basis_; }

  void pivot(std::size_t p, std::size_t q) {
    const std::size_t width = cols_ + 1;
    Rational* prow = &cells_[p * width];
    const Rational inv = 1 / prow[q];
    nonzero_.clear();
    for (std::size_t c = 0; c < width; ++c) {
      if (sgn(prow[c]) != 0) {
        prow[c] *= inv;
        nonzero_.push_back(c);
      }
    }
    Rational factor;
    Rational scratch;
    for (std::size_t r = 0; r <= rows_; ++r) {
      if (r == p) continue;
      Rational* row = &cells_[r * width];
      if (sgn(row[q]) == 0) continue;
      factor = row[q];
      for (std::size_t c : nonzero_) {
        scratch = factor * prow[c];
        row[c] -= scratch;
      }
    }
    basis_[p] = q;
  }

  // Deletes a row (used for redundant rows left with an artificial basic).
  void drop_row(std::size_t r) {
    const std::size_t width = cols_ + 1;
    cells_.erase(cells_.begin() + static_cast<std::ptrdiff_t>(r * width),
                 cells_.begin() + static_cast<std::ptrdiff_t>((r + 1) * width));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
    --rows_;
  }

  // Reduced-cost row for the given column costs.
  void load_costs(const std::vector<Rational>& c) {
    for (std::size_t j = 0; j <= cols_; ++j) cost(j) = j < cols_ ? c[j] : Rational(0);
    Rational scratch;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Rational& cb = c[basis_[r]];
      if (sgn(cb) == 0) continue;
      for (std::size_t j = 0; j <= cols_; ++j) {
        if (sgn(at(r, j)) == 0) continue;
        scratch = cb * at(r, j);
        cost(j) -= scratch;
      }
    }
  }

  enum class Step { Optimal, Unbounded, Pivoted };

  // One Bland iteration over columns with eligible[c] set. On Unbounded the
  // offending column is stored in `entering`.
  Step step(const std::vector<bool>& eligible, std::size_t& entering) {
    std::optional<std::size_t> q;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (eligible[c] && sgn(cost(c)) < 0) {
        q = c;
        break;
      }
    }
    if (!q) return Step::Optimal;
    entering = *q;
    std::optional<std::size_t> p;
    Rational best;
    Rational ratio;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (sgn(at(r, *q)) <= 0) continue;
      ratio = rhs(r) / at(r, *q);
      if (!p || ratio < best || (ratio == best && basis_[r] < basis_[*p])) {
        p = r;
        best = ratio;
      }
    }
    if (!p) return Step::Unbounded;
    pivot(*p, *q);
    return Step::Pivoted;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> cells_;
  std::vector<std::size_t> basis_;
  std::vector<std::size_t> nonzero_;
};

}  // namespace

void validate(const LinearProgram& lp) {
  if (lp.objective.size() != lp.num_vars) throw ValidationError("LP objective length mismatch");
  if (lp.nonneg.size() != lp.num_vars) throw ValidationError("LP nonneg mask length mismatch");
  for (std::size_t r = 0; r < lp.constraints.size(); ++r) {
    if (lp.constraints[r].coeffs.size() != lp.num_vars) {
      throw ValidationError("LP constraint " + std::to_string(r) + " length mismatch");
    }
  }
}

LpOutcome solve(const LinearProgram& lp) {
  validate(lp);
  const std::size_t n = lp.num_vars;
  const std::size_t m = lp.constraints.size();

  // Column layout: split structurals, slacks, artificials.
  std::vector<std::size_t> pos_col(n);
  std::vector<std::optional<std::size_t>> neg_col(n);
  std::size_t cols = 0;
  for (std::size_t i = 0; i < n; ++i) {
    pos_col[i] = cols++;
    if (!lp.nonneg[i]) neg_col[i] = cols++;
  }
  const std::size_t structural = cols;
  const std::size_t slack0 = cols;
  cols += m;
  std::vector<std::optional<std::size_t>> art_col(m);
  std::vector<int> sign(m);
  for (std::size_t r = 0; r < m; ++r) {
    sign[r] = sgn(lp.constraints[r].rhs) > 0 ? 1 : -1;
    if (sign[r] > 0) art_col[r] = cols++;
  }
  std::vector<bool> is_artificial(cols, false);
  for (const auto& a : art_col) {
    if (a) is_artificial[*a] = true;
  }

  Tableau t(m, cols);
  for (std::size_t r = 0; r < m; ++r) {
    const Constraint& con = lp.constraints[r];
    for (std::size_t i = 0; i < n; ++i) {
      if (sgn(con.coeffs[i]) == 0) continue;
      t.at(r, pos_col[i]) = sign[r] > 0 ? con.coeffs[i] : Rational(-con.coeffs[i]);
      if (neg_col[i]) t.at(r, *neg_col[i]) = -t.at(r, pos_col[i]);
    }
    t.at(r, slack0 + r) = -sign[r];
    t.rhs(r) = sign[r] > 0 ? con.rhs : Rational(-con.rhs);
    if (art_col[r]) {
      t.at(r, *art_col[r]) = 1;
      t.basis()[r] = *art_col[r];
    } else {
      t.basis()[r] = slack0 + r;
    }
  }

  // Phase one.
  std::vector<Rational> phase1(cols, 0);
  for (std::size_t c = 0; c < cols; ++c) {
    if (is_artificial[c]) phase1[c] = 1;
  }
  t.load_costs(phase1);
  std::vector<bool> all(cols, true);
  std::size_t entering = 0;
  while (t.step(all, entering) == Tableau::Step::Pivoted) {
  }
  // Phase-one optimum is -cost(rhs).
  if (sgn(t.cost(cols)) != 0) {
    LpOutcome out;
    out.status = LpStatus::Infeasible;
    out.farkas.resize(m);
    for (std::size_t r = 0; r < m; ++r) {
      const std::size_t initial = art_col[r] ? *art_col[r] : slack0 + r;
      Rational pi = phase1[initial] - t.cost(initial);
      out.farkas[r] = sign[r] > 0 ? pi : Rational(-pi);
    }
    return out;
  }

  // Drive artificials out of the basis; rows where that is impossible are
  // linear combinations of the others.
  for (std::size_t r = 0; r < t.rows();) {
    if (!is_artificial[t.basis()[r]]) {
      ++r;
      continue;
    }
    std::optional<std::size_t> q;
    for (std::size_t c = 0; c < cols; ++c) {
      if (!is_artificial[c] && sgn(t.at(r, c)) != 0) {
        q = c;
        break;
      }
    }
    if (q) {
      t.pivot(r, *q);
      ++r;
    } else {
      t.drop_row(r);
    }
  }

  // Phase two.
  std::vector<Rational> phase2(cols, 0);
  for (std::size_t i = 0; i < n; ++i) {
    phase2[pos_col[i]] = lp.objective[i];
    if (neg_col[i]) phase2[*neg_col[i]] = -lp.objective[i];
  }
  t.load_costs(phase2);
  std::vector<bool> eligible(cols, true);
  for (std::size_t c = 0; c < cols; ++c) eligible[c] = !is_artificial[c];
  Tableau::Step s;
  while ((s = t.step(eligible, entering)) == Tableau::Step::Pivoted) {
  }

  auto to_original = [&](const std::vector<Rational>& split) {
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = split[pos_col[i]];
      if (neg_col[i]) x[i] -= split[*neg_col[i]];
    }
    return x;
  };

  LpOutcome out;
  if (s == Tableau::Step::Unbounded) {
    std::vector<Rational> dir(structural, 0);
    if (entering < structural) dir[entering] = 1;
    for (std::size_t r = 0; r < t.rows(); ++r) {
      if (t.basis()[r] < structural) dir[t.basis()[r]] = -t.at(r, entering);
    }
    out.status = LpStatus::Unbounded;
    out.ray = to_original(dir);
    return out;
  }
  std::vector<Rational> split(structural, 0);
  for (std::size_t r = 0; r < t.rows(); ++r) {
    if (t.basis()[r] < structural) split[t.basis()[r]] = t.rhs(r);
  }
  out.status = LpStatus::Optimal;
  out.point = to_original(split);
  out.value = objective_value(lp, out.point);
  return out;
}

Rational objective_value(const LinearProgram& lp, const std::vector<Rational>& x) {
  Rational v = 0;
  for (std::size_t i = 0; i < lp.num_vars; ++i) v += lp.objective[i] * x[i];
  return v;
}

bool satisfies_constraints(const LinearProgram& lp, const std::vector<Rational>& x) {
  if (x.size() != lp.num_vars) return false;
  for (std::size_t i = 0; i < lp.num_vars; ++i) {
    if (lp.nonneg[i] && sgn(x[i]) < 0) return false;
  }
  for (const auto& con : lp.constraints) {
    Rational lhs = 0;
    for (std::size_t i = 0; i < lp.num_vars; ++i) lhs += con.coeffs[i] * x[i];
    if (lhs < con.rhs) return false;
  }
  return true;
}

bool is_unbounded_ray(const LinearProgram& lp, const std::vector<Rational>& d) {
  if (d.size() != lp.num_vars) return false;
  for (std::size_t i = 0; i < lp.num_vars; ++i) {
    if (lp.nonneg[i] && sgn(d[i]) < 0) return false;
  }
  for (const auto& con : lp.constraints) {
    Rational lhs = 0;
    for (std::size_t i = 0; i < lp.num_vars; ++i) lhs += con.coeffs[i] * d[i];
    if (sgn(lhs) < 0) return false;
  }
  return sgn(objective_value(lp, d)) < 0;
}

bool is_farkas_certificate(const LinearProgram& lp, const std::vector<Rational>& y) {
  if (y.size() != lp.constraints.size()) return false;
  Rational yb = 0;
  for (std::size_t r = 0; r < y.size(); ++r) {
    if (sgn(y[r]) < 0) return false;
    yb += y[r] * lp.constraints[r].rhs;
  }
  if (sgn(yb) <= 0) return false;
  for (std::size_t i = 0; i < lp.num_vars; ++i) {
    Rational col = 0;
    for (std::size_t r = 0; r < y.size(); ++r) col += y[r] * lp.constraints[r].coeffs[i];
    if (lp.nonneg[i] ? sgn(col) > 0 : sgn(col) != 0) return false;
  }
  return true;
}

}  // namespace minfill
