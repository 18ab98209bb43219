#include "gvc/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace gvc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPivTol = 1e-9;
constexpr double kCostTol = 1e-9;

enum : int { AtLower = 0, AtUpper = 1, Basic = 2 };

struct Tableau {
  int rows = 0;
  int cols = 0;
  std::vector<double> t;  // rows x cols, row-major
  double& at(int r, int c) { return t[static_cast<std::size_t>(r) * cols + c]; }
  double* row(int r) { return &t[static_cast<std::size_t>(r) * cols]; }
};

}  // namespace

SimplexResult simplex_solve(const std::vector<double>& cost,
                            const std::vector<double>& lower,
                            const std::vector<double>& upper,
                            const std::vector<SimplexRow>& rows) {
  const int nStruct = static_cast<int>(cost.size());
  const int nRows = static_cast<int>(rows.size());
  if (lower.size() != cost.size() || upper.size() != cost.size())
    throw std::invalid_argument("simplex_solve: bound sizes mismatch");
  for (int j = 0; j < nStruct; ++j) {
    if (!std::isfinite(lower[j]) || lower[j] > upper[j])
      throw std::invalid_argument("simplex_solve: bad bounds");
  }

  // Normalize 'G' rows to 'L'.
  std::vector<SimplexRow> norm(rows);
  for (SimplexRow& r : norm) {
    if (r.op == 'G') {
      for (auto& [c, a] : r.terms) a = -a;
      r.rhs = -r.rhs;
      r.op = 'L';
    } else if (r.op != 'L' && r.op != 'E') {
      throw std::invalid_argument("simplex_solve: unknown row op");
    }
  }

  // Column layout: structural, one slack per 'L' row, artificials.
  int nSlack = 0;
  for (const SimplexRow& r : norm)
    if (r.op == 'L') ++nSlack;

  std::vector<double> lb(lower), ub(upper);
  std::vector<char> artificial(nStruct, 0);
  lb.reserve(nStruct + nSlack + nRows);
  ub.reserve(nStruct + nSlack + nRows);

  Tableau tab;
  tab.rows = nRows;
  // Reserve the worst case: every row gets an artificial.
  const int maxCols = nStruct + nSlack + nRows;
  tab.cols = maxCols;
  tab.t.assign(static_cast<std::size_t>(nRows) * maxCols, 0.0);

  std::vector<int> basis(nRows, -1);
  std::vector<double> beta(nRows, 0.0);

  int col = nStruct;
  double rhsScale = 1.0;
  for (int r = 0; r < nRows; ++r) {
    double residual = norm[r].rhs;
    rhsScale = std::max(rhsScale, std::abs(norm[r].rhs));
    for (const auto& [c, a] : norm[r].terms) {
      if (c < 0 || c >= nStruct)
        throw std::invalid_argument("simplex_solve: column out of range");
      tab.at(r, c) += a;
    }
    for (const auto& [c, a] : norm[r].terms) residual -= a * lower[c];
    if (norm[r].op == 'L') {
      const int slack = col++;
      lb.push_back(0.0);
      ub.push_back(kInf);
      artificial.push_back(0);
      tab.at(r, slack) = 1.0;
      if (residual >= 0.0) {
        basis[r] = slack;
        beta[r] = residual;
        continue;
      }
    }
    if (residual < 0.0) {
      // Flip the row so the artificial can carry a +1 coefficient and
      // the starting basis stays an identity.
      for (int c = 0; c < col; ++c) tab.at(r, c) = -tab.at(r, c);
      norm[r].rhs = -norm[r].rhs;
      residual = -residual;
    }
    const int art = col++;
    lb.push_back(0.0);
    ub.push_back(kInf);
    artificial.push_back(1);
    tab.at(r, art) = 1.0;
    basis[r] = art;
    beta[r] = residual;
  }
  const int nCols = col;
  tab.cols = nCols;
  // Shrink rows to the actual column count.
  {
    std::vector<double> packed(static_cast<std::size_t>(nRows) * nCols);
    for (int r = 0; r < nRows; ++r)
      std::copy_n(&tab.t[static_cast<std::size_t>(r) * maxCols], nCols,
                  &packed[static_cast<std::size_t>(r) * nCols]);
    tab.t = std::move(packed);
  }

  // Keep the initial matrix and rhs for the final refactorization.
  const std::vector<double> a0 = tab.t;
  std::vector<double> rhs0(nRows);
  for (int r = 0; r < nRows; ++r) rhs0[r] = norm[r].rhs;

  std::vector<int> state(nCols, AtLower);
  for (int r = 0; r < nRows; ++r) state[basis[r]] = Basic;

  std::vector<double> phaseCost(nCols, 0.0);
  std::vector<double> d(nCols, 0.0);  // reduced costs

  auto nbval = [&](int c) { return state[c] == AtUpper ? ub[c] : lb[c]; };

  auto price = [&]() {
    d = phaseCost;
    for (int r = 0; r < nRows; ++r) {
      const double cb = phaseCost[basis[r]];
      if (cb == 0.0) continue;
      const double* row = tab.row(r);
      for (int c = 0; c < nCols; ++c) d[c] -= cb * row[c];
    }
    for (int r = 0; r < nRows; ++r) d[basis[r]] = 0.0;
  };

  SimplexResult result;
  int degenerateRun = 0;
  const int blandTrigger = 5 * (nRows + nCols);
  const double feasTol = 1e-9 * rhsScale;
  const int iterationCap = 20000 + 200 * (nRows + nCols);

  // Main pivot loop, shared by both phases.
  auto phase_loop = [&]() -> SimplexResult::Status {
    price();
    int sincePrice = 0;
    for (;;) {
      if (++result.iterations > iterationCap)
        throw std::runtime_error("simplex_solve: iteration limit reached");
      if (++sincePrice >= 64) {
        price();
        sincePrice = 0;
      }
      const bool bland = degenerateRun > blandTrigger;

      int enter = -1;
      int dir = 0;
      double bestViol = kCostTol;
      for (int c = 0; c < nCols; ++c) {
        if (state[c] == Basic || artificial[c] || lb[c] == ub[c]) continue;
        double viol = 0.0;
        int cdir = 0;
        if (state[c] == AtLower && d[c] < -kCostTol) {
          viol = -d[c];
          cdir = +1;
        } else if (state[c] == AtUpper && d[c] > kCostTol) {
          viol = d[c];
          cdir = -1;
        } else {
          continue;
        }
        if (bland) {
          enter = c;
          dir = cdir;
          break;
        }
        if (viol > bestViol) {
          bestViol = viol;
          enter = c;
          dir = cdir;
        }
      }
      if (enter == -1) return SimplexResult::Status::Optimal;

      // Ratio test: entering variable moves by dir * t, t >= 0.
      double tBest = kInf;
      int leaveRow = -1;  // -1: unbounded, -2: bound flip on entering column
      int leaveState = AtLower;
      double bestPivot = 0.0;
      if (std::isfinite(ub[enter])) {
        tBest = ub[enter] - lb[enter];
        leaveRow = -2;
      }
      for (int r = 0; r < nRows; ++r) {
        const double rate = dir * tab.at(r, enter);
        if (std::abs(rate) <= kPivTol) continue;
        double limit;
        int toState;
        if (rate > 0.0) {
          limit = (beta[r] - lb[basis[r]]) / rate;
          toState = AtLower;
        } else {
          if (!std::isfinite(ub[basis[r]])) continue;
          limit = (ub[basis[r]] - beta[r]) / -rate;
          toState = AtUpper;
        }
        limit = std::max(limit, 0.0);
        const bool strictly = limit < tBest - 1e-12;
        bool tie = !strictly && limit < tBest + 1e-12 && leaveRow >= 0;
        if (strictly || (tie && !bland &&
                         std::abs(tab.at(r, enter)) > std::abs(bestPivot)) ||
            (tie && bland && basis[r] < basis[leaveRow])) {
          tBest = std::min(tBest, limit);
          leaveRow = r;
          leaveState = toState;
          bestPivot = tab.at(r, enter);
        }
      }
      if (leaveRow == -1) return SimplexResult::Status::Unbounded;

      degenerateRun = tBest <= 1e-12 ? degenerateRun + 1 : 0;

      if (leaveRow == -2) {
        // Bound flip, basis unchanged.
        for (int r = 0; r < nRows; ++r)
          beta[r] -= dir * tBest * tab.at(r, enter);
        state[enter] = state[enter] == AtLower ? AtUpper : AtLower;
        continue;
      }

      // Pivot.
      const double enterVal = nbval(enter) + dir * tBest;
      for (int r = 0; r < nRows; ++r)
        if (r != leaveRow) beta[r] -= dir * tBest * tab.at(r, enter);
      const int leaving = basis[leaveRow];
      state[leaving] = leaveState;

      double* prow = tab.row(leaveRow);
      const double piv = prow[enter];
      for (int c = 0; c < nCols; ++c) prow[c] /= piv;
      prow[enter] = 1.0;
      for (int r = 0; r < nRows; ++r) {
        if (r == leaveRow) continue;
        const double f = tab.at(r, enter);
        if (f == 0.0) continue;
        double* row = tab.row(r);
        for (int c = 0; c < nCols; ++c) row[c] -= f * prow[c];
        row[enter] = 0.0;
      }
      const double fd = d[enter];
      if (fd != 0.0) {
        for (int c = 0; c < nCols; ++c) d[c] -= fd * prow[c];
        d[enter] = 0.0;
      }
      basis[leaveRow] = enter;
      state[enter] = Basic;
      beta[leaveRow] = enterVal;
    }
  };

  // Phase 1: drive artificials to zero.
  bool haveArtificials = false;
  for (int c = 0; c < nCols; ++c)
    if (artificial[c]) haveArtificials = true;
  if (haveArtificials) {
    for (int c = 0; c < nCols; ++c) phaseCost[c] = artificial[c] ? 1.0 : 0.0;
    const SimplexResult::Status st = phase_loop();
    (void)st;  // phase 1 is never unbounded: its objective is >= 0
    double infeasibility = 0.0;
    for (int r = 0; r < nRows; ++r)
      if (artificial[basis[r]]) infeasibility += beta[r];
    if (infeasibility > std::max(feasTol, 1e-7)) {
      result.status = SimplexResult::Status::Infeasible;
      return result;
    }
    // Pivot remaining artificials out where possible; fix them at zero.
    for (int r = 0; r < nRows; ++r) {
      if (!artificial[basis[r]]) continue;
      int pivotCol = -1;
      for (int c = 0; c < nCols; ++c) {
        if (artificial[c] || state[c] == Basic) continue;
        if (std::abs(tab.at(r, c)) > 1e-7) {
          pivotCol = c;
          break;
        }
      }
      if (pivotCol == -1) continue;  // redundant row; artificial stays at 0
      const int leaving = basis[r];
      state[leaving] = AtLower;
      double* prow = tab.row(r);
      const double piv = prow[pivotCol];
      for (int c = 0; c < nCols; ++c) prow[c] /= piv;
      prow[pivotCol] = 1.0;
      for (int rr = 0; rr < nRows; ++rr) {
        if (rr == r) continue;
        const double f = tab.at(rr, pivotCol);
        if (f == 0.0) continue;
        double* row = tab.row(rr);
        for (int c = 0; c < nCols; ++c) row[c] -= f * prow[c];
        row[pivotCol] = 0.0;
      }
      basis[r] = pivotCol;
      // The entering column was nonbasic at a bound and the row value is
      // zero, so the new basic value equals that bound value.
      beta[r] = nbval(pivotCol);
      state[pivotCol] = Basic;
    }
    for (int c = 0; c < nCols; ++c)
      if (artificial[c]) ub[c] = lb[c] = 0.0;
  }

  // Phase 2: the real objective.
  std::fill(phaseCost.begin(), phaseCost.end(), 0.0);
  for (int j = 0; j < nStruct; ++j) phaseCost[j] = cost[j];
  degenerateRun = 0;
  const SimplexResult::Status st = phase_loop();
  if (st == SimplexResult::Status::Unbounded) {
    result.status = st;
    return result;
  }

  // Refactorize the final basis against the original matrix to clear
  // accumulated pivot drift: solve B * beta = rhs - N * x_N.
  {
    std::vector<double> fresh(nRows);
    for (int r = 0; r < nRows; ++r) {
      double v = rhs0[r];
      const double* row = &a0[static_cast<std::size_t>(r) * nCols];
      for (int c = 0; c < nCols; ++c)
        if (state[c] != Basic && row[c] != 0.0) v -= row[c] * nbval(c);
      fresh[r] = v;
    }
    std::vector<double> bmat(static_cast<std::size_t>(nRows) * nRows);
    for (int r = 0; r < nRows; ++r)
      for (int k = 0; k < nRows; ++k)
        bmat[static_cast<std::size_t>(r) * nRows + k] =
            a0[static_cast<std::size_t>(r) * nCols + basis[k]];
    // Gaussian elimination with partial pivoting.
    std::vector<int> perm(nRows);
    bool singular = false;
    for (int k = 0; k < nRows && !singular; ++k) {
      int best = k;
      for (int r = k + 1; r < nRows; ++r)
        if (std::abs(bmat[static_cast<std::size_t>(r) * nRows + k]) >
            std::abs(bmat[static_cast<std::size_t>(best) * nRows + k]))
          best = r;
      if (std::abs(bmat[static_cast<std::size_t>(best) * nRows + k]) < 1e-12) {
        singular = true;
        break;
      }
      if (best != k) {
        for (int c = 0; c < nRows; ++c)
          std::swap(bmat[static_cast<std::size_t>(k) * nRows + c],
                    bmat[static_cast<std::size_t>(best) * nRows + c]);
        std::swap(fresh[k], fresh[best]);
      }
      for (int r = k + 1; r < nRows; ++r) {
        const double f = bmat[static_cast<std::size_t>(r) * nRows + k] /
                         bmat[static_cast<std::size_t>(k) * nRows + k];
        if (f == 0.0) continue;
        for (int c = k; c < nRows; ++c)
          bmat[static_cast<std::size_t>(r) * nRows + c] -=
              f * bmat[static_cast<std::size_t>(k) * nRows + c];
        fresh[r] -= f * fresh[k];
      }
    }
    (void)perm;
    if (!singular) {
      for (int k = nRows - 1; k >= 0; --k) {
        double v = fresh[k];
        for (int c = k + 1; c < nRows; ++c)
          v -= bmat[static_cast<std::size_t>(k) * nRows + c] * fresh[c];
        fresh[k] = v / bmat[static_cast<std::size_t>(k) * nRows + k];
      }
      for (int r = 0; r < nRows; ++r) beta[r] = fresh[r];
    }
  }

  result.status = SimplexResult::Status::Optimal;
  result.x.assign(nStruct, 0.0);
  for (int j = 0; j < nStruct; ++j) result.x[j] = nbval(j);
  for (int r = 0; r < nRows; ++r)
    if (basis[r] < nStruct) result.x[basis[r]] = beta[r];
  for (int j = 0; j < nStruct; ++j)
    result.x[j] = std::clamp(result.x[j], lower[j], upper[j]);
  result.objective = 0.0;
  for (int j = 0; j < nStruct; ++j) result.objective += cost[j] * result.x[j];
  result.basic = true;
  return result;
}

}  // namespace gvc
