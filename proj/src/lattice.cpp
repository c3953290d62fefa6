#include "pgst/lattice.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>

namespace pgst {

namespace {

// Zero rows[i][c] against the pivot row using a unimodular 2x2 combination:
// (g, x, y) = xgcd(a, b) gives new_pivot = x*pivot + y*row and
// new_row = (-b/g)*pivot + (a/g)*row, whose determinant is 1.
void eliminate_entry(IntVec& pivot_row, IntVec& row, std::size_t c) {
  const mpz_class& a = pivot_row[c];
  const mpz_class& b = row[c];
  if (b == 0) return;
  if (a == 0) {
    std::swap(pivot_row, row);
    return;
  }
  if (b % a == 0) {
    const mpz_class q = b / a;
    for (std::size_t j = 0; j < row.size(); ++j) row[j] -= q * pivot_row[j];
    return;
  }
  mpz_class g, x, y;
  mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(),
             b.get_mpz_t());
  const mpz_class p_over = a / g;
  const mpz_class q_over = b / g;
  for (std::size_t j = 0; j < row.size(); ++j) {
    const mpz_class np = x * pivot_row[j] + y * row[j];
    const mpz_class nq = -q_over * pivot_row[j] + p_over * row[j];
    pivot_row[j] = np;
    row[j] = nq;
  }
}

// In-place row echelon over Z restricted to columns [0, limit): returns the
// number of pivot rows.  When canonical is set, pivots are made positive and
// entries above each pivot are reduced into [0, pivot).
std::size_t echelonize(IntMat& rows, std::size_t limit, bool canonical) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < limit && r < rows.size(); ++c) {
    for (std::size_t i = r + 1; i < rows.size(); ++i)
      eliminate_entry(rows[r], rows[i], c);
    if (rows[r][c] == 0) continue;
    if (canonical) {
      if (rows[r][c] < 0)
        for (auto& e : rows[r]) e = -e;
      for (std::size_t i = 0; i < r; ++i) {
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(),
                   rows[r][c].get_mpz_t());
        if (q != 0)
          for (std::size_t j = 0; j < rows[i].size(); ++j)
            rows[i][j] -= q * rows[r][j];
      }
    }
    ++r;
  }
  return r;
}

IntVec clear_denominators(const RatVec& row) {
  mpz_class l = 1;
  for (const auto& e : row) l = lcm(l, e.get_den());
  IntVec out(row.size());
  for (std::size_t j = 0; j < row.size(); ++j) {
    mpq_class scaled = row[j] * mpq_class(l);
    scaled.canonicalize();
    out[j] = scaled.get_num();
  }
  return out;
}

}  // namespace

IntMat hermite_normal_form(IntMat rows) {
  if (rows.empty()) return rows;
  const std::size_t n = rows[0].size();
  const std::size_t rank = echelonize(rows, n, /*canonical=*/true);
  rows.resize(rank);
  return rows;
}

IntMat integer_kernel(const IntMat& m, std::size_t cols) {
  const std::size_t nrows = m.size();
  for (const auto& row : m)
    if (row.size() != cols)
      throw std::logic_error("integer_kernel: ragged constraint matrix");
  // Stack [M^T | I]: integer row operations preserve the meaning "A-part =
  // M * (I-part combination)", so rows whose A-part vanishes carry kernel
  // vectors in their I-part, and unimodularity makes the set saturated.
  IntMat stacked(cols, IntVec(nrows + cols, 0));
  for (std::size_t j = 0; j < cols; ++j) {
    for (std::size_t i = 0; i < nrows; ++i) stacked[j][i] = m[i][j];
    stacked[j][nrows + j] = 1;
  }
  const std::size_t rank = echelonize(stacked, nrows, /*canonical=*/true);
  IntMat kernel;
  kernel.reserve(cols - rank);
  for (std::size_t i = rank; i < cols; ++i)
    kernel.emplace_back(stacked[i].begin() + static_cast<long>(nrows),
                        stacked[i].end());
  return hermite_normal_form(std::move(kernel));
}

IntMat integer_kernel(const RatMat& m, std::size_t cols) {
  IntMat cleared;
  cleared.reserve(m.size());
  for (const auto& row : m) cleared.push_back(clear_denominators(row));
  return integer_kernel(cleared, cols);
}

bool in_lattice(const IntVec& v, const IntMat& hnf_basis) {
  IntVec w = v;
  for (const auto& row : hnf_basis) {
    if (row.size() != w.size())
      throw std::logic_error("in_lattice: dimension mismatch");
    std::size_t c = 0;
    while (c < row.size() && row[c] == 0) ++c;
    if (c == row.size()) continue;
    if (w[c] % row[c] != 0) return false;
    const mpz_class q = w[c] / row[c];
    if (q != 0)
      for (std::size_t j = c; j < w.size(); ++j) w[j] -= q * row[j];
  }
  for (const auto& e : w)
    if (e != 0) return false;
  return true;
}

std::vector<std::size_t> independent_rows(const RatMat& m) {
  std::vector<std::size_t> picked;
  RatMat echelon;                     // reduced rows, pivot-normalized
  std::vector<std::size_t> pivots;    // pivot column of each echelon row
  for (std::size_t i = 0; i < m.size(); ++i) {
    RatVec row = m[i];
    for (std::size_t k = 0; k < echelon.size(); ++k) {
      const mpq_class f = row[pivots[k]];
      if (f != 0)
        for (std::size_t j = pivots[k]; j < row.size(); ++j)
          row[j] -= f * echelon[k][j];
    }
    std::size_t c = 0;
    while (c < row.size() && row[c] == 0) ++c;
    if (c == row.size()) continue;
    const mpq_class inv = row[c];
    for (std::size_t j = c; j < row.size(); ++j) row[j] /= inv;
    picked.push_back(i);
    echelon.push_back(std::move(row));
    pivots.push_back(c);
  }
  return picked;
}

}  // namespace pgst
