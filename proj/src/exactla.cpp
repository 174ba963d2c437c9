#include "arcalg/exactla.hpp"

namespace arcalg {

RMat rmat(std::size_t rows, std::size_t cols) { return RMat(rows, RVec(cols)); }

std::vector<std::size_t> rref(RMat& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    Rational inv = Rational(1) / m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      Rational f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(RMat m) { return rref(m).size(); }

std::vector<RVec> nullspace(const RMat& m) {
  std::vector<RVec> basis;
  if (m.empty()) return basis;
  std::size_t cols = m[0].size();
  RMat e = m;
  std::vector<std::size_t> pivots = rref(e);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RVec v(cols);
    v[free] = Rational(1);
    for (std::size_t pr = 0; pr < pivots.size(); ++pr) v[pivots[pr]] = -e[pr][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

bool solve(const RMat& m, const RVec& b, RVec& x) {
  std::size_t rows = m.size();
  std::size_t cols = rows == 0 ? 0 : m[0].size();
  RMat aug = rmat(rows, cols + 1);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) aug[i][j] = m[i][j];
    aug[i][cols] = b[i];
  }
  std::vector<std::size_t> pivots = rref(aug);
  x.assign(cols, Rational());
  for (std::size_t pr = 0; pr < pivots.size(); ++pr) {
    if (pivots[pr] == cols) return false;  // pivot in the augmented column
    x[pivots[pr]] = aug[pr][cols];
  }
  return true;
}

}  // namespace arcalg
