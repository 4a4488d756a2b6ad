#include "labcount/linalg.hpp"

#include "labcount/errors.hpp"

#include <cstddef>

namespace labcount {

namespace {

// Reduced row echelon form in place; returns pivot column per pivot row.
std::vector<int> rref(RatMatrix& m, int cols) {
  std::vector<int> pivots;
  std::size_t row = 0;
  for (int col = 0; col < cols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][static_cast<std::size_t>(col)] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    Rat inv = m[row][static_cast<std::size_t>(col)];
    for (int j = 0; j < cols; ++j) m[row][static_cast<std::size_t>(j)] /= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row) continue;
      Rat f = m[i][static_cast<std::size_t>(col)];
      if (f == 0) continue;
      for (int j = 0; j < cols; ++j)
        m[i][static_cast<std::size_t>(j)] -= f * m[row][static_cast<std::size_t>(j)];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int matrix_rank(RatMatrix m) {
  if (m.empty()) return 0;
  int cols = static_cast<int>(m[0].size());
  return static_cast<int>(rref(m, cols).size());
}

std::vector<RatRow> nullspace(const RatMatrix& m, int cols) {
  RatMatrix work = m;
  for (auto& row : work)
    if (static_cast<int>(row.size()) != cols) throw usage_error("inconsistent row width");
  auto pivots = rref(work, cols);

  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;

  std::vector<RatRow> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    RatRow v(static_cast<std::size_t>(cols), Rat(0));
    v[static_cast<std::size_t>(free)] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[static_cast<std::size_t>(pivots[r])] = -work[r][static_cast<std::size_t>(free)];
    basis.push_back(std::move(v));
  }
  return basis;
}

Rat dot(const RatRow& a, const RatRow& b) {
  Rat s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RatRow solve_square(RatMatrix a, RatRow rhs) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) a[i].push_back(rhs[i]);
  auto pivots = rref(a, static_cast<int>(n) + 1);
  if (pivots.size() != n || (!pivots.empty() && pivots.back() == static_cast<int>(n)))
    throw usage_error("singular system");
  RatRow x(n, Rat(0));
  for (std::size_t r = 0; r < n; ++r) x[static_cast<std::size_t>(pivots[r])] = a[r][n];
  return x;
}

}  // namespace labcount
