#include "skein/linalg.hpp"

namespace skein {

KernelResult<RatFunc> kernel_and_rank_over_ratfunc(const Matrix<RatFunc>& m) {
  const std::size_t cols = m.empty() ? 0 : m.front().size();
  return kernel_and_rank(m, cols);
}

bool SparseRank::insert(Row row) {
  while (!row.empty()) {
    auto lead = row.begin();
    const std::size_t col = lead->first;
    auto pivot = pivots_.find(col);
    if (pivot == pivots_.end()) {
      const RatFunc inv = lead->second.inverse();
      for (auto& [c, v] : row) v *= inv;
      pivots_.emplace(col, std::move(row));
      return true;
    }
    const RatFunc factor = lead->second;
    for (const auto& [c, v] : pivot->second) {
      auto it = row.find(c);
      RatFunc delta = factor * v;
      if (it == row.end()) {
        row.emplace(c, -delta);
      } else {
        it->second -= delta;
        if (it->second.is_zero()) row.erase(it);
      }
    }
  }
  return false;
}

}  // namespace skein
