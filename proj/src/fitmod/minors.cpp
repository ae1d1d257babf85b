#include <bit>
#include <cstdint>
#include <exception>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include <omp.h>

#include "fitt/errors.hpp"
#include "fitt/fitting.hpp"

namespace fitt {

namespace {

using Mask = std::uint64_t;

struct MaskPairHash {
  std::size_t operator()(const std::pair<Mask, Mask>& k) const {
    return std::hash<Mask>()(k.first) * 0x9e3779b97f4a7c15ULL ^ std::hash<Mask>()(k.second);
  }
};

/// Determinants of square submatrices, expanded along the first row and
/// memoized by (row set, column set).
class DeterminantTable {
 public:
  explicit DeterminantTable(const PolyMatrix& m) : m_(m) {}

  const Polynomial& det(Mask rows, Mask cols) {
    auto key = std::make_pair(rows, cols);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Polynomial value = expand(rows, cols);
    return memo_.emplace(key, std::move(value)).first->second;
  }

 private:
  Polynomial expand(Mask rows, Mask cols) {
    if (rows == 0) return Polynomial::from_int(m_.ring(), 1);
    std::size_t r0 = std::countr_zero(rows);
    Mask rest = rows & (rows - 1);
    Polynomial sum(m_.ring());
    bool negative = false;
    for (Mask c = cols; c != 0; c &= c - 1) {
      std::size_t col = std::countr_zero(c);
      const Polynomial& entry = m_.at(r0, col);
      if (!entry.is_zero()) {
        if (rest == 0) {
          sum = negative ? sum - entry : sum + entry;
        } else {
          const Polynomial& sub = det(rest, cols & ~(Mask{1} << col));
          if (!sub.is_zero()) sum = negative ? sum - entry * sub : sum + entry * sub;
        }
      }
      negative = !negative;
    }
    return sum;
  }

  const PolyMatrix& m_;
  std::unordered_map<std::pair<Mask, Mask>, Polynomial, MaskPairHash> memo_;
};

/// All k-subsets of {0..n-1} as bit masks, in lexicographic order of the
/// sorted index tuples.
std::vector<Mask> subsets(std::size_t n, std::size_t k) {
  std::vector<Mask> out;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    Mask m = 0;
    for (auto i : idx) m |= Mask{1} << i;
    out.push_back(m);
    std::size_t pos = k;
    while (pos > 0 && idx[pos - 1] == n - k + pos - 1) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    for (std::size_t j = pos; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

std::vector<Polynomial> prune(std::vector<Polynomial> values) {
  std::vector<Polynomial> out;
  std::unordered_set<std::string> seen;
  for (auto& v : values) {
    if (v.is_zero()) continue;
    if (seen.insert(v.to_string()).second) out.push_back(std::move(v));
  }
  return out;
}

bool trivial_case(const PolyMatrix& m, std::size_t k, std::vector<Polynomial>& out) {
  if (m.rows() > 64 || m.cols() > 64) throw StructuralError("minors are limited to 64 rows and columns");
  if (k == 0) {
    out = {Polynomial::from_int(m.ring(), 1)};
    return true;
  }
  if (k > m.rows() || k > m.cols()) {
    out.clear();
    return true;
  }
  return false;
}

}  // namespace

std::vector<Polynomial> minors_serial(const PolyMatrix& matrix, std::size_t k) {
  std::vector<Polynomial> out;
  if (trivial_case(matrix, k, out)) return out;
  auto row_sets = subsets(matrix.rows(), k);
  auto col_sets = subsets(matrix.cols(), k);
  DeterminantTable table(matrix);
  std::vector<Polynomial> values;
  values.reserve(row_sets.size() * col_sets.size());
  for (Mask rs : row_sets) {
    for (Mask cs : col_sets) values.push_back(table.det(rs, cs));
  }
  return prune(std::move(values));
}

std::vector<Polynomial> minors(const PolyMatrix& matrix, std::size_t k) {
  std::vector<Polynomial> out;
  if (trivial_case(matrix, k, out)) return out;
  auto row_sets = subsets(matrix.rows(), k);
  auto col_sets = subsets(matrix.cols(), k);
  std::vector<std::vector<Polynomial>> per_row(row_sets.size());
  std::exception_ptr failure;

#pragma omp parallel
  {
    // Memo tables are thread-local; threads never share polynomials.
    DeterminantTable table(matrix);
#pragma omp for schedule(dynamic)
    for (std::ptrdiff_t r = 0; r < static_cast<std::ptrdiff_t>(row_sets.size()); ++r) {
      try {
        auto& slot = per_row[r];
        slot.reserve(col_sets.size());
        for (Mask cs : col_sets) slot.push_back(table.det(row_sets[r], cs));
      } catch (...) {
#pragma omp critical(fitt_minors_failure)
        if (!failure) failure = std::current_exception();
      }
    }
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<Polynomial> values;
  values.reserve(row_sets.size() * col_sets.size());
  for (auto& slot : per_row) {
    for (auto& v : slot) values.push_back(std::move(v));
  }
  return prune(std::move(values));
}

}  // namespace fitt
