#pragma once

// Shared helpers for the unit tests, plus brute-force reference
// computations that do not go through the library's algorithms.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "fitt/errors.hpp"
#include "fitt/kaehler.hpp"
#include "fitt/parse.hpp"
#include "fitt/verify.hpp"

namespace testing_support {

using namespace fitt;

inline RingPtr ring(const Field& field, const std::string& vars) { return make_ring(field, split_names(vars)); }
inline RingPtr qq(const std::string& vars) { return ring(Field::rationals(), vars); }
inline RingPtr fp(std::uint64_t p, const std::string& vars) { return ring(Field::prime(p), vars); }

inline Polynomial P(const RingPtr& r, const std::string& text) { return parse_polynomial(text, r); }
inline Ideal I(const RingPtr& r, const std::string& gens) { return Ideal(r, parse_polynomial_list(gens, r)); }

// --- oracles ---------------------------------------------------------------

/// Inverse modulo p by trying every residue.
inline std::uint64_t brute_inverse(std::uint64_t a, std::uint64_t p) {
  for (std::uint64_t b = 1; b < p; ++b) {
    if ((a * b) % p == 1) return b;
  }
  return 0;
}

/// Integer polynomial keyed by exponent vector, reduced mod p at the end.
using Dense = std::map<std::vector<std::uint32_t>, long long>;

inline Dense dense_mul(const Dense& a, const Dense& b) {
  Dense out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      std::vector<std::uint32_t> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out[e] += ca * cb;
    }
  }
  return out;
}

inline Polynomial from_dense(const RingPtr& r, const Dense& d) {
  std::vector<Term> terms;
  for (const auto& [e, c] : d) terms.push_back(Term{Monomial(e), r->field().from_int(c)});
  return Polynomial::from_terms(r, std::move(terms));
}

/// Reference grevlex: higher degree wins; on a tie, the monomial with the
/// smaller exponent in the last differing variable wins.
inline bool grevlex_greater(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  auto da = std::accumulate(a.begin(), a.end(), 0ULL);
  auto db = std::accumulate(b.begin(), b.end(), 0ULL);
  if (da != db) return da > db;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

inline bool lex_greater(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

/// Determinant by the permutation expansion.
inline Polynomial leibniz_det(const PolyMatrix& m, const std::vector<std::size_t>& rows,
                              const std::vector<std::size_t>& cols) {
  std::vector<std::size_t> perm(cols.size());
  std::iota(perm.begin(), perm.end(), 0);
  Polynomial det(m.ring());
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
      for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j];
    }
    Polynomial term = Polynomial::from_int(m.ring(), inversions % 2 ? -1 : 1);
    for (std::size_t i = 0; i < rows.size(); ++i) term = term * m.at(rows[i], cols[perm[i]]);
    det = det + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(std::min(k, n)), true);
  if (k > n) return out;
  do {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i) {
      if (pick[i]) s.push_back(i);
    }
    out.push_back(s);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

/// Every k x k minor via the permutation expansion, zeros included.
inline std::vector<Polynomial> brute_minors(const PolyMatrix& m, std::size_t k) {
  std::vector<Polynomial> out;
  for (const auto& rows : subsets(m.rows(), k)) {
    for (const auto& cols : subsets(m.cols(), k)) out.push_back(leibniz_det(m, rows, cols));
  }
  return out;
}

/// True when `combo` equals sum cofactors[i] * gens[i] — an explicit
/// membership certificate checked by plain arithmetic.
inline bool certifies(const Polynomial& combo, const std::vector<Polynomial>& cofactors,
                      const std::vector<Polynomial>& gens) {
  Polynomial sum(combo.ring());
  for (std::size_t i = 0; i < gens.size(); ++i) sum = sum + cofactors[i] * gens[i];
  return sum == combo;
}

}  // namespace testing_support
