#pragma once

// Merging primitives on term vectors kept in strictly descending order under
// some monomial comparison. Shared by Polynomial (canonical grevlex storage)
// and the Groebner engine (which sorts by the requested order).

#include <algorithm>
#include <span>
#include <vector>

#include "fitt/field.hpp"
#include "fitt/monomial.hpp"

namespace fitt {

struct Term {
  Monomial mono;
  Coeff coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

namespace detail {

/// a + c * m * b, dropping cancelled terms. `cmp(x, y)` returns the
/// std::strong_ordering of monomials x and y.
template <typename Cmp>
std::vector<Term> axpy(std::span<const Term> a, const Coeff& c, const Monomial& m, std::span<const Term> b,
                       const Field& field, Cmp cmp) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  const bool shift = !m.is_one();
  std::size_t i = 0;
  for (const auto& bt : b) {
    Monomial bm = shift ? bt.mono * m : bt.mono;
    while (i < a.size() && cmp(a[i].mono, bm) > 0) out.push_back(a[i++]);
    if (i < a.size() && cmp(a[i].mono, bm) == 0) {
      Coeff sum = field.add(a[i].coeff, field.mul(c, bt.coeff));
      if (!field.is_zero(sum)) out.push_back(Term{std::move(bm), std::move(sum)});
      ++i;
    } else {
      out.push_back(Term{std::move(bm), field.mul(c, bt.coeff)});
    }
  }
  while (i < a.size()) out.push_back(a[i++]);
  return out;
}

/// Sorts descending and combines like terms; zero coefficients are dropped.
template <typename Cmp>
void normalize(std::vector<Term>& terms, const Field& field, Cmp cmp) {
  std::sort(terms.begin(), terms.end(), [&](const Term& x, const Term& y) { return cmp(x.mono, y.mono) > 0; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff = field.add(out.back().coeff, t.coeff);
    } else {
      if (!out.empty() && field.is_zero(out.back().coeff)) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && field.is_zero(out.back().coeff)) out.pop_back();
  terms = std::move(out);
}

}  // namespace detail
}  // namespace fitt
