#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "fitt/detail/term_ops.hpp"
#include "fitt/ring.hpp"

namespace fitt {

/// Sparse polynomial over a Ring. Terms are stored in strictly descending
/// grevlex order with nonzero coefficients, so equal polynomials have equal
/// term vectors. Values are immutable once built.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, const Coeff& c);
  static Polynomial from_int(RingPtr ring, long long value);
  static Polynomial variable(RingPtr ring, std::size_t index, std::uint32_t power = 1);
  static Polynomial variable(RingPtr ring, std::string_view name, std::uint32_t power = 1);
  static Polynomial term(RingPtr ring, Monomial mono, Coeff coeff);
  /// Accepts terms in any order, with repeats and zeros.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const Field& field() const { return ring_->field(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.front().mono.is_one()); }
  /// Nonzero constant.
  bool is_unit() const { return terms_.size() == 1 && terms_.front().mono.is_one(); }

  std::uint64_t total_degree() const;
  bool uses_variable(std::size_t index) const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator-(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator*(const Polynomial& f, const Polynomial& g);
  Polynomial scale(const Coeff& c) const;
  Polynomial pow(std::uint64_t k) const;

  /// Formal partial derivative; exponents divisible by the characteristic
  /// contribute zero.
  Polynomial derivative(std::size_t var) const;

  /// Re-expresses the polynomial in `target`, matching variables by name.
  /// Throws StructuralError if a used variable is missing there.
  Polynomial map_to(const RingPtr& target) const;
  /// Ring map sending variable i to images[i] (all in one target ring).
  Polynomial substitute(const std::vector<Polynomial>& images) const;

  /// Terms in descending grevlex order, e.g. "x1^2*T2 - x2*T1".
  std::string to_string() const;
  /// Terms in descending order under `order`.
  std::string to_string(const MonomialOrder& order) const;

  friend bool operator==(const Polynomial& f, const Polynomial& g);

 private:
  Polynomial(RingPtr ring, std::vector<Term> sorted) : ring_(std::move(ring)), terms_(std::move(sorted)) {}

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// grevlex comparison used for canonical storage.
std::strong_ordering storage_compare(const Monomial& a, const Monomial& b);

std::string monomial_to_string(const Monomial& m, const Ring& ring);

}  // namespace fitt
