#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace fitt {

/// An element of a CoefficientField. Prime-field elements are stored as
/// residues in [0, p); rationals as GMP fractions in lowest terms. Only the
/// owning Field knows how to combine them.
class Coeff {
 public:
  Coeff() = default;
  explicit Coeff(std::uint64_t residue) : value_(residue) {}
  explicit Coeff(mpq_class q) : value_(std::move(q)) {}

  bool is_residue() const { return value_.index() == 0; }
  std::uint64_t residue() const { return std::get<0>(value_); }
  const mpq_class& rational() const { return std::get<1>(value_); }

  friend bool operator==(const Coeff& a, const Coeff& b) { return a.value_ == b.value_; }

 private:
  std::variant<std::uint64_t, mpq_class> value_{std::uint64_t{0}};
};

/// The ground field: F_p for a word-sized prime p, or the rationals.
class Field {
 public:
  /// Throws ValidationError unless p is prime and below 2^63.
  static Field prime(std::uint64_t p);
  static Field rationals() { return Field(0); }

  bool is_prime_field() const { return p_ != 0; }
  std::uint64_t characteristic() const { return p_; }

  Coeff zero() const;
  Coeff one() const;
  Coeff from_int(long long value) const;
  Coeff from_integer(const mpz_class& value) const;
  /// Throws DivisionByZero when den vanishes in the field.
  Coeff from_fraction(const mpz_class& num, const mpz_class& den) const;

  bool is_zero(const Coeff& a) const;
  bool is_one(const Coeff& a) const;

  Coeff add(const Coeff& a, const Coeff& b) const;
  Coeff sub(const Coeff& a, const Coeff& b) const;
  Coeff mul(const Coeff& a, const Coeff& b) const;
  Coeff neg(const Coeff& a) const;
  Coeff inverse(const Coeff& a) const;
  Coeff div(const Coeff& a, const Coeff& b) const { return mul(a, inverse(b)); }

  /// True when the printed form needs a leading minus: negative rationals,
  /// residues above p/2 (printed symmetrically).
  bool is_negative(const Coeff& a) const;
  /// Decimal form of the element, symmetric for residues ("-1" for p-1).
  std::string to_string(const Coeff& a) const;
  /// "p=7" or "rationals".
  std::string describe() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;
};

bool is_prime(std::uint64_t n);

/// Parses "p=2", "2", "rationals" or "QQ".
Field parse_field(const std::string& text);

}  // namespace fitt
