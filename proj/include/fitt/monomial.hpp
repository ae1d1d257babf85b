#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace fitt {

/// Dense exponent vector over the ring's variable list; index i holds the
/// exponent of variable i (0 when absent). Exponents stay within 2^31-1.
class Monomial {
 public:
  static constexpr std::uint32_t kMaxExponent = 0x7fffffffU;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  /// Throws OverflowError if an exponent exceeds kMaxExponent.
  explicit Monomial(std::span<const std::uint32_t> exps);

  static Monomial variable(std::size_t nvars, std::size_t index, std::uint32_t power = 1);

  std::size_t size() const { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  std::uint64_t degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  /// Checked product; throws OverflowError instead of wrapping.
  Monomial operator*(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  /// Requires divides(other): returns other / *this.
  Monomial quotient_of(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  Monomial pow(std::uint64_t k) const;

  /// Returns a copy with exponent at index i replaced.
  Monomial with_exponent(std::size_t i, std::uint32_t e) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

  std::size_t hash() const;

 private:
  boost::container::small_vector<std::uint32_t, 12> exps_;
  std::uint64_t degree_ = 0;
};

/// A monomial order on a ring with a fixed number of variables.
class MonomialOrder {
 public:
  enum class Kind { lex, grevlex, block };

  static MonomialOrder lex() { return MonomialOrder(Kind::lex, {}, Kind::lex); }
  static MonomialOrder grevlex() { return MonomialOrder(Kind::grevlex, {}, Kind::grevlex); }
  /// Elimination order: monomials are compared on the block variables first
  /// (with `inner`), then on the remaining variables (with `inner`).
  static MonomialOrder block(std::vector<std::size_t> block_vars, Kind inner = Kind::grevlex);

  Kind kind() const { return kind_; }
  Kind inner() const { return inner_; }
  const std::vector<std::size_t>& block_vars() const { return block_; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  std::string describe() const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  MonomialOrder(Kind kind, std::vector<std::size_t> block, Kind inner)
      : kind_(kind), inner_(inner), block_(std::move(block)) {}

  Kind kind_;
  Kind inner_;
  std::vector<std::size_t> block_;  // sorted, unique
};

}  // namespace fitt
