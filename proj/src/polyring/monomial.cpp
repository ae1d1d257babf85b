#include "fitt/monomial.hpp"

#include <algorithm>

#include "fitt/errors.hpp"

namespace fitt {

namespace {

std::uint32_t checked_exponent(std::uint64_t e) {
  if (e > Monomial::kMaxExponent) throw OverflowError("exponent " + std::to_string(e) + " exceeds 2^31-1");
  return static_cast<std::uint32_t>(e);
}

template <typename Pred>
std::strong_ordering compare_lex(const Monomial& a, const Monomial& b, Pred in_scope) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!in_scope(i)) continue;
    if (a[i] != b[i]) return a[i] <=> b[i];
  }
  return std::strong_ordering::equal;
}

template <typename Pred>
std::strong_ordering compare_grevlex(const Monomial& a, const Monomial& b, Pred in_scope) {
  std::uint64_t da = 0;
  std::uint64_t db = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!in_scope(i)) continue;
    da += a[i];
    db += b[i];
  }
  if (da != db) return da <=> db;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (!in_scope(i)) continue;
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

template <typename Pred>
std::strong_ordering compare_with(MonomialOrder::Kind kind, const Monomial& a, const Monomial& b, Pred in_scope) {
  return kind == MonomialOrder::Kind::lex ? compare_lex(a, b, in_scope) : compare_grevlex(a, b, in_scope);
}

}  // namespace

Monomial::Monomial(std::span<const std::uint32_t> exps) : exps_(exps.begin(), exps.end()) {
  for (auto e : exps_) degree_ += checked_exponent(e);
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, std::uint32_t power) {
  Monomial m(nvars);
  m.exps_.at(index) = checked_exponent(power);
  m.degree_ = power;
  return m;
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (size() != other.size()) throw StructuralError("monomials from different rings");
  Monomial out(size());
  for (std::size_t i = 0; i < size(); ++i) {
    out.exps_[i] = checked_exponent(std::uint64_t{exps_[i]} + other.exps_[i]);
  }
  out.degree_ = degree_ + other.degree_;
  return out;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial out(size());
  for (std::size_t i = 0; i < size(); ++i) out.exps_[i] = other.exps_[i] - exps_[i];
  out.degree_ = other.degree_ - degree_;
  return out;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial out(size());
  for (std::size_t i = 0; i < size(); ++i) {
    out.exps_[i] = std::max(exps_[i], other.exps_[i]);
    out.degree_ += out.exps_[i];
  }
  return out;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < size(); ++i) {
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  }
  return true;
}

Monomial Monomial::pow(std::uint64_t k) const {
  Monomial out(size());
  for (std::size_t i = 0; i < size(); ++i) {
    if (exps_[i] != 0 && k > kMaxExponent) throw OverflowError("exponent overflow in power");
    out.exps_[i] = checked_exponent(std::uint64_t{exps_[i]} * k);
    out.degree_ += out.exps_[i];
  }
  return out;
}

Monomial Monomial::with_exponent(std::size_t i, std::uint32_t e) const {
  Monomial out = *this;
  out.degree_ = degree_ - exps_.at(i) + checked_exponent(e);
  out.exps_[i] = e;
  return out;
}

std::size_t Monomial::hash() const {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (auto e : exps_) h = (h ^ e) * 0x100000001b3ULL;
  return h;
}

MonomialOrder MonomialOrder::block(std::vector<std::size_t> block_vars, Kind inner) {
  if (inner == Kind::block) throw StructuralError("block order needs lex or grevlex inside the blocks");
  std::sort(block_vars.begin(), block_vars.end());
  block_vars.erase(std::unique(block_vars.begin(), block_vars.end()), block_vars.end());
  return MonomialOrder(Kind::block, std::move(block_vars), inner);
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case Kind::lex:
      return compare_lex(a, b, [](std::size_t) { return true; });
    case Kind::grevlex:
      if (a.degree() != b.degree()) return a.degree() <=> b.degree();
      return compare_grevlex(a, b, [](std::size_t) { return true; });
    case Kind::block: {
      auto in_block = [this](std::size_t i) { return std::binary_search(block_.begin(), block_.end(), i); };
      auto c = compare_with(inner_, a, b, in_block);
      if (c != 0) return c;
      return compare_with(inner_, a, b, [&](std::size_t i) { return !in_block(i); });
    }
  }
  return std::strong_ordering::equal;
}

std::string MonomialOrder::describe() const {
  auto name = [](Kind k) { return k == Kind::lex ? std::string("lex") : std::string("grevlex"); };
  if (kind_ != Kind::block) return name(kind_);
  std::string out = "block(";
  for (std::size_t i = 0; i < block_.size(); ++i) out += (i ? "," : "") + std::to_string(block_[i]);
  return out + ";" + name(inner_) + ")";
}

}  // namespace fitt
