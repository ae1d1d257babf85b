#include "fitt/field.hpp"

#include <cctype>
#include <limits>

#include "fitt/errors.hpp"

namespace fitt {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::uint64_t reduce_mpz(const mpz_class& value, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), value.get_mpz_t(), p);
  return r.get_ui();
}

}  // namespace

// Deterministic Miller-Rabin; these witnesses cover every 64-bit integer.
bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int twos = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++twos;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < twos; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p > (std::numeric_limits<std::uint64_t>::max() >> 1)) {
    throw ValidationError("characteristic " + std::to_string(p) + " does not fit a machine word");
  }
  if (!is_prime(p)) throw ValidationError("characteristic " + std::to_string(p) + " is not prime");
  return Field(p);
}

Coeff Field::zero() const { return is_prime_field() ? Coeff(std::uint64_t{0}) : Coeff(mpq_class(0)); }

Coeff Field::one() const { return is_prime_field() ? Coeff(std::uint64_t{1}) : Coeff(mpq_class(1)); }

Coeff Field::from_int(long long value) const {
  if (!is_prime_field()) return Coeff(mpq_class(static_cast<long>(value)));
  auto p = static_cast<long long>(p_);
  long long r = value % p;
  if (r < 0) r += p;
  return Coeff(static_cast<std::uint64_t>(r));
}

Coeff Field::from_integer(const mpz_class& value) const {
  if (!is_prime_field()) return Coeff(mpq_class(value));
  return Coeff(reduce_mpz(value, p_));
}

Coeff Field::from_fraction(const mpz_class& num, const mpz_class& den) const {
  if (!is_prime_field()) {
    if (den == 0) throw DivisionByZero();
    mpq_class q(num, den);
    q.canonicalize();
    return Coeff(std::move(q));
  }
  return div(from_integer(num), from_integer(den));
}

bool Field::is_zero(const Coeff& a) const {
  return is_prime_field() ? a.residue() == 0 : sgn(a.rational()) == 0;
}

bool Field::is_one(const Coeff& a) const {
  return is_prime_field() ? a.residue() == 1 : a.rational() == 1;
}

Coeff Field::add(const Coeff& a, const Coeff& b) const {
  if (!is_prime_field()) return Coeff(mpq_class(a.rational() + b.rational()));
  std::uint64_t s = a.residue() + b.residue();
  return Coeff(s >= p_ ? s - p_ : s);
}

Coeff Field::sub(const Coeff& a, const Coeff& b) const {
  if (!is_prime_field()) return Coeff(mpq_class(a.rational() - b.rational()));
  return Coeff(a.residue() >= b.residue() ? a.residue() - b.residue() : a.residue() + (p_ - b.residue()));
}

Coeff Field::mul(const Coeff& a, const Coeff& b) const {
  if (!is_prime_field()) return Coeff(mpq_class(a.rational() * b.rational()));
  return Coeff(mul_mod(a.residue(), b.residue(), p_));
}

Coeff Field::neg(const Coeff& a) const {
  if (!is_prime_field()) return Coeff(mpq_class(-a.rational()));
  return Coeff(a.residue() == 0 ? 0 : p_ - a.residue());
}

Coeff Field::inverse(const Coeff& a) const {
  if (is_zero(a)) throw DivisionByZero();
  if (!is_prime_field()) return Coeff(mpq_class(1 / a.rational()));
  return Coeff(pow_mod(a.residue(), p_ - 2, p_));
}

bool Field::is_negative(const Coeff& a) const {
  if (!is_prime_field()) return sgn(a.rational()) < 0;
  return a.residue() > p_ / 2;
}

std::string Field::to_string(const Coeff& a) const {
  if (!is_prime_field()) return a.rational().get_str();
  if (is_negative(a)) return "-" + std::to_string(p_ - a.residue());
  return std::to_string(a.residue());
}

std::string Field::describe() const {
  return is_prime_field() ? "p=" + std::to_string(p_) : std::string("rationals");
}

Field parse_field(const std::string& text) {
  if (text == "rationals" || text == "QQ" || text == "0" || text == "p=0") return Field::rationals();
  std::string digits = text.rfind("p=", 0) == 0 ? text.substr(2) : text;
  if (digits.empty() || digits.size() > 19) throw ValidationError("bad field spec '" + text + "'");
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) throw ValidationError("bad field spec '" + text + "'");
  }
  return Field::prime(std::stoull(digits));
}

}  // namespace fitt
