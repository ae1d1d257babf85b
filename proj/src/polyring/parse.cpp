#include "fitt/parse.hpp"

#include <cctype>

#include "fitt/errors.hpp"

namespace fitt {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const RingPtr& ring) : text_(text), ring_(ring), field_(ring->field()) {}

  Polynomial parse() {
    std::vector<Term> terms;
    skip_ws();
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    terms.push_back(parse_term(negative));
    for (;;) {
      skip_ws();
      if (at_end()) break;
      char c = peek();
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      ++pos_;
      terms.push_back(parse_term(c == '-'));
    }
    return Polynomial::from_terms(ring_, std::move(terms));
  }

 private:
  Term parse_term(bool negative) {
    skip_ws();
    Coeff coeff = field_.one();
    Monomial mono(ring_->nvars());
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = parse_coeff();
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        mono = parse_monom();
      }
    } else {
      mono = parse_monom();
    }
    if (negative) coeff = field_.neg(coeff);
    return Term{std::move(mono), std::move(coeff)};
  }

  Coeff parse_coeff() {
    mpz_class num = parse_uint();
    skip_ws();
    if (peek() != '/') return field_.from_integer(num);
    ++pos_;
    skip_ws();
    std::size_t at = pos_;
    mpz_class den = parse_uint();
    if (den == 0) throw ParseError("zero denominator", at);
    if (field_.is_prime_field() && den % field_.characteristic() == 0) {
      throw ParseError("denominator not invertible in " + field_.describe(), at);
    }
    return field_.from_fraction(num, den);
  }

  Monomial parse_monom() {
    Monomial mono = parse_factor();
    for (;;) {
      skip_ws();
      if (peek() != '*') return mono;
      ++pos_;
      mono = mono * parse_factor();
    }
  }

  Monomial parse_factor() {
    skip_ws();
    std::size_t start = pos_;
    if (!std::isalpha(static_cast<unsigned char>(peek()))) fail("expected a variable");
    while (std::isalnum(static_cast<unsigned char>(peek()))) ++pos_;
    std::string_view name = text_.substr(start, pos_ - start);
    auto index = ring_->index_of(name);
    if (!index) throw ParseError("unknown variable '" + std::string(name) + "'", start);
    std::uint32_t power = 1;
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      std::size_t at = pos_;
      mpz_class e = parse_uint();
      if (e > Monomial::kMaxExponent) throw ParseError("exponent exceeds 2^31-1", at);
      power = static_cast<std::uint32_t>(e.get_ui());
    }
    return Monomial::variable(ring_->nvars(), *index, power);
  }

  mpz_class parse_uint() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  std::string_view text_;
  const RingPtr& ring_;
  const Field& field_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) { return Parser(text, ring).parse(); }

std::vector<Polynomial> parse_polynomial_list(std::string_view text, const RingPtr& ring) {
  std::vector<Polynomial> out;
  bool blank = true;
  for (char c : text) blank = blank && std::isspace(static_cast<unsigned char>(c));
  if (blank) return out;
  std::size_t start = 0;
  for (;;) {
    std::size_t comma = text.find(',', start);
    std::string_view piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    try {
      out.push_back(parse_polynomial(piece, ring));
    } catch (const ParseError& e) {
      throw ParseError("generator " + std::to_string(out.size() + 1) + ": " + e.message(), start + e.position());
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace fitt
