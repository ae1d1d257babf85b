#include "fitt/polynomial.hpp"

#include <algorithm>

#include "fitt/errors.hpp"

namespace fitt {

std::strong_ordering storage_compare(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

Polynomial Polynomial::constant(RingPtr ring, const Coeff& c) {
  if (ring->field().is_zero(c)) return Polynomial(std::move(ring));
  std::vector<Term> terms{Term{Monomial(ring->nvars()), c}};
  return Polynomial(std::move(ring), std::move(terms));
}

Polynomial Polynomial::from_int(RingPtr ring, long long value) {
  Coeff c = ring->field().from_int(value);
  return constant(std::move(ring), c);
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index, std::uint32_t power) {
  if (index >= ring->nvars()) throw StructuralError("variable index out of range");
  Monomial m = Monomial::variable(ring->nvars(), index, power);
  Coeff one = ring->field().one();
  return Polynomial(ring, {Term{std::move(m), std::move(one)}});
}

Polynomial Polynomial::variable(RingPtr ring, std::string_view name, std::uint32_t power) {
  std::size_t index = ring->require_index(name);
  return variable(std::move(ring), index, power);
}

Polynomial Polynomial::term(RingPtr ring, Monomial mono, Coeff coeff) {
  if (mono.size() != ring->nvars()) throw StructuralError("monomial does not match ring");
  if (ring->field().is_zero(coeff)) return Polynomial(std::move(ring));
  return Polynomial(std::move(ring), {Term{std::move(mono), std::move(coeff)}});
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  for (const auto& t : terms) {
    if (t.mono.size() != ring->nvars()) throw StructuralError("monomial does not match ring");
  }
  detail::normalize(terms, ring->field(), storage_compare);
  return Polynomial(std::move(ring), std::move(terms));
}

std::uint64_t Polynomial::total_degree() const { return terms_.empty() ? 0 : terms_.front().mono.degree(); }

bool Polynomial::uses_variable(std::size_t index) const {
  for (const auto& t : terms_) {
    if (t.mono[index] != 0) return true;
  }
  return false;
}

Polynomial Polynomial::operator-() const { return scale(field().neg(field().one())); }

Polynomial operator+(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f.ring_, g.ring_);
  const Field& k = f.field();
  return Polynomial(f.ring_, detail::axpy(f.terms_, k.one(), Monomial(f.ring_->nvars()), g.terms_, k, storage_compare));
}

Polynomial operator-(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f.ring_, g.ring_);
  const Field& k = f.field();
  return Polynomial(f.ring_,
                    detail::axpy(f.terms_, k.neg(k.one()), Monomial(f.ring_->nvars()), g.terms_, k, storage_compare));
}

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f.ring_, g.ring_);
  const Field& k = f.field();
  std::vector<Term> product;
  product.reserve(f.terms_.size() * g.terms_.size());
  for (const auto& a : f.terms_) {
    for (const auto& b : g.terms_) product.push_back(Term{a.mono * b.mono, k.mul(a.coeff, b.coeff)});
  }
  detail::normalize(product, k, storage_compare);
  return Polynomial(f.ring_, std::move(product));
}

Polynomial Polynomial::scale(const Coeff& c) const {
  if (field().is_zero(c)) return Polynomial(ring_);
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coeff = field().mul(t.coeff, c);
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::pow(std::uint64_t k) const {
  Polynomial result = from_int(ring_, 1);
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  if (var >= ring_->nvars()) throw StructuralError("variable index out of range");
  const Field& k = field();
  std::vector<Term> out;
  for (const auto& t : terms_) {
    std::uint32_t e = t.mono[var];
    if (e == 0) continue;
    Coeff c = k.mul(t.coeff, k.from_int(e));
    if (k.is_zero(c)) continue;
    out.push_back(Term{t.mono.with_exponent(var, e - 1), std::move(c)});
  }
  // Lowering one exponent can reorder terms under grevlex.
  detail::normalize(out, k, storage_compare);
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::map_to(const RingPtr& target) const {
  if (same_ring(ring_, target)) return Polynomial(target, terms_);
  if (!(ring_->field() == target->field())) throw StructuralError("cannot map between different fields");
  std::vector<std::size_t> where(ring_->nvars(), static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < ring_->nvars(); ++i) {
    if (auto idx = target->index_of(ring_->variables()[i])) where[i] = *idx;
  }
  std::vector<Term> out;
  out.reserve(terms_.size());
  std::vector<std::uint32_t> exps(target->nvars());
  for (const auto& t : terms_) {
    std::fill(exps.begin(), exps.end(), 0);
    for (std::size_t i = 0; i < ring_->nvars(); ++i) {
      if (t.mono[i] == 0) continue;
      if (where[i] == static_cast<std::size_t>(-1)) {
        throw StructuralError("variable '" + ring_->variables()[i] + "' is not in the target ring");
      }
      exps[where[i]] = t.mono[i];
    }
    out.push_back(Term{Monomial(exps), t.coeff});
  }
  return from_terms(target, std::move(out));
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
  if (images.size() != ring_->nvars()) throw StructuralError("substitution must give one image per variable");
  RingPtr target = images.front().ring();
  for (const auto& img : images) require_same_ring(img.ring(), target);
  Polynomial result(target);
  for (const auto& t : terms_) {
    Polynomial piece = constant(target, t.coeff);
    for (std::size_t i = 0; i < ring_->nvars(); ++i) {
      if (t.mono[i] != 0) piece = piece * images[i].pow(t.mono[i]);
    }
    result = result + piece;
  }
  return result;
}

bool operator==(const Polynomial& f, const Polynomial& g) {
  return same_ring(f.ring_, g.ring_) && f.terms_ == g.terms_;
}

std::string monomial_to_string(const Monomial& m, const Ring& ring) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.variables()[i];
    if (m[i] != 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

namespace {

std::string terms_to_string(const std::vector<Term>& terms, const Ring& ring) {
  if (terms.empty()) return "0";
  const Field& k = ring.field();
  std::string out;
  for (std::size_t idx = 0; idx < terms.size(); ++idx) {
    const Term& t = terms[idx];
    bool negative = k.is_negative(t.coeff);
    Coeff magnitude = negative ? k.neg(t.coeff) : t.coeff;
    if (idx == 0) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    if (t.mono.is_one()) {
      out += k.to_string(magnitude);
    } else if (k.is_one(magnitude)) {
      out += monomial_to_string(t.mono, ring);
    } else {
      out += k.to_string(magnitude) + '*' + monomial_to_string(t.mono, ring);
    }
  }
  return out;
}

}  // namespace

std::string Polynomial::to_string() const { return terms_to_string(terms_, *ring_); }

std::string Polynomial::to_string(const MonomialOrder& order) const {
  std::vector<Term> sorted = terms_;
  std::sort(sorted.begin(), sorted.end(), [&](const Term& a, const Term& b) { return order.greater(a.mono, b.mono); });
  return terms_to_string(sorted, *ring_);
}

}  // namespace fitt
