#include <algorithm>
#include <optional>

#include "fitt/errors.hpp"
#include "fitt/groebner.hpp"

namespace fitt {

namespace {

using Terms = std::vector<Term>;

struct OrderCmp {
  const MonomialOrder* order;
  std::strong_ordering operator()(const Monomial& a, const Monomial& b) const { return order->compare(a, b); }
};

Terms sorted_terms(const Polynomial& f, const MonomialOrder& order) {
  Terms t = f.terms();
  detail::normalize(t, f.field(), OrderCmp{&order});
  return t;
}

void make_monic(Terms& t, const Field& k) {
  if (t.empty() || k.is_one(t.front().coeff)) return;
  Coeff inv = k.inverse(t.front().coeff);
  for (auto& term : t) term.coeff = k.mul(term.coeff, inv);
}

/// Full normal form of f against the listed basis elements.
Terms normal_form(Terms f, const std::vector<const Terms*>& basis, const Field& k, OrderCmp cmp) {
  Terms rem;
  std::size_t head = 0;
  while (head < f.size()) {
    const Term& lt = f[head];
    const Terms* divisor = nullptr;
    for (const Terms* g : basis) {
      if (g->front().mono.divides(lt.mono)) {
        divisor = g;
        break;
      }
    }
    if (divisor == nullptr) {
      rem.push_back(lt);
      ++head;
      continue;
    }
    const Term& glt = divisor->front();
    Coeff factor = k.neg(k.div(lt.coeff, glt.coeff));
    Monomial shift = glt.mono.quotient_of(lt.mono);
    f = detail::axpy(std::span<const Term>(f).subspan(head + 1), factor, shift,
                     std::span<const Term>(*divisor).subspan(1), k, cmp);
    head = 0;
  }
  return rem;
}

Terms spoly(const Terms& f, const Terms& g, const Field& k, OrderCmp cmp) {
  Monomial l = f.front().mono.lcm(g.front().mono);
  Monomial mf = f.front().mono.quotient_of(l);
  Monomial mg = g.front().mono.quotient_of(l);
  Terms left = detail::axpy(std::span<const Term>{}, k.inverse(f.front().coeff), mf, std::span<const Term>(f).subspan(1),
                            k, cmp);
  return detail::axpy(left, k.neg(k.inverse(g.front().coeff)), mg, std::span<const Term>(g).subspan(1), k, cmp);
}

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

class Buchberger {
 public:
  Buchberger(const Field& field, const MonomialOrder& order) : k_(field), cmp_{&order} {}

  /// Returns false once the unit ideal is detected.
  bool add_generator(Terms f) {
    Terms h = normal_form(std::move(f), active_basis(), k_, cmp_);
    return insert(std::move(h));
  }

  void run() {
    while (!pairs_.empty() && !unit_) {
      auto best = std::min_element(pairs_.begin(), pairs_.end(), [](const Pair& a, const Pair& b) {
        if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
        return std::tie(a.i, a.j) < std::tie(b.i, b.j);
      });
      Pair p = *best;
      pairs_.erase(best);
      Terms s = spoly(polys_[p.i], polys_[p.j], k_, cmp_);
      insert(normal_form(std::move(s), active_basis(), k_, cmp_));
    }
  }

  bool unit() const { return unit_; }

  /// Reduced basis, sorted by descending leading monomial.
  std::vector<Terms> reduced() const {
    std::vector<Terms> minimal;
    for (std::size_t idx : active_) {
      bool redundant = false;
      for (std::size_t other : active_) {
        if (other != idx && polys_[other].front().mono.divides(polys_[idx].front().mono)) {
          // Equal leading monomials cannot coexist in the active set.
          redundant = true;
          break;
        }
      }
      if (!redundant) minimal.push_back(polys_[idx]);
    }
    std::vector<Terms> out;
    out.reserve(minimal.size());
    for (std::size_t idx = 0; idx < minimal.size(); ++idx) {
      std::vector<const Terms*> others;
      for (std::size_t o = 0; o < minimal.size(); ++o) {
        if (o != idx) others.push_back(&minimal[o]);
      }
      Terms tail(minimal[idx].begin() + 1, minimal[idx].end());
      Terms reduced_tail = normal_form(std::move(tail), others, k_, cmp_);
      Terms g{minimal[idx].front()};
      g.insert(g.end(), reduced_tail.begin(), reduced_tail.end());
      make_monic(g, k_);
      out.push_back(std::move(g));
    }
    std::sort(out.begin(), out.end(),
              [this](const Terms& a, const Terms& b) { return cmp_(a.front().mono, b.front().mono) > 0; });
    return out;
  }

 private:
  std::vector<const Terms*> active_basis() const {
    std::vector<const Terms*> out;
    out.reserve(active_.size());
    for (std::size_t idx : active_) out.push_back(&polys_[idx]);
    return out;
  }

  bool insert(Terms h) {
    if (h.empty()) return true;
    make_monic(h, k_);
    if (h.front().mono.is_one()) {
      unit_ = true;
      polys_.push_back(std::move(h));
      active_ = {polys_.size() - 1};
      pairs_.clear();
      return false;
    }
    polys_.push_back(std::move(h));
    update(polys_.size() - 1);
    return true;
  }

  // Gebauer-Moeller installation of the new element h.
  void update(std::size_t h) {
    const Monomial& lh = polys_[h].front().mono;
    std::vector<Pair> candidates;
    for (std::size_t g : active_) candidates.push_back(Pair{g, h, lh.lcm(polys_[g].front().mono)});

    auto lead = [this](std::size_t idx) -> const Monomial& { return polys_[idx].front().mono; };

    std::vector<Pair> kept;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      const Pair& cand = candidates[c];
      bool keep = lh.coprime(lead(cand.i));
      if (!keep) {
        keep = true;
        for (std::size_t o = c + 1; o < candidates.size() && keep; ++o) {
          if (candidates[o].lcm.divides(cand.lcm)) keep = false;
        }
        for (std::size_t o = 0; o < kept.size() && keep; ++o) {
          if (kept[o].lcm.divides(cand.lcm)) keep = false;
        }
      }
      if (keep) kept.push_back(cand);
    }

    std::vector<Pair> next;
    for (auto& p : pairs_) {
      bool drop = lh.divides(p.lcm) && !(lead(p.i).lcm(lh) == p.lcm) && !(lh.lcm(lead(p.j)) == p.lcm);
      if (!drop) next.push_back(std::move(p));
    }
    for (auto& p : kept) {
      if (!lh.coprime(lead(p.i))) next.push_back(std::move(p));
    }
    pairs_ = std::move(next);

    std::vector<std::size_t> still_active;
    for (std::size_t g : active_) {
      if (!lh.divides(lead(g))) still_active.push_back(g);
    }
    still_active.push_back(h);
    active_ = std::move(still_active);
  }

  const Field& k_;
  OrderCmp cmp_;
  std::vector<Terms> polys_;
  std::vector<std::size_t> active_;
  std::vector<Pair> pairs_;
  bool unit_ = false;
};

Polynomial to_polynomial(const RingPtr& ring, Terms t) { return Polynomial::from_terms(ring, std::move(t)); }

}  // namespace

Monomial leading_monomial(const Polynomial& f, const MonomialOrder& order) {
  if (f.is_zero()) throw StructuralError("zero polynomial has no leading monomial");
  const Term* best = &f.terms().front();
  for (const auto& t : f.terms()) {
    if (order.greater(t.mono, best->mono)) best = &t;
  }
  return best->mono;
}

Coeff leading_coefficient(const Polynomial& f, const MonomialOrder& order) {
  Monomial m = leading_monomial(f, order);
  for (const auto& t : f.terms()) {
    if (t.mono == m) return t.coeff;
  }
  return f.field().zero();
}

Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& basis, const MonomialOrder& order) {
  std::vector<Terms> sorted;
  sorted.reserve(basis.size());
  for (const auto& g : basis) {
    require_same_ring(f.ring(), g.ring());
    if (!g.is_zero()) sorted.push_back(sorted_terms(g, order));
  }
  std::vector<const Terms*> refs;
  for (const auto& g : sorted) refs.push_back(&g);
  return to_polynomial(f.ring(), normal_form(sorted_terms(f, order), refs, f.field(), OrderCmp{&order}));
}

std::vector<Polynomial> compute_groebner_basis(const RingPtr& ring, const std::vector<Polynomial>& generators,
                                               const MonomialOrder& order) {
  Buchberger engine(ring->field(), order);
  for (const auto& f : generators) {
    require_same_ring(ring, f.ring());
    if (!engine.add_generator(sorted_terms(f, order))) break;
  }
  engine.run();
  std::vector<Polynomial> out;
  for (auto& t : engine.reduced()) out.push_back(to_polynomial(ring, std::move(t)));
  return out;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
  require_same_ring(f.ring(), g.ring());
  if (f.is_zero() || g.is_zero()) return Polynomial(f.ring());
  return to_polynomial(f.ring(),
                       spoly(sorted_terms(f, order), sorted_terms(g, order), f.field(), OrderCmp{&order}));
}

}  // namespace fitt
