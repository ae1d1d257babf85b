#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "fitt/monomial.hpp"
#include "fitt/polynomial.hpp"

namespace fitt {

/// An ideal given by a finite generator list in a fixed polynomial ring.
/// Reduced Groebner bases are computed on first demand per monomial order
/// and cached; copies of an Ideal share that cache. The cache is write-once
/// and safe to fill from several threads.
class Ideal {
 public:
  /// Throws StructuralError if a generator lives in another ring.
  Ideal(RingPtr ring, std::vector<Polynomial> generators);

  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
  static Ideal unit(RingPtr ring);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return generators_; }

  /// Reduced, monic, sorted by descending leading monomial.
  std::vector<Polynomial> groebner_basis(const MonomialOrder& order = MonomialOrder::grevlex()) const;

  /// "(g1, g2, ...)"; "(0)" for the zero ideal.
  std::string to_string() const;

 private:
  struct Cache;

  RingPtr ring_;
  std::vector<Polynomial> generators_;
  std::shared_ptr<Cache> cache_;
};

Monomial leading_monomial(const Polynomial& f, const MonomialOrder& order);
/// Coefficient of the leading monomial under `order`.
Coeff leading_coefficient(const Polynomial& f, const MonomialOrder& order);

/// Multivariate division: the remainder r of f by `basis`, with no term of r
/// divisible by a leading monomial of the basis.
Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& basis,
                  const MonomialOrder& order = MonomialOrder::grevlex());

/// Uncached Buchberger run. Pairs are taken by smallest lcm degree, ties by
/// index pair; the coprime and chain criteria (Gebauer-Moeller) prune pairs.
std::vector<Polynomial> compute_groebner_basis(const RingPtr& ring, const std::vector<Polynomial>& generators,
                                               const MonomialOrder& order);

std::vector<Polynomial> groebner_basis(const Ideal& ideal, const MonomialOrder& order = MonomialOrder::grevlex());

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order);

bool ideal_member(const Polynomial& f, const Ideal& ideal);
/// small ⊆ big.
bool ideal_contains(const Ideal& big, const Ideal& small);
bool ideal_equal(const Ideal& a, const Ideal& b);
bool is_unit_ideal(const Ideal& ideal);

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
/// Generators re-expressed in `target` by variable name.
Ideal map_ideal(const Ideal& ideal, const RingPtr& target);

/// I ∩ k[variables outside `block`], returned over the ring with the block
/// variables removed.
Ideal eliminate(const Ideal& ideal, std::span<const std::size_t> block);
Ideal eliminate(const Ideal& ideal, const std::vector<std::string>& block_names);

/// (I : g^∞) via I + (w*g - 1) and elimination of the fresh variable w.
/// Throws ValidationError when g is zero.
Ideal saturate(const Ideal& ideal, const Polynomial& g);

/// I ∩ J via t*I + (1-t)*J and elimination of the fresh variable t.
Ideal ideal_intersect(const Ideal& a, const Ideal& b);

/// Whether I and J induce the same ideal after inverting g, decided as
/// equality of their g-saturations.
bool localized_equal(const Ideal& a, const Ideal& b, const Polynomial& g);

}  // namespace fitt
