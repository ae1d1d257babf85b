#include <algorithm>
#include <mutex>

#include "fitt/errors.hpp"
#include "fitt/groebner.hpp"

namespace fitt {

struct Ideal::Cache {
  std::mutex mutex;
  std::vector<std::pair<MonomialOrder, std::shared_ptr<const std::vector<Polynomial>>>> entries;

  std::shared_ptr<const std::vector<Polynomial>> find(const MonomialOrder& order) {
    std::lock_guard lock(mutex);
    for (const auto& [o, basis] : entries) {
      if (o == order) return basis;
    }
    return nullptr;
  }

  // First writer wins; a racing duplicate computation is discarded.
  std::shared_ptr<const std::vector<Polynomial>> publish(const MonomialOrder& order,
                                                         std::shared_ptr<const std::vector<Polynomial>> basis) {
    std::lock_guard lock(mutex);
    for (const auto& [o, existing] : entries) {
      if (o == order) return existing;
    }
    entries.emplace_back(order, basis);
    return basis;
  }
};

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), generators_(std::move(generators)), cache_(std::make_shared<Cache>()) {
  for (const auto& g : generators_) require_same_ring(ring_, g.ring());
}

Ideal Ideal::unit(RingPtr ring) {
  Polynomial one = Polynomial::from_int(ring, 1);
  return Ideal(std::move(ring), {std::move(one)});
}

std::vector<Polynomial> Ideal::groebner_basis(const MonomialOrder& order) const {
  if (auto hit = cache_->find(order)) return *hit;
  auto basis = std::make_shared<const std::vector<Polynomial>>(compute_groebner_basis(ring_, generators_, order));
  return *cache_->publish(order, std::move(basis));
}

std::string Ideal::to_string() const {
  if (generators_.empty()) return "(0)";
  std::string out = "(";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) out += ", ";
    out += generators_[i].to_string();
  }
  return out + ")";
}

std::vector<Polynomial> groebner_basis(const Ideal& ideal, const MonomialOrder& order) {
  return ideal.groebner_basis(order);
}

bool ideal_member(const Polynomial& f, const Ideal& ideal) {
  require_same_ring(f.ring(), ideal.ring());
  if (f.is_zero()) return true;
  return reduce(f, ideal.groebner_basis()).is_zero();
}

bool ideal_contains(const Ideal& big, const Ideal& small) {
  require_same_ring(big.ring(), small.ring());
  auto basis = big.groebner_basis();
  return std::all_of(small.generators().begin(), small.generators().end(),
                     [&](const Polynomial& f) { return reduce(f, basis).is_zero(); });
}

bool ideal_equal(const Ideal& a, const Ideal& b) { return ideal_contains(a, b) && ideal_contains(b, a); }

bool is_unit_ideal(const Ideal& ideal) {
  auto basis = ideal.groebner_basis();
  return basis.size() == 1 && basis.front().is_unit();
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  auto gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators()) {
    for (const auto& g : b.generators()) gens.push_back(f * g);
  }
  return Ideal(a.ring(), std::move(gens));
}

Ideal map_ideal(const Ideal& ideal, const RingPtr& target) {
  std::vector<Polynomial> gens;
  gens.reserve(ideal.generators().size());
  for (const auto& g : ideal.generators()) gens.push_back(g.map_to(target));
  return Ideal(target, std::move(gens));
}

Ideal eliminate(const Ideal& ideal, std::span<const std::size_t> block) {
  const RingPtr& ring = ideal.ring();
  for (std::size_t b : block) {
    if (b >= ring->nvars()) throw StructuralError("elimination variable out of range");
  }
  RingPtr target = drop_variables(ring, block);
  auto order = MonomialOrder::block(std::vector<std::size_t>(block.begin(), block.end()));
  std::vector<Polynomial> kept;
  for (const auto& g : ideal.groebner_basis(order)) {
    bool free = std::none_of(block.begin(), block.end(), [&](std::size_t b) { return g.uses_variable(b); });
    if (free) kept.push_back(g.map_to(target));
  }
  return Ideal(target, std::move(kept));
}

Ideal eliminate(const Ideal& ideal, const std::vector<std::string>& block_names) {
  std::vector<std::size_t> block;
  for (const auto& name : block_names) block.push_back(ideal.ring()->require_index(name));
  return eliminate(ideal, block);
}

Ideal saturate(const Ideal& ideal, const Polynomial& g) {
  require_same_ring(ideal.ring(), g.ring());
  if (g.is_zero()) throw ValidationError("cannot saturate by the zero polynomial");
  if (g.is_unit()) return ideal;
  const RingPtr& ring = ideal.ring();
  std::string w = fresh_variable(*ring, "w");
  RingPtr big = extend_ring(ring, {w});
  std::vector<Polynomial> gens;
  for (const auto& f : ideal.generators()) gens.push_back(f.map_to(big));
  gens.push_back(Polynomial::variable(big, big->nvars() - 1) * g.map_to(big) - Polynomial::from_int(big, 1));
  std::size_t w_index = big->nvars() - 1;
  Ideal contracted = eliminate(Ideal(big, std::move(gens)), std::span<const std::size_t>(&w_index, 1));
  return map_ideal(contracted, ring);
}

Ideal ideal_intersect(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  const RingPtr& ring = a.ring();
  std::string t = fresh_variable(*ring, "t");
  RingPtr big = extend_ring(ring, {t});
  Polynomial tvar = Polynomial::variable(big, big->nvars() - 1);
  Polynomial one_minus_t = Polynomial::from_int(big, 1) - tvar;
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators()) gens.push_back(tvar * f.map_to(big));
  for (const auto& g : b.generators()) gens.push_back(one_minus_t * g.map_to(big));
  std::size_t t_index = big->nvars() - 1;
  Ideal contracted = eliminate(Ideal(big, std::move(gens)), std::span<const std::size_t>(&t_index, 1));
  return map_ideal(contracted, ring);
}

bool localized_equal(const Ideal& a, const Ideal& b, const Polynomial& g) {
  require_same_ring(a.ring(), b.ring());
  return ideal_equal(saturate(a, g), saturate(b, g));
}

}  // namespace fitt
