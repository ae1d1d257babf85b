#include "fitt/fitting.hpp"

namespace fitt {

Ideal fitting_ideal(const PresentedModule& module, long i) {
  const Ideal& relations = module.algebra.relations;
  auto m = static_cast<long>(module.matrix.rows());
  if (i >= m) return Ideal::unit(module.algebra.ring);
  auto size = static_cast<std::size_t>(m - i);
  auto gens = relations.generators();
  for (auto& minor : minors(module.matrix, size)) gens.push_back(std::move(minor));
  return Ideal(module.algebra.ring, std::move(gens));
}

}  // namespace fitt
