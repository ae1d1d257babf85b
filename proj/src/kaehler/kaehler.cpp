#include "fitt/kaehler.hpp"

namespace fitt {

PresentedModule kaehler_presentation(const PresentedAlgebra& algebra) {
  const RingPtr& ring = algebra.ring;
  const auto& relations = algebra.relations.generators();
  PolyMatrix jacobian(ring, ring->nvars(), relations.size());
  std::vector<std::string> labels;
  for (std::size_t v = 0; v < ring->nvars(); ++v) {
    labels.push_back("d" + ring->variables()[v]);
    for (std::size_t c = 0; c < relations.size(); ++c) jacobian.set(v, c, relations[c].derivative(v));
  }
  return PresentedModule(algebra, std::move(jacobian), std::move(labels));
}

Ideal kaehler_fitting(const PresentedAlgebra& algebra, long i) {
  return fitting_ideal(kaehler_presentation(algebra), i);
}

}  // namespace fitt
