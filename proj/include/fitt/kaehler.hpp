#pragma once

#include "fitt/fitting.hpp"

namespace fitt {

/// Conormal presentation of Ω¹ of ambient/J: one generator d(v) per ambient
/// variable, one relation column per generator f of J with entry
/// (row v, column f) = ∂f/∂v. Derivatives are taken in the ground field, so
/// d(x^v) vanishes whenever the characteristic divides v.
PresentedModule kaehler_presentation(const PresentedAlgebra& algebra);

/// fitting_ideal(kaehler_presentation(algebra), i).
Ideal kaehler_fitting(const PresentedAlgebra& algebra, long i);

}  // namespace fitt
