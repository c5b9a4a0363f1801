#pragma once

#include "conjal/algebra.hpp"
#include "conjal/rational.hpp"

#include <random>

namespace conjal {

/// Small random rational: numerator in [-12, 12], denominator in [1, 6].
Rational random_rational(std::mt19937_64& rng);

/// Element with random_rational coordinates.
Element random_element(std::mt19937_64& rng, const SpecPtr& spec);

} // namespace conjal
