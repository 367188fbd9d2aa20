#ifndef DLIN_RANDOM_HPP
#define DLIN_RANDOM_HPP

#include "dlin/field.hpp"
#include "dlin/ore.hpp"

#include <random>

namespace dlin {

/// Small random field elements for sampling: rationals with numerators in
/// [-5, 5] and denominators in [1, 4]; over Q(z), a quotient of a degree <= 2
/// numerator and a nonzero degree <= 1 denominator.
FieldElem random_elem(Field field, std::mt19937_64& rng);
FieldElem random_nonzero_elem(Field field, std::mt19937_64& rng);

/// Monic skew polynomial of the given degree with random lower coefficients.
OrePoly random_monic(Field field, std::size_t degree, std::mt19937_64& rng);

} // namespace dlin

#endif
