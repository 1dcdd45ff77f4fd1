#ifndef HERMLAT_ORACLES_HPP
#define HERMLAT_ORACLES_HPP

#include "hermlat/hermitian_lattice.hpp"

#include <random>

namespace hermlat::testing {

/* Number of reduced primitive binary quadratic forms of discriminant disc. */
std::size_t count_reduced_forms(std::int64_t disc);

/* Same module and form, fresh pseudo-basis from random Z-generators, then
 * coefficient ideals rescaled by random scalars. */
HermitianLattice isometric_copy(HermitianLattice const & L, std::mt19937_64 & rng);

/* Exhaustive search for Z-isometries of the trace forms commuting with w. */
bool brute_force_isometric(HermitianLattice const & a, HermitianLattice const & b);

/*
 * Every integral unimodular rank-2 lattice up to isometry, found without the
 * library enumerator: L = R e1 + b e2 with H(e1, e1) = a the minimum, which
 * satisfies (2a)^4 <= 4 det(trace form) = 4 disc^2. Classes are separated by
 * brute_force_isometric.
 */
std::vector<HermitianLattice> naive_unimodular_rank2(Order const & o);

}  // namespace hermlat::testing

#endif
