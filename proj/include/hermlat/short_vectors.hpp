#ifndef HERMLAT_SHORT_VECTORS_HPP
#define HERMLAT_SHORT_VECTORS_HPP

#include "hermlat/linalg.hpp"

#include <cstdint>
#include <limits>
#include <vector>

namespace hermlat {

struct ShortVector
{
    IntVector coords;
    std::int64_t norm = 0;
};

/*
 * LLL reduction (delta = 0.99) of the positive definite integer form q.
 * Returns U with columns the reduced basis in the original coordinates, so
 * U^T q U is reduced.
 */
IntMatrix lll_reduce(IntMatrix const & q);

/* Evaluates x^T q y exactly; throws std::overflow_error past int64. */
std::int64_t form_value(IntMatrix const & q, IntVector const & x, IntVector const & y);

/*
 * All nonzero x with x^T q x <= bound, one per +- pair (the one whose last
 * nonzero coordinate is positive), sorted by norm then coordinates.
 * Enumeration bounds are computed in floating point with a safety margin
 * and every candidate is verified with exact integer arithmetic.
 * Throws std::length_error if more than limit vectors qualify.
 */
std::vector<ShortVector> short_vectors(IntMatrix const & q, std::int64_t bound,
                                       std::size_t limit = std::numeric_limits<std::size_t>::max());

/* Number of vectors (counting both signs) of each norm 0..depth. */
std::vector<std::int64_t> theta_series(IntMatrix const & q, std::int64_t depth);

}  // namespace hermlat

#endif
