#ifndef HERMLAT_ENUMERATION_HPP
#define HERMLAT_ENUMERATION_HPP

#include "hermlat/hermitian_lattice.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace hermlat {

struct EnumerationOptions
{
    bool free_only = false;
    bool indecomposable_only = false;
    /* 0 means unlimited. */
    std::uint64_t max_candidates = 0;
    double max_seconds = 0;
    /* Shuffles the candidate stream; the class set must not depend on it. */
    std::optional<std::uint64_t> seed;
};

struct EnumerationStats
{
    std::uint64_t gram_candidates = 0;  // reduced Grams of the minima sublattice
    std::uint64_t overlattices = 0;     // unimodular overlattices produced
    std::uint64_t dedup_tests = 0;      // pairwise isometry searches
    double seconds = 0;
};

struct RepProvenance
{
    /* Index of the overlattice (in generation order) that became this rep. */
    std::uint64_t found_at = 0;
    std::uint64_t dedup_tests = 0;
};

struct ClassList
{
    Order order;
    std::size_t rank = 0;
    bool free_only = false;
    bool indecomposable_only = false;
    std::vector<HermitianLattice> reps;
    std::vector<RepProvenance> provenance;
    EnumerationStats stats;
    /* false if a resource cap stopped the search; reps is then partial. */
    bool complete = true;
};

/*
 * One representative per isometry class of integral unimodular lattices of
 * rank g in {1, 2, 3}. Reps are presented in Steinitz normal form without
 * an ambient basis and sorted by canonical text.
 */
ClassList enumerate_unimodular(Order const & o, std::size_t g, EnumerationOptions const & opts = {});
ClassList enumerate_unimodular(Order const & o, std::size_t g, bool free_only);

/* Reps for which decompose returns a single factor. */
ClassList filter_indecomposable(ClassList const & list);

/* "[d|a,b,c];...|gram" text used to order reps deterministically. */
std::string canonical_text(HermitianLattice const & L);

}  // namespace hermlat

#endif
