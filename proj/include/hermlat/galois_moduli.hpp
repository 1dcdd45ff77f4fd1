#ifndef HERMLAT_GALOIS_MODULI_HPP
#define HERMLAT_GALOIS_MODULI_HPP

#include "hermlat/enumeration.hpp"
#include "hermlat/isometry.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hermlat {

/* (a L, H / N(a)): ideals a a_i, Gram G / N(a), same ambient basis. */
HermitianLattice ideal_act(FracIdeal const & a, HermitianLattice const & L);

/* Ideals, Gram and basis conjugated. */
HermitianLattice conj_lattice(HermitianLattice const & L);

struct Precheck
{
    bool exponent_ok = true;        // exponent of Cl(R) divides g
    bool steinitz_order_ok = true;  // Steinitz class has order <= 2
    bool odd_g_free_ok = true;      // g even, or the Steinitz class is trivial
    std::string reason;

    bool ok() const { return exponent_ok && steinitz_order_ok && odd_g_free_ok; }
};

Precheck moduli_precheck(IdealClassGroup const & cg, HermitianLattice const & L);

struct ModuliCheck
{
    /* "ideal:[d | a, b, c]" or "conj" */
    std::string action;
    bool isometric = false;
    std::optional<IsometryWitness> witness;
    std::string separating_invariant;
};

struct ModuliReport
{
    HermitianLattice lattice;
    bool verdict = false;
    Precheck prechecks;
    std::vector<ModuliCheck> checks;
    /* Rank 2 only: conj(L) isometric to ideal_act(conj(a_st), L). The
     * verdict never uses it; it must agree with the "conj" check whenever
     * every ideal check passed. */
    std::optional<bool> conj_matches_steinitz_action;
};

struct ModuliOptions
{
    /* Test every class instead of a generating set. */
    bool all_classes = false;
};

ModuliReport has_field_of_moduli_Q(HermitianLattice const & L, IdealClassGroup const & cg,
                                   ModuliOptions const & opts = {});

struct ModuliRun
{
    /* indecomposable classes; free ones only for odd g */
    ClassList classes;
    std::vector<ModuliReport> reports;

    bool complete() const { return classes.complete; }
    std::size_t count_q() const;
    /* verdict true and Steinitz class trivial */
    std::size_t count_q_free() const;
};

ModuliRun enumerate_moduli_Q(Order const & o, std::size_t g, EnumerationOptions opts = {},
                             ModuliOptions const & mopts = {});

struct TableRow
{
    std::int64_t disc = 0;
    std::size_t class_number = 0;
    std::size_t g = 0;
    std::size_t p_count = 0;  // rank 2 only
    std::size_t q_count = 0;
    std::size_t a_count = 0;  // indecomposable classes (free ones for odd g)
    bool complete = true;
    double seconds = 0;
};

TableRow table_row(std::int64_t disc, std::size_t g, EnumerationOptions const & opts = {},
                   ModuliOptions const & mopts = {});

}  // namespace hermlat

#endif
