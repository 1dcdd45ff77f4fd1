#ifndef HERMLAT_HERMITIAN_LATTICE_HPP
#define HERMLAT_HERMITIAN_LATTICE_HPP

#include "hermlat/linalg.hpp"
#include "hermlat/quadratic_order.hpp"
#include "hermlat/short_vectors.hpp"

#include <vector>

namespace hermlat {

/*
 * L = sum_i a_i x_i with Gram G_ij = H(x_i, x_j), H linear in the first
 * argument. basis holds the x_i as rows in ambient coordinates (identity
 * unless the lattice was derived from another one); it only matters when
 * comparing lattices as subsets of a common space.
 */
class HermitianLattice
{
    Order order_;
    std::vector<FracIdeal> ideals_;
    KMatrix gram_;
    KMatrix basis_;

  public:
    HermitianLattice() = default;
    /* Throws std::invalid_argument unless rank >= 1, the ideals belong to
     * o, and gram is hermitian positive definite. */
    HermitianLattice(Order const & o, std::vector<FracIdeal> ideals, KMatrix gram);
    HermitianLattice(Order const & o, std::vector<FracIdeal> ideals, KMatrix gram, KMatrix basis);

    Order const & order() const { return order_; }
    std::size_t rank() const { return ideals_.size(); }
    std::vector<FracIdeal> const & ideals() const { return ideals_; }
    KMatrix const & gram() const { return gram_; }
    KMatrix const & basis() const { return basis_; }

    bool operator==(HermitianLattice const & o) const
    {
        return order_ == o.order_ && ideals_ == o.ideals_ && gram_ == o.gram_ && basis_ == o.basis_;
    }
    bool operator!=(HermitianLattice const & o) const { return !(*this == o); }
};

/* R^g with the given Gram. */
HermitianLattice free_lattice(Order const & o, KMatrix gram);

FracIdeal scale(HermitianLattice const & L);
FracIdeal volume(HermitianLattice const & L);
HermitianLattice dual(HermitianLattice const & L);
bool is_integral(HermitianLattice const & L);
bool is_modular(HermitianLattice const & L, FracIdeal const & a);
bool is_unimodular(HermitianLattice const & L);

/* Product of the coefficient ideals, and its class. */
FracIdeal steinitz_ideal(HermitianLattice const & L);
std::size_t steinitz(HermitianLattice const & L, IdealClassGroup const & cg);

/* [L^# : L]; throws std::domain_error unless L is integral. */
std::int64_t polarization_degree(HermitianLattice const & L);

/* Equality of L1 and L2 as R-modules in the common ambient space. */
bool same_module(HermitianLattice const & L1, HermitianLattice const & L2);

/* Orthogonal sum, with block diagonal ambient basis. */
HermitianLattice orthogonal_sum(HermitianLattice const & L1, HermitianLattice const & L2);

/*
 * Equivalent pseudo-basis with a_i = R for i < g and a_g the class group
 * representative of the Steinitz class. The module and form are unchanged
 * (basis and gram transform accordingly).
 */
HermitianLattice steinitz_normal_form(HermitianLattice const & L, IdealClassGroup const & cg);

/* Same module and form on a pseudo-basis built from an LLL-reduced trace
 * basis, then size reduced. Keeps ideal and Gram entries small. */
HermitianLattice reduce_lattice(HermitianLattice const & L);

/*
 * Z-form of L. Z-basis vector u_p = gen_p x_{index_p} where gen_p runs over
 * the two HNF generators of the coefficient ideal. omega_action has as
 * column p the coordinates of w u_p, so (w z) = omega_action z.
 */
struct TraceLattice
{
    Order order;
    std::size_t g = 0;
    RatMatrix gram_z;
    IntMatrix omega_action;
    std::vector<std::size_t> basis_index;
    std::vector<KNumber> basis_gen;
    /* gram_z * den, integral */
    IntMatrix gram_int;
    std::int64_t den = 1;

    std::size_t dim() const { return 2 * g; }
    /* Pseudo-basis coordinates of the Z-vector z. */
    KVector to_pseudo(IntVector const & z) const;
    /* Inverse of to_pseudo; throws std::domain_error if v is not in L. */
    IntVector from_pseudo(KVector const & v) const;
    IntVector apply_omega(IntVector const & z) const;
};

TraceLattice trace_lattice(HermitianLattice const & L);

/* Gram of L on its pseudo-basis, recovered from gram_z and omega_action. */
KMatrix hermitian_from_trace(TraceLattice const & T);

/* Nonzero z with T(z,z) <= bound, one per +- pair. */
std::vector<IntVector> minimum_vectors(TraceLattice const & T, Rational const & bound);

/* H-norms lambda_1 <= ... <= lambda_g realised by K-independent vectors,
 * chosen greedily by trace norm. */
std::vector<Rational> successive_minima(HermitianLattice const & L);

/* Coefficient ideals and vectors of a pseudo-basis. */
struct PseudoBasis
{
    std::vector<FracIdeal> ideals;
    std::vector<KVector> vectors;
};

/*
 * Pseudo-basis of the R-module spanned over Z by gens (vectors of K^m,
 * the span must be w-stable). Vectors are returned in the same ambient
 * coordinates.
 */
PseudoBasis module_pseudo_basis(Order const & o, std::vector<KVector> const & gens);

/*
 * The lattice with pseudo-basis pb, whose vectors are coordinates with
 * respect to a parent pseudo-basis with Gram parent_gram and ambient rows
 * parent_basis. Gram X G X^*, basis X B.
 */
HermitianLattice lattice_from_pseudo_basis(Order const & o, PseudoBasis const & pb, KMatrix const & parent_gram,
                                           KMatrix const & parent_basis);

/* v^T G conj(w) */
KNumber hermitian_product(KMatrix const & gram, KVector const & v, KVector const & w);

}  // namespace hermlat

#endif
