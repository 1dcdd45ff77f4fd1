#ifndef HERMLAT_ISOMETRY_HPP
#define HERMLAT_ISOMETRY_HPP

#include "hermlat/hermitian_lattice.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hermlat {

/*
 * An isometry phi: L1 -> L2. matrix has as row i the coordinates of
 * phi(x_i) in the pseudo-basis of L2, so matrix G2 matrix^* = G1.
 * z_matrix is phi on the trace-lattice Z-bases (column p = image of u_p).
 */
struct IsometryWitness
{
    KMatrix matrix;
    IntMatrix z_matrix;
};

struct IsometryResult
{
    std::optional<IsometryWitness> witness;
    /* Empty when isometric; otherwise the first separating invariant or
     * "search exhausted". */
    std::string separating_invariant;

    explicit operator bool() const { return witness.has_value(); }
};

/*
 * Per-lattice data reused across many isometry tests: trace form, cheap
 * invariants, the search base and the short-vector shells it needs.
 */
class PreparedLattice
{
  public:
    explicit PreparedLattice(HermitianLattice L, std::int64_t theta_depth = 20);

    HermitianLattice const & lattice() const { return L_; }
    TraceLattice const & trace() const { return T_; }
    std::vector<std::int64_t> const & theta() const { return theta_; }
    std::size_t base_size() const { return base_.size(); }

  private:
    friend IsometryResult is_isometric(PreparedLattice const & a, PreparedLattice const & b);
    friend std::vector<IsometryWitness> isometries(PreparedLattice const & a, PreparedLattice const & b,
                                                   bool first_only);

    HermitianLattice L_;
    TraceLattice T_;
    IntMatrix omega_t_q_;  // Omega^T Q
    std::vector<std::int64_t> theta_;
    FracIdeal scale_, volume_, steinitz_;
    Rational det_z_;
    /* base vectors u_k, ordered rarest shell first */
    std::vector<IntVector> base_;
    std::vector<std::int64_t> base_norms_;
    std::map<std::int64_t, std::vector<IntVector>> shells_;  // both signs
    std::vector<std::pair<std::int64_t, std::size_t>> shell_sizes_;
    RatMatrix u_inv_;  // [u_1, W u_1, ...]^-1
    KMatrix uk_inv_;   // K-coordinates of the base, inverted
};

IsometryResult is_isometric(PreparedLattice const & a, PreparedLattice const & b);
IsometryResult is_isometric(HermitianLattice const & a, HermitianLattice const & b);

/* All isometries a -> b (or the first one found). */
std::vector<IsometryWitness> isometries(PreparedLattice const & a, PreparedLattice const & b, bool first_only);

/* Checks Gram transport and that the induced Z-map is unimodular. */
bool verify_witness(HermitianLattice const & L1, HermitianLattice const & L2, IsometryWitness const & w);

/* Composition psi o phi for phi: L1 -> L2, psi: L2 -> L3. */
IsometryWitness compose(IsometryWitness const & phi, IsometryWitness const & psi);
/* phi^-1: L2 -> L1. */
IsometryWitness invert(IsometryWitness const & phi);

struct AutomorphismGroup
{
    std::vector<IsometryWitness> elements;
    std::vector<IsometryWitness> generators;
    std::size_t order() const { return elements.size(); }
};

AutomorphismGroup automorphisms(HermitianLattice const & L);

/* Finest orthogonal decomposition into hermitian sublattices. */
std::vector<HermitianLattice> decompose(HermitianLattice const & L);
bool is_indecomposable(HermitianLattice const & L);

}  // namespace hermlat

#endif
