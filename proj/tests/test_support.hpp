#ifndef HERMLAT_TEST_SUPPORT_HPP
#define HERMLAT_TEST_SUPPORT_HPP

#include "hermlat/hermitian_lattice.hpp"

#include <random>

namespace hermlat::testing {

inline FracIdeal random_integral_ideal(Order const & o, std::mt19937_64 & rng, std::int64_t max_norm = 30)
{
    std::uniform_int_distribution<std::int64_t> norm_dist(1, max_norm);
    std::vector<FracIdeal> ideals;
    while (ideals.empty())
        ideals = integral_ideals_of_norm(o, norm_dist(rng));
    return ideals[rng() % ideals.size()];
}

inline FracIdeal random_ideal(Order const & o, std::mt19937_64 & rng)
{
    FracIdeal base = random_integral_ideal(o, rng);
    std::uniform_int_distribution<int> small(-3, 3);
    std::uniform_int_distribution<int> dens(1, 4);
    KNumber lambda(o, Rational(small(rng), dens(rng)), Rational(small(rng), dens(rng)));
    if (lambda.is_zero())
        lambda = KNumber(o, 1);
    return ideal_scale(base, lambda);
}

/* Invertible g x g matrix with entries in R (small coefficients). */
inline KMatrix random_integral_matrix(Order const & o, std::size_t g, std::mt19937_64 & rng, int range = 2)
{
    std::uniform_int_distribution<int> c(-range, range);
    for (;;) {
        KMatrix m(o, g, g);
        for (std::size_t i = 0; i < g; ++i)
            for (std::size_t j = 0; j < g; ++j)
                m(i, j) = KNumber(o, c(rng), c(rng));
        if (!determinant(m).is_zero())
            return m;
    }
}

/* Integral lattice: integral ideals and Gram M M^* with M over R. */
inline HermitianLattice random_integral_lattice(Order const & o, std::size_t g, std::mt19937_64 & rng)
{
    std::vector<FracIdeal> ideals;
    for (std::size_t i = 0; i < g; ++i)
        ideals.push_back(random_integral_ideal(o, rng, 12));
    KMatrix m = random_integral_matrix(o, g, rng, 1);
    return HermitianLattice(o, ideals, m * m.conj_transpose());
}

/* General lattice: fractional ideals and a rational multiple of M M^*. */
inline HermitianLattice random_lattice(Order const & o, std::size_t g, std::mt19937_64 & rng)
{
    std::vector<FracIdeal> ideals;
    for (std::size_t i = 0; i < g; ++i)
        ideals.push_back(random_ideal(o, rng));
    KMatrix m = random_integral_matrix(o, g, rng, 2);
    std::uniform_int_distribution<int> num(1, 5), den(1, 4);
    Rational f(num(rng), den(rng));
    f.canonicalize();
    return HermitianLattice(o, ideals, (m * m.conj_transpose()).scaled(f));
}

inline KMatrix diag(Order const & o, std::vector<Rational> const & d)
{
    KMatrix m(o, d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i)
        m(i, i) = KNumber(o, d[i]);
    return m;
}

}  // namespace hermlat::testing

#endif
