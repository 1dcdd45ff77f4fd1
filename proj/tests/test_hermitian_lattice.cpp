#include "doctest.h"

#include "hermlat/hermitian_lattice.hpp"
#include "test_support.hpp"

#include <cstdlib>
#include <set>

using namespace hermlat;
using namespace hermlat::testing;

namespace {

/* Index [L^# : L] from explicit Z-bases in pseudo-basis coordinates:
 * product of HNF pivots of both modules scaled to a common denominator. */
mpz_class hnf_index_oracle(HermitianLattice const & L)
{
    std::size_t g = L.rank();
    KMatrix gi = inverse(L.gram());
    auto rows_of = [&](bool dual_side) {
        RatMatrix rows;
        for (std::size_t i = 0; i < g; ++i) {
            FracIdeal a = dual_side ? ideal_inv(ideal_conj(L.ideals()[i])) : L.ideals()[i];
            for (KNumber const & gen : {a.gen0(), a.gen1()}) {
                std::vector<Rational> r;
                for (std::size_t j = 0; j < g; ++j) {
                    KNumber x = dual_side ? gen * gi(i, j) : (i == j ? gen : gen.same_field(0));
                    r.push_back(x.a());
                    r.push_back(x.b());
                }
                rows.push_back(r);
            }
        }
        return rows;
    };
    RatMatrix a = rows_of(false), b = rows_of(true);
    mpz_class d = 1;
    for (auto const * m : {&a, &b})
        for (auto const & r : *m)
            for (auto const & x : r)
                mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), x.get_den_mpz_t());
    auto pivots = [&](RatMatrix const & m) {
        ZMatrix z;
        for (auto const & r : m) {
            std::vector<mpz_class> zr;
            for (auto const & x : r)
                zr.push_back(mpz_class(x * d));
            z.push_back(zr);
        }
        ZMatrix h = hermite_normal_form(z);
        mpz_class p = 1;
        for (std::size_t i = 0; i < h.size(); ++i)
            p *= h[i][i];
        return p;
    };
    return pivots(a) / pivots(b);
}

/* Brute-force enumeration of a box. */
std::set<IntVector> box_short_vectors(IntMatrix const & q, std::int64_t bound, int box)
{
    std::size_t m = q.size();
    std::set<IntVector> out;
    IntVector x(m, -box);
    for (;;) {
        bool nonzero = false;
        for (auto c : x)
            nonzero |= c != 0;
        if (nonzero && form_value(q, x, x) <= bound) {
            IntVector y = x;
            std::size_t last = m;
            while (y[last - 1] == 0)
                --last;
            if (y[last - 1] < 0)
                for (auto & c : y)
                    c = -c;
            out.insert(y);
        }
        std::size_t i = 0;
        while (i < m && x[i] == box)
            x[i++] = -box;
        if (i == m)
            break;
        ++x[i];
    }
    return out;
}

}  // namespace

TEST_CASE("construction validates the gram matrix")
{
    Order o = make_order(-4);
    CHECK_THROWS_AS(free_lattice(o, KMatrix(o, 0, 0)), std::invalid_argument);
    KMatrix notherm = KMatrix::identity(o, 2);
    notherm(0, 1) = KNumber(o, 0, 1);
    CHECK_THROWS_AS(free_lattice(o, notherm), std::invalid_argument);
    CHECK_THROWS_AS(free_lattice(o, diag(o, {1, -1})), std::invalid_argument);
    KMatrix singular(o, 2, 2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            singular(i, j) = KNumber(o, 1);
    CHECK_THROWS_AS(free_lattice(o, singular), std::invalid_argument);
    CHECK_NOTHROW(free_lattice(o, diag(o, {2})));
}

TEST_CASE("scale and volume")
{
    Order o = make_order(-15);
    FracIdeal R = FracIdeal::unit(o);
    CHECK(scale(free_lattice(o, KMatrix::identity(o, 2))) == R);
    CHECK(scale(free_lattice(o, diag(o, {2, 2}))) == FracIdeal::principal(o, KNumber(o, 2)));
    FracIdeal p2(o, 1, 2, 0, 1);
    HermitianLattice L(o, {R, p2}, diag(o, {1, Rational(1, 2)}));
    CHECK(scale(L) == R);
    CHECK(volume(L) == R);
    CHECK(volume(free_lattice(o, KMatrix::identity(o, 2))) == R);
    HermitianLattice rank1(o, {p2}, diag(o, {Rational(1, 2)}));
    CHECK(volume(rank1) == R);
    CHECK(is_unimodular(L));
    CHECK(steinitz(L, class_group(o)) != 0);
    CHECK_FALSE(is_principal(p2));
}

TEST_CASE("dual")
{
    Order o = make_order(-15);
    HermitianLattice I2 = free_lattice(o, KMatrix::identity(o, 2));
    CHECK(dual(I2) == I2);
    HermitianLattice two = free_lattice(o, diag(o, {2, 2}));
    CHECK(dual(two).gram() == diag(o, {Rational(1, 2), Rational(1, 2)}));
    FracIdeal p2(o, 1, 2, 0, 1);
    HermitianLattice L(o, {FracIdeal::unit(o), p2}, diag(o, {1, Rational(1, 2)}));
    CHECK(same_module(dual(L), L));
}

TEST_CASE("integrality and modularity")
{
    for (std::int64_t d : {-3, -4, -7, -15}) {
        Order o = make_order(d);
        HermitianLattice I2 = free_lattice(o, KMatrix::identity(o, 2));
        CHECK(is_integral(I2));
        CHECK(is_unimodular(I2));
        HermitianLattice d13 = free_lattice(o, diag(o, {1, 3}));
        CHECK(is_integral(d13));
        CHECK_FALSE(is_unimodular(d13));
        CHECK(volume(d13) == FracIdeal::principal(o, KNumber(o, 3)));
        CHECK_FALSE(is_integral(free_lattice(o, diag(o, {Rational(1, 2), Rational(1, 2)}))));
        HermitianLattice three = free_lattice(o, diag(o, {3, 3}));
        CHECK(is_modular(three, FracIdeal::principal(o, KNumber(o, 3))));
    }
}

TEST_CASE("steinitz class")
{
    Order o = make_order(-15);
    auto cg = class_group(o);
    CHECK(steinitz(free_lattice(o, diag(o, {1, 2, 5})), cg) == 0);
    FracIdeal p2(o, 1, 2, 0, 1);
    HermitianLattice L(o, {FracIdeal::unit(o), p2}, diag(o, {1, Rational(1, 2)}));
    CHECK(steinitz(L, cg) == cg.class_of(p2));
    CHECK(steinitz(L, cg) != 0);
}

TEST_CASE("polarization degree")
{
    for (std::int64_t d : {-3, -4, -7, -8, -15, -20}) {
        Order o = make_order(d);
        HermitianLattice d13 = free_lattice(o, diag(o, {1, 3}));
        CHECK(polarization_degree(d13) == 9);
        CHECK(hnf_index_oracle(d13) == 9);
        HermitianLattice r1 = free_lattice(o, diag(o, {2}));
        CHECK(polarization_degree(r1) == 4);
        CHECK(hnf_index_oracle(r1) == 4);
        CHECK(polarization_degree(free_lattice(o, KMatrix::identity(o, 3))) == 1);
        CHECK_THROWS_AS(polarization_degree(free_lattice(o, diag(o, {Rational(1, 2)}))), std::domain_error);
    }
}

TEST_CASE("trace lattice examples")
{
    Order o4 = make_order(-4);
    TraceLattice t4 = trace_lattice(free_lattice(o4, diag(o4, {1})));
    CHECK(t4.gram_z == RatMatrix{{2, 0}, {0, 2}});
    CHECK(t4.omega_action == IntMatrix{{0, -1}, {1, 0}});
    Order o3 = make_order(-3);
    TraceLattice t3 = trace_lattice(free_lattice(o3, diag(o3, {1})));
    CHECK(t3.gram_z == RatMatrix{{2, 1}, {1, 2}});
}

TEST_CASE("minimum vectors examples")
{
    CHECK(short_vectors(IntMatrix{{1, 0}, {0, 1}}, 1).size() == 2);
    Order o3 = make_order(-3);
    TraceLattice t3 = trace_lattice(free_lattice(o3, diag(o3, {1})));
    CHECK(minimum_vectors(t3, 2).size() == 3);
    CHECK(minimum_vectors(t3, Rational(3, 2)).empty());
    CHECK(short_vectors(IntMatrix{{4, 1}, {1, 3}}, 2).empty());
}

TEST_CASE("short vectors agree with box enumeration")
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> c(-3, 3);
    for (int iter = 0; iter < 60; ++iter) {
        std::size_t m = 2 + iter % 3;
        /* q = A^T A + I */
        IntMatrix a(m, IntVector(m));
        for (auto & r : a)
            for (auto & x : r)
                x = c(rng);
        IntMatrix q(m, IntVector(m, 0));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) {
                for (std::size_t k = 0; k < m; ++k)
                    q[i][j] += a[k][i] * a[k][j];
                if (i == j)
                    q[i][j] += 1;
            }
        std::int64_t bound = 12;
        auto sv = short_vectors(q, bound);
        std::set<IntVector> got;
        for (auto const & v : sv) {
            CHECK(v.norm == form_value(q, v.coords, v.coords));
            got.insert(v.coords);
        }
        CHECK(got.size() == sv.size());
        /* x^T q x >= |x|^2 so every short vector lies in the box of radius 3 */
        CHECK(got == box_short_vectors(q, bound, 3));
    }
}

TEST_CASE("LLL keeps the lattice")
{
    IntMatrix q{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    /* skewed basis of Z^3 */
    IntMatrix b{{1, 7, 23}, {0, 1, 9}, {0, 0, 1}};
    IntMatrix skew(3, IntVector(3, 0));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t k = 0; k < 3; ++k)
                skew[i][j] += b[k][i] * b[k][j];
    IntMatrix u = lll_reduce(skew);
    for (std::size_t j = 0; j < 3; ++j) {
        IntVector c{u[0][j], u[1][j], u[2][j]};
        CHECK(form_value(skew, c, c) == 1);
    }
    CHECK(short_vectors(skew, 1).size() == 3);
    CHECK(theta_series(q, 3) == std::vector<std::int64_t>{1, 6, 12, 8});
}

TEST_CASE("successive minima")
{
    Order o = make_order(-7);
    CHECK(successive_minima(free_lattice(o, diag(o, {3, 1, 2}))) == std::vector<Rational>{1, 2, 3});
    Order o15 = make_order(-15);
    FracIdeal p2(o15, 1, 2, 0, 1);
    /* rank one lattice p2 with H = x xbar / 2: norms on p2 = Z 2 + Z w are
     * 4u^2 + 2uv + 4v^2 >= 4 */
    HermitianLattice L(o15, {p2}, diag(o15, {Rational(1, 2)}));
    CHECK(successive_minima(L) == std::vector<Rational>{2});
}

TEST_CASE("pseudo-basis from generators")
{
    std::mt19937_64 rng(99);
    for (std::int64_t d : {-3, -4, -15, -20, -23}) {
        Order o = make_order(d);
        for (int iter = 0; iter < 20; ++iter) {
            std::size_t g = 1 + static_cast<std::size_t>(iter % 3);
            HermitianLattice L = random_lattice(o, g, rng);
            /* Z-generators of L: ideal generators times pseudo-basis rows,
             * plus redundant sums */
            std::vector<KVector> gens;
            for (std::size_t i = 0; i < g; ++i)
                for (KNumber const & a : {L.ideals()[i].gen0(), L.ideals()[i].gen1()}) {
                    KVector v(g, KNumber(o, 0));
                    v[i] = a;
                    gens.push_back(v);
                }
            KVector extra = gens[0];
            for (std::size_t q = 0; q < g; ++q)
                extra[q] += gens.back()[q];
            gens.push_back(extra);
            PseudoBasis pb = module_pseudo_basis(o, gens);
            HermitianLattice M = lattice_from_pseudo_basis(o, pb, L.gram(), L.basis());
            CHECK(same_module(M, L));
            CHECK(volume(M) == volume(L));
            CHECK(scale(M) == scale(L));
        }
    }
}

TEST_CASE("steinitz normal form")
{
    std::mt19937_64 rng(5);
    for (std::int64_t d : {-15, -20, -23, -84}) {
        Order o = make_order(d);
        auto cg = class_group(o);
        for (int iter = 0; iter < 15; ++iter) {
            std::size_t g = 1 + static_cast<std::size_t>(iter % 3);
            HermitianLattice L = random_lattice(o, g, rng);
            HermitianLattice N = steinitz_normal_form(L, cg);
            for (std::size_t i = 0; i + 1 < g; ++i)
                CHECK(N.ideals()[i].is_unit());
            CHECK(N.ideals()[g - 1] == cg.classes[steinitz(L, cg)]);
            CHECK(same_module(N, L));
            CHECK(volume(N) == volume(L));
            CHECK(scale(N) == scale(L));
        }
    }
}

TEST_CASE("randomized lattice invariants")
{
    std::mt19937_64 rng(20261016);
    std::vector<std::int64_t> discs{-3, -4, -7, -8, -15, -20, -23, -24};
    int integral_count = 0;
    for (int iter = 0; iter < 200; ++iter) {
        Order o = make_order(discs[static_cast<std::size_t>(iter) % discs.size()]);
        std::size_t g = 1 + static_cast<std::size_t>(iter / 8 % 3);
        bool want_integral = iter % 2 == 0;
        HermitianLattice L = want_integral ? random_integral_lattice(o, g, rng) : random_lattice(o, g, rng);
        std::int64_t t = o.omega_trace(), n = o.omega_norm();

        HermitianLattice D = dual(L);
        CHECK(dual(D) == L);
        CHECK(volume(D) == ideal_inv(ideal_conj(volume(L))));

        bool uni = is_unimodular(L);
        CHECK(uni == same_module(D, L));
        CHECK(uni == (is_integral(L) && volume(L).is_unit()));

        if (is_integral(L)) {
            ++integral_count;
            std::int64_t deg = polarization_degree(L);
            CHECK(mpz_class(deg) == hnf_index_oracle(L));
            if (is_modular(L, scale(L)))
                CHECK(Rational(deg) == ideal_norm(volume(L)));
        }

        TraceLattice T = trace_lattice(L);
        CHECK(hermitian_from_trace(T) == L.gram());
        std::size_t dz = T.dim();
        /* w^2 - t w + n = 0 */
        for (std::size_t i = 0; i < dz; ++i)
            for (std::size_t j = 0; j < dz; ++j) {
                std::int64_t sq = 0;
                for (std::size_t k = 0; k < dz; ++k)
                    sq += T.omega_action[i][k] * T.omega_action[k][j];
                CHECK(sq - t * T.omega_action[i][j] + (i == j ? n : 0) == 0);
            }
        /* T(W u, v) = T(u, (tI - W) v) */
        for (std::size_t p = 0; p < dz; ++p)
            for (std::size_t q = 0; q < dz; ++q) {
                Rational lhs = 0, rhs = t * T.gram_z[p][q];
                for (std::size_t k = 0; k < dz; ++k) {
                    lhs += Rational(T.omega_action[k][p]) * T.gram_z[k][q];
                    rhs -= T.gram_z[p][k] * Rational(T.omega_action[k][q]);
                }
                CHECK(lhs == rhs);
            }
        Rational prod_norm = 1;
        for (auto const & a : L.ideals())
            prod_norm *= ideal_norm(a);
        Rational detg = determinant(L.gram()).a();
        Rational expected = prod_norm * prod_norm * detg * detg;
        for (std::size_t i = 0; i < g; ++i)
            expected *= -o.disc();
        CHECK(determinant(T.gram_z) == expected);
        /* positive definiteness transfers: leading minors of gram_z */
        for (std::size_t k = 1; k <= dz; ++k) {
            RatMatrix lead(k, std::vector<Rational>(k));
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j)
                    lead[i][j] = T.gram_z[i][j];
            CHECK(determinant(lead) > 0);
        }
        /* Z-coordinates round trip */
        IntVector z(dz);
        for (std::size_t p = 0; p < dz; ++p)
            z[p] = static_cast<std::int64_t>(rng() % 7) - 3;
        CHECK(T.from_pseudo(T.to_pseudo(z)) == z);
        KVector wz = T.to_pseudo(z);
        for (auto & x : wz)
            x = KNumber(o, 0, 1) * x;
        CHECK(T.from_pseudo(wz) == T.apply_omega(z));
    }
    CHECK(integral_count >= 100);
}

TEST_CASE("indefinite hermitian forms are rejected via the trace form")
{
    /* gram hermitian but not positive definite => trace form not definite */
    Order o = make_order(-4);
    KMatrix g = KMatrix::identity(o, 2);
    g(0, 1) = KNumber(o, 1, 1);
    g(1, 0) = KNumber(o, 1, -1);
    CHECK_THROWS_AS(free_lattice(o, g), std::invalid_argument);
}
