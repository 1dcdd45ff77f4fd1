#include "doctest.h"

#include "hermlat/isometry.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace hermlat;
using namespace hermlat::testing;

TEST_CASE("identity and explicit basis changes")
{
    std::mt19937_64 rng(11);
    for (std::int64_t disc : {-3, -4, -7, -15, -20}) {
        Order o = make_order(disc);
        for (int iter = 0; iter < 10; ++iter) {
            std::size_t g = 1 + static_cast<std::size_t>(iter % 3);
            HermitianLattice L = random_integral_lattice(o, g, rng);
            auto self = is_isometric(L, L);
            REQUIRE(self);
            CHECK(verify_witness(L, L, *self.witness));
            /* (R^g, G) vs (R^g, P G P^*) with P in GL_g(R) */
            HermitianLattice F = free_lattice(o, L.gram());
            /* upper times lower unitriangular over R */
            KMatrix up = KMatrix::identity(o, g), lo = KMatrix::identity(o, g);
            for (std::size_t i = 0; i < g; ++i)
                for (std::size_t j = i + 1; j < g; ++j) {
                    up(i, j) = KNumber(o, static_cast<int>(rng() % 5) - 2, static_cast<int>(rng() % 3) - 1);
                    lo(j, i) = KNumber(o, static_cast<int>(rng() % 3) - 1, static_cast<int>(rng() % 3) - 1);
                }
            KMatrix p = up * lo;
            REQUIRE(determinant(p).norm() == 1);
            HermitianLattice F2 = free_lattice(o, p * F.gram() * p.conj_transpose());
            auto r = is_isometric(F, F2);
            REQUIRE(r);
            CHECK(verify_witness(F, F2, *r.witness));
            /* explicit witness: the inverse change P^-1 */
            IsometryWitness explicit_w{inverse(p), {}};
            CHECK(explicit_w.matrix * F2.gram() * explicit_w.matrix.conj_transpose() == F.gram());
        }
    }
}

TEST_CASE("rank and invariant separation")
{
    Order o = make_order(-7);
    auto r = is_isometric(free_lattice(o, diag(o, {1})), free_lattice(o, diag(o, {1, 1})));
    CHECK_FALSE(r);
    CHECK(r.separating_invariant == "rank");
    auto v = is_isometric(free_lattice(o, diag(o, {1, 1})), free_lattice(o, diag(o, {1, 2})));
    CHECK_FALSE(v);
    CHECK(v.separating_invariant == "volume");
    Order o15 = make_order(-15);
    FracIdeal p2(o15, 1, 2, 0, 1);
    HermitianLattice a(o15, {FracIdeal::unit(o15), p2}, diag(o15, {1, Rational(1, 2)}));
    HermitianLattice b = free_lattice(o15, KMatrix::identity(o15, 2));
    auto s = is_isometric(a, b);
    CHECK_FALSE(s);
    CHECK(s.separating_invariant == "steinitz class");
}

TEST_CASE("automorphism group orders")
{
    Order o4 = make_order(-4);
    CHECK(automorphisms(free_lattice(o4, diag(o4, {1}))).order() == 4);
    Order o3 = make_order(-3);
    CHECK(automorphisms(free_lattice(o3, diag(o3, {1}))).order() == 6);
    Order o8 = make_order(-8);
    auto grp = automorphisms(free_lattice(o8, KMatrix::identity(o8, 2)));
    CHECK(grp.order() == 8);

    /* oracle: 2x2 matrices over small elements of R with P P^* = I */
    std::vector<KNumber> small;
    for (int a = -1; a <= 1; ++a)
        for (int b = -1; b <= 1; ++b)
            small.push_back(KNumber(o8, a, b));
    std::size_t count = 0;
    for (auto const & a : small)
        for (auto const & b : small)
            for (auto const & c : small)
                for (auto const & d : small) {
                    KMatrix p = KMatrix::from_rows({{a, b}, {c, d}});
                    if (p * p.conj_transpose() == KMatrix::identity(o8, 2))
                        ++count;
                }
    CHECK(count == 8);

    for (auto const & e : grp.elements)
        CHECK(verify_witness(free_lattice(o8, KMatrix::identity(o8, 2)), free_lattice(o8, KMatrix::identity(o8, 2)),
                             e));
    CHECK(!grp.generators.empty());
    CHECK(grp.generators.size() <= 3);

    CHECK(automorphisms(free_lattice(o3, KMatrix::identity(o3, 2))).order() == 72);
    CHECK(automorphisms(free_lattice(o4, KMatrix::identity(o4, 3))).order() == 384);
}

TEST_CASE("decomposition examples")
{
    Order o = make_order(-7);
    CHECK(decompose(free_lattice(o, KMatrix::identity(o, 2))).size() == 2);
    CHECK(decompose(free_lattice(o, KMatrix::identity(o, 3))).size() == 3);
    CHECK(is_indecomposable(free_lattice(o, diag(o, {5}))));
    /* the rank 2 form with Gram [[2, w],[wbar, 2]] is indecomposable:
     * its minimum 2 is attained only on multiples of the basis vectors,
     * which are not orthogonal */
    KMatrix g(o, 2, 2);
    g(0, 0) = KNumber(o, 2);
    g(1, 1) = KNumber(o, 2);
    g(0, 1) = KNumber(o, 0, 1);
    g(1, 0) = g(0, 1).conj();
    HermitianLattice L = free_lattice(o, g);
    CHECK(is_indecomposable(L));
    CHECK(decompose(orthogonal_sum(L, free_lattice(o, diag(o, {1})))).size() == 2);
}

TEST_CASE("isometry relation properties on a generated pool")
{
    std::mt19937_64 rng(2026);
    std::vector<std::int64_t> discs{-3, -4, -7, -15, -20, -23};
    std::size_t pool_size = 0;
    for (std::int64_t disc : discs) {
        Order o = make_order(disc);
        std::vector<HermitianLattice> pool;
        for (int iter = 0; iter < 6; ++iter) {
            std::size_t g = 1 + static_cast<std::size_t>(iter % 3);
            HermitianLattice L = random_integral_lattice(o, g, rng);
            pool.push_back(L);
            pool.push_back(isometric_copy(L, rng));
            pool.push_back(isometric_copy(pool.back(), rng));
        }
        pool_size += pool.size();
        std::vector<PreparedLattice> prep;
        for (auto const & L : pool)
            prep.emplace_back(L);
        std::size_t n = pool.size();
        std::vector<std::vector<IsometryResult>> res(n, std::vector<IsometryResult>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                res[i][j] = is_isometric(prep[i], prep[j]);
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(res[i][i]);
            /* copies built from the same lattice are isometric */
            if (i % 3 != 0) {
                INFO("disc ", disc, " index ", i, ": ", res[i][i - i % 3].separating_invariant);
                CHECK(res[i][i - i % 3]);
            }
            for (std::size_t j = 0; j < n; ++j) {
                CHECK(bool(res[i][j]) == bool(res[j][i]));
                if (!res[i][j])
                    continue;
                IsometryWitness const & w = *res[i][j].witness;
                CHECK(verify_witness(pool[i], pool[j], w));
                CHECK(verify_witness(pool[j], pool[i], invert(w)));
                CHECK(scale(pool[i]) == scale(pool[j]));
                CHECK(volume(pool[i]) == volume(pool[j]));
                CHECK(is_principal(ideal_mul(steinitz_ideal(pool[i]), ideal_inv(steinitz_ideal(pool[j])))));
                CHECK(polarization_degree(pool[i]) == polarization_degree(pool[j]));
                CHECK(prep[i].theta() == prep[j].theta());
                for (std::size_t k = 0; k < n; ++k) {
                    if (!res[j][k])
                        continue;
                    CHECK(res[i][k]);
                    CHECK(verify_witness(pool[i], pool[k], compose(w, *res[j][k].witness)));
                }
            }
        }
    }
    CHECK(pool_size >= 50);
}

TEST_CASE("automorphism group order is divisible by the unit count")
{
    std::mt19937_64 rng(4);
    for (std::int64_t disc : {-3, -4, -7, -20}) {
        Order o = make_order(disc);
        for (int iter = 0; iter < 6; ++iter) {
            HermitianLattice L = random_integral_lattice(o, 1 + static_cast<std::size_t>(iter % 3), rng);
            auto grp = automorphisms(L);
            CHECK(grp.order() % static_cast<std::size_t>(o.unit_count()) == 0);
            for (auto const & e : grp.generators)
                CHECK(verify_witness(L, L, e));
        }
    }
}

TEST_CASE("decomposition properties")
{
    std::mt19937_64 rng(77);
    for (std::int64_t disc : {-3, -4, -7, -8, -15}) {
        Order o = make_order(disc);
        for (int iter = 0; iter < 6; ++iter) {
            HermitianLattice A = random_integral_lattice(o, 1 + static_cast<std::size_t>(iter % 2), rng);
            HermitianLattice B = random_integral_lattice(o, 1, rng);
            HermitianLattice S = isometric_copy(orthogonal_sum(A, B), rng);
            auto parts = decompose(S);
            REQUIRE(parts.size() >= 2);
            FracIdeal vol = volume(parts[0]);
            HermitianLattice sum = parts[0];
            std::size_t rank = parts[0].rank();
            for (std::size_t k = 1; k < parts.size(); ++k) {
                vol = ideal_mul(vol, volume(parts[k]));
                sum = orthogonal_sum(sum, parts[k]);
                rank += parts[k].rank();
            }
            CHECK(rank == S.rank());
            CHECK(vol == volume(S));
            CHECK(is_isometric(sum, S));
            for (auto const & p : parts)
                CHECK(is_indecomposable(p));
        }
    }
}

TEST_CASE("brute-force oracle agreement for small rank")
{
    std::mt19937_64 rng(31337);
    std::size_t compared = 0, positives = 0;
    for (std::int64_t disc : {-3, -4, -7, -8, -15, -20}) {
        Order o = make_order(disc);
        auto cg = class_group(o);
        std::vector<HermitianLattice> pool;
        /* rank 1 over every class representative, small multiples of the
         * norm-normalized form */
        for (auto const & a : cg.classes)
            for (int k = 1; k <= 4; ++k)
                pool.push_back(HermitianLattice(o, {a}, diag(o, {Rational(k) / ideal_norm(a)})));
        /* rank 2 with small Grams, plus isometric copies */
        std::uniform_int_distribution<int> c(-1, 1), dg(1, 3);
        while (pool.size() < 40) {
            KMatrix g(o, 2, 2);
            g(0, 0) = KNumber(o, dg(rng));
            g(1, 1) = KNumber(o, dg(rng));
            g(0, 1) = KNumber(o, c(rng), c(rng));
            g(1, 0) = g(0, 1).conj();
            if (determinant(g).a() <= 0)
                continue;
            FracIdeal a = cg.classes[rng() % cg.classes.size()];
            KMatrix s = g;
            Rational na = ideal_norm(a);
            /* keep the lattice integral: scale row/column of a by 1/N(a) ... only when free */
            HermitianLattice L = a.is_unit() ? free_lattice(o, g)
                                             : HermitianLattice(o, {FracIdeal::unit(o), a},
                                                                [&] {
                                                                    KMatrix t = s;
                                                                    t(1, 1) = t(1, 1).scaled(1 / na);
                                                                    t(0, 1) = KNumber(o, 0);
                                                                    t(1, 0) = KNumber(o, 0);
                                                                    return t;
                                                                }());
            if (determinant(trace_lattice(L).gram_z) > 400)
                continue;
            pool.push_back(L);
            pool.push_back(isometric_copy(L, rng));
        }
        for (std::size_t i = 0; i < pool.size(); ++i)
            for (std::size_t j = i; j < pool.size(); ++j) {
                if (pool[i].rank() != pool[j].rank())
                    continue;
                if (determinant(trace_lattice(pool[i]).gram_z) > 400)
                    continue;
                bool fast = bool(is_isometric(pool[i], pool[j]));
                bool slow = brute_force_isometric(pool[i], pool[j]);
                CHECK(fast == slow);
                ++compared;
                positives += fast;
            }
    }
    CHECK(compared > 500);
    CHECK(positives > 100);
}
