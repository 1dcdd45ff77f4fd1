#include "doctest.h"

#include "hermlat/galois_moduli.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace hermlat;
using namespace hermlat::testing;

namespace {

std::vector<HermitianLattice> sample_lattices(Order const & o, std::mt19937_64 & rng)
{
    std::vector<HermitianLattice> out;
    for (std::size_t g : {1u, 2u, 3u})
        for (int k = 0; k < 3; ++k)
            out.push_back(random_integral_lattice(o, g, rng));
    for (auto const & L : enumerate_unimodular(o, 2).reps)
        out.push_back(L);
    return out;
}

}  // namespace

TEST_CASE("ideal action is a group action up to isometry")
{
    std::mt19937_64 rng(99);
    for (std::int64_t d : {-15, -20, -23, -39}) {
        Order o = make_order(d);
        auto cg = class_group(o);
        for (auto const & L : sample_lattices(o, rng)) {
            FracIdeal a = random_integral_ideal(o, rng, 20), b = random_integral_ideal(o, rng, 20);
            HermitianLattice ab = ideal_act(ideal_mul(a, b), L);
            CHECK(is_isometric(ideal_act(a, ideal_act(b, L)), ab));
            CHECK(is_isometric(ideal_act(FracIdeal::unit(o), L), L));
            /* the action only depends on the class */
            FracIdeal rep = cg.classes[cg.class_of(a)];
            CHECK(is_isometric(ideal_act(a, L), ideal_act(rep, L)));
            /* st(a L) = a^g st(L) */
            FracIdeal ag = FracIdeal::unit(o);
            for (std::size_t i = 0; i < L.rank(); ++i)
                ag = ideal_mul(ag, a);
            CHECK(steinitz(ideal_act(a, L), cg) == cg.class_of(ideal_mul(ag, steinitz_ideal(L))));
            CHECK(is_unimodular(ideal_act(a, L)) == is_unimodular(L));
        }
    }
}

TEST_CASE("principal ideals act trivially")
{
    std::mt19937_64 rng(5);
    for (std::int64_t d : {-3, -4, -7, -15, -24}) {
        Order o = make_order(d);
        std::uniform_int_distribution<int> c(-4, 4);
        for (auto const & L : sample_lattices(o, rng)) {
            KNumber lam(o, c(rng), c(rng));
            if (lam.is_zero())
                lam = KNumber(o, 2, 1);
            HermitianLattice M = ideal_act(FracIdeal::principal(o, lam), L);
            auto r = is_isometric(M, L);
            REQUIRE(r);
            CHECK(verify_witness(M, L, *r.witness));
        }
    }
}

TEST_CASE("conjugation")
{
    std::mt19937_64 rng(6);
    for (std::int64_t d : {-7, -15, -20, -23}) {
        Order o = make_order(d);
        auto cg = class_group(o);
        for (auto const & L : sample_lattices(o, rng)) {
            HermitianLattice C = conj_lattice(L);
            CHECK(conj_lattice(C) == L);
            CHECK(steinitz(C, cg) == cg.class_of(ideal_conj(steinitz_ideal(L))));
            CHECK(is_unimodular(C) == is_unimodular(L));
            CHECK(volume(C) == ideal_conj(volume(L)));
        }
    }
}

TEST_CASE("rank 2: conjugation agrees with the conjugate Steinitz action")
{
    for (std::int64_t d : {-15, -20, -24, -35, -40}) {
        Order o = make_order(d);
        auto cg = class_group(o);
        for (auto const & L : enumerate_unimodular(o, 2).reps) {
            FracIdeal st = steinitz_ideal(L);
            HermitianLattice C = conj_lattice(L);
            CHECK(is_isometric(C, ideal_act(ideal_conj(st), L)));
            CHECK(bool(is_isometric(L, C)) == bool(is_isometric(L, ideal_act(ideal_conj(st), L))));
            auto rep = has_field_of_moduli_Q(L, cg);
            if (rep.prechecks.ok())
                CHECK(rep.conj_matches_steinitz_action == std::optional<bool>(true));
        }
    }
}

TEST_CASE("prechecks")
{
    Order o23 = make_order(-23);
    auto cg23 = class_group(o23);
    for (auto const & L : enumerate_unimodular(o23, 2).reps) {
        Precheck p = moduli_precheck(cg23, L);
        CHECK_FALSE(p.exponent_ok);
        CHECK_FALSE(p.ok());
        CHECK_FALSE(p.reason.empty());
        CHECK_FALSE(has_field_of_moduli_Q(L, cg23).verdict);
    }
    for (auto const & L : enumerate_unimodular(o23, 3, true).reps)
        CHECK(moduli_precheck(cg23, L).ok());

    Order o15 = make_order(-15);
    auto cg15 = class_group(o15);
    for (auto const & L : enumerate_unimodular(o15, 3).reps) {
        Precheck p = moduli_precheck(cg15, L);
        CHECK_FALSE(p.exponent_ok);
        CHECK(p.odd_g_free_ok == (steinitz(L, cg15) == 0));
    }
    for (auto const & L : enumerate_unimodular(o15, 2).reps)
        CHECK(moduli_precheck(cg15, L).ok());
}

TEST_CASE("verdicts")
{
    /* disc -8: the only indecomposable rank 2 class */
    ModuliRun r8 = enumerate_moduli_Q(make_order(-8), 2);
    REQUIRE(r8.reports.size() == 1);
    CHECK(r8.reports[0].verdict);
    for (auto const & c : r8.reports[0].checks)
        if (c.action == "conj")
            CHECK(verify_witness(r8.reports[0].lattice, conj_lattice(r8.reports[0].lattice), *c.witness));

    /* disc -15: one indecomposable class, non-free, defined over Q */
    ModuliRun r15 = enumerate_moduli_Q(make_order(-15), 2);
    REQUIRE(r15.reports.size() == 1);
    CHECK(r15.reports[0].verdict);
    CHECK(r15.count_q_free() == 0);

    /* disc -35: one of five classes */
    ModuliRun r35 = enumerate_moduli_Q(make_order(-35), 2);
    CHECK(r35.reports.size() == 5);
    CHECK(r35.count_q() == 1);
    for (auto const & r : r35.reports)
        if (!r.verdict) {
            bool some_fail = false;
            for (auto const & c : r.checks)
                some_fail |= !c.isometric && !c.separating_invariant.empty();
            CHECK(some_fail);
        }
}

TEST_CASE("full class list gives the same verdicts as generators")
{
    for (std::int64_t d : {-20, -35, -40, -84}) {
        Order o = make_order(d);
        auto cg = class_group(o);
        ModuliOptions all;
        all.all_classes = true;
        for (auto const & L : enumerate_unimodular(o, 2).reps)
            CHECK(has_field_of_moduli_Q(L, cg).verdict == has_field_of_moduli_Q(L, cg, all).verdict);
    }
}
