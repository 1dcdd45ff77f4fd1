#include "hermlat/galois_moduli.hpp"

#include <chrono>

namespace hermlat {

HermitianLattice ideal_act(FracIdeal const & a, HermitianLattice const & L)
{
    std::vector<FracIdeal> ideals;
    for (auto const & ai : L.ideals())
        ideals.push_back(ideal_mul(a, ai));
    Rational inv_norm = 1 / ideal_norm(a);
    return HermitianLattice(L.order(), std::move(ideals), L.gram().scaled(inv_norm), L.basis());
}

HermitianLattice conj_lattice(HermitianLattice const & L)
{
    std::vector<FracIdeal> ideals;
    for (auto const & ai : L.ideals())
        ideals.push_back(ideal_conj(ai));
    return HermitianLattice(L.order(), std::move(ideals), L.gram().conj(), L.basis().conj());
}

Precheck moduli_precheck(IdealClassGroup const & cg, HermitianLattice const & L)
{
    Precheck p;
    std::size_t g = L.rank();
    std::size_t st = steinitz(L, cg);
    if (g % cg.exponent != 0) {
        p.exponent_ok = false;
        p.reason = "class group exponent " + std::to_string(cg.exponent) + " does not divide " + std::to_string(g);
    }
    if (cg.order_of(st) > 2) {
        p.steinitz_order_ok = false;
        if (p.reason.empty())
            p.reason = "Steinitz class has order " + std::to_string(cg.order_of(st));
    }
    if (g % 2 == 1 && st != 0) {
        p.odd_g_free_ok = false;
        if (p.reason.empty())
            p.reason = "odd rank with nontrivial Steinitz class";
    }
    return p;
}

ModuliReport has_field_of_moduli_Q(HermitianLattice const & L, IdealClassGroup const & cg, ModuliOptions const & opts)
{
    ModuliReport rep{L, false, moduli_precheck(cg, L), {}, std::nullopt};
    if (!rep.prechecks.ok())
        return rep;

    PreparedLattice base(L);
    auto record = [&](std::string action, HermitianLattice const & image) {
        IsometryResult r = is_isometric(base, PreparedLattice(image));
        ModuliCheck c;
        c.action = std::move(action);
        c.isometric = bool(r);
        c.witness = std::move(r.witness);
        c.separating_invariant = std::move(r.separating_invariant);
        rep.checks.push_back(std::move(c));
    };

    std::vector<std::size_t> acting;
    if (opts.all_classes) {
        for (std::size_t i = 1; i < cg.class_number(); ++i)
            acting.push_back(i);
    } else {
        acting = cg.generators;
    }
    for (std::size_t i : acting) {
        FracIdeal const & a = cg.classes[i];
        record("ideal:" + a.to_string(), ideal_act(a, L));
    }
    HermitianLattice lc = conj_lattice(L);
    record("conj", lc);

    rep.verdict = true;
    for (auto const & c : rep.checks)
        rep.verdict = rep.verdict && c.isometric;

    if (L.rank() == 2) {
        FracIdeal st = cg.classes[steinitz(L, cg)];
        rep.conj_matches_steinitz_action = bool(is_isometric(lc, ideal_act(ideal_conj(st), L)));
    }
    return rep;
}

std::size_t ModuliRun::count_q() const
{
    std::size_t n = 0;
    for (auto const & r : reports)
        n += r.verdict;
    return n;
}

std::size_t ModuliRun::count_q_free() const
{
    std::size_t n = 0;
    for (auto const & r : reports)
        n += r.verdict && is_principal(steinitz_ideal(r.lattice)).has_value();
    return n;
}

ModuliRun enumerate_moduli_Q(Order const & o, std::size_t g, EnumerationOptions opts, ModuliOptions const & mopts)
{
    if (g % 2 == 1)
        opts.free_only = true;
    opts.indecomposable_only = true;
    ModuliRun run;
    run.classes = enumerate_unimodular(o, g, opts);
    IdealClassGroup cg = class_group(o);
    for (auto const & L : run.classes.reps)
        run.reports.push_back(has_field_of_moduli_Q(L, cg, mopts));
    return run;
}

TableRow table_row(std::int64_t disc, std::size_t g, EnumerationOptions const & opts, ModuliOptions const & mopts)
{
    auto start = std::chrono::steady_clock::now();
    Order o = make_order(disc);
    TableRow row;
    row.disc = disc;
    row.g = g;
    row.class_number = class_group(o).class_number();
    ModuliRun run = enumerate_moduli_Q(o, g, opts, mopts);
    row.complete = run.complete();
    row.a_count = run.classes.reps.size();
    row.q_count = run.count_q();
    row.p_count = run.count_q_free();
    row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return row;
}

}  // namespace hermlat
