#include "hermlat/serialization.hpp"

namespace hermlat {

using nlohmann::json;

namespace {

std::string rational_text(Rational const & q) { return q.get_str(); }

Rational parse_rational(json const & j, std::string const & path)
{
    if (j.is_number_integer())
        return Rational(j.get<long>());
    if (!j.is_string())
        throw ParseError(path + ": expected a rational string \"p/q\"");
    Rational q;
    if (q.set_str(j.get<std::string>(), 10) != 0 || q.get_den() == 0)
        throw ParseError(path + ": malformed rational \"" + j.get<std::string>() + "\"");
    q.canonicalize();
    return q;
}

json const & field(json const & j, char const * key, std::string const & path)
{
    if (!j.is_object() || !j.contains(key))
        throw ParseError(path + ": missing \"" + key + "\"");
    return j.at(key);
}

KMatrix parse_matrix(Order const & o, json const & j, std::size_t rows, std::size_t cols, std::string const & path)
{
    if (!j.is_array() || j.size() != rows)
        throw ParseError(path + ": expected " + std::to_string(rows) + " rows");
    KMatrix m(o, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        std::string rp = path + "[" + std::to_string(i) + "]";
        if (!j[i].is_array() || j[i].size() != cols)
            throw ParseError(rp + ": expected " + std::to_string(cols) + " entries");
        for (std::size_t k = 0; k < cols; ++k) {
            std::string ep = rp + "[" + std::to_string(k) + "]";
            json const & e = j[i][k];
            m(i, k) = KNumber(o, parse_rational(field(e, "a", ep), ep + ".a"), parse_rational(field(e, "b", ep), ep + ".b"));
        }
    }
    return m;
}

json stats_json(EnumerationStats const & s)
{
    return {{"gram_candidates", s.gram_candidates},
            {"overlattices", s.overlattices},
            {"dedup_tests", s.dedup_tests},
            {"seconds", s.seconds}};
}

}  // namespace

json to_json(KNumber const & x) { return {{"a", rational_text(x.a())}, {"b", rational_text(x.b())}}; }

json to_json(KMatrix const & m)
{
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json r = json::array();
        for (std::size_t k = 0; k < m.cols(); ++k)
            r.push_back(to_json(m(i, k)));
        rows.push_back(std::move(r));
    }
    return rows;
}

json to_json(HermitianLattice const & L)
{
    json ideals = json::array();
    for (auto const & a : L.ideals())
        ideals.push_back({a.den(), a.hnf_a(), a.hnf_b(), a.hnf_c()});
    json j = {{"disc", L.order().disc()}, {"rank", L.rank()}, {"ideals", ideals}, {"gram", to_json(L.gram())}};
    if (!L.basis().is_identity())
        j["basis"] = to_json(L.basis());
    return j;
}

HermitianLattice lattice_from_json(json const & j)
{
    json const & jd = field(j, "disc", "$");
    if (!jd.is_number_integer())
        throw ParseError("$.disc: expected an integer");
    Order o;
    try {
        o = make_order(jd.get<std::int64_t>());
    } catch (std::invalid_argument const & e) {
        throw ParseError(std::string("$.disc: ") + e.what());
    }
    json const & jr = field(j, "rank", "$");
    if (!jr.is_number_unsigned() || jr.get<std::size_t>() == 0)
        throw ParseError("$.rank: expected a positive integer");
    std::size_t g = jr.get<std::size_t>();

    json const & ji = field(j, "ideals", "$");
    if (!ji.is_array() || ji.size() != g)
        throw ParseError("$.ideals: expected " + std::to_string(g) + " ideals");
    std::vector<FracIdeal> ideals;
    for (std::size_t i = 0; i < g; ++i) {
        std::string p = "$.ideals[" + std::to_string(i) + "]";
        json const & e = ji[i];
        if (!e.is_array() || e.size() != 4)
            throw ParseError(p + ": expected [d, a, b, c]");
        for (auto const & x : e)
            if (!x.is_number_integer())
                throw ParseError(p + ": entries must be integers");
        try {
            ideals.emplace_back(o, e[0].get<std::int64_t>(), e[1].get<std::int64_t>(), e[2].get<std::int64_t>(),
                                e[3].get<std::int64_t>());
        } catch (std::invalid_argument const & ex) {
            throw ParseError(p + ": " + ex.what());
        }
    }
    KMatrix gram = parse_matrix(o, field(j, "gram", "$"), g, g, "$.gram");
    try {
        if (j.contains("basis")) {
            json const & jb = j.at("basis");
            std::size_t m = jb.is_array() && !jb.empty() && jb[0].is_array() ? jb[0].size() : 0;
            KMatrix basis = parse_matrix(o, jb, g, m, "$.basis");
            return HermitianLattice(o, std::move(ideals), std::move(gram), std::move(basis));
        }
        return HermitianLattice(o, std::move(ideals), std::move(gram));
    } catch (std::invalid_argument const & e) {
        throw ParseError(std::string("$: ") + e.what());
    }
}

HermitianLattice parse_lattice(std::string const & text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (json::parse_error const & e) {
        throw ParseError("byte " + std::to_string(e.byte) + ": " + e.what());
    }
    return lattice_from_json(j);
}

json to_json(IsometryWitness const & w) { return {{"matrix", to_json(w.matrix)}, {"z_matrix", w.z_matrix}}; }

json to_json(IdealClassGroup const & cg)
{
    json classes = json::array(), gens = json::array();
    for (auto const & a : cg.classes)
        classes.push_back(a.to_string());
    for (auto i : cg.generators)
        gens.push_back(cg.classes[i].to_string());
    return {{"disc", cg.order.disc()},
            {"class_number", cg.class_number()},
            {"exponent", cg.exponent},
            {"classes", classes},
            {"generators", gens},
            {"table", cg.table}};
}

json to_json(ClassList const & list)
{
    json reps = json::array(), prov = json::array();
    for (auto const & L : list.reps)
        reps.push_back(to_json(L));
    for (auto const & p : list.provenance)
        prov.push_back({{"found_at", p.found_at}, {"dedup_tests", p.dedup_tests}});
    return {{"disc", list.order.disc()},
            {"rank", list.rank},
            {"free_only", list.free_only},
            {"indecomposable_only", list.indecomposable_only},
            {"complete", list.complete},
            {"count", list.reps.size()},
            {"reps", reps},
            {"provenance", prov},
            {"stats", stats_json(list.stats)}};
}

json to_json(ModuliReport const & r)
{
    json checks = json::array();
    for (auto const & c : r.checks) {
        json jc = {{"action", c.action}, {"isometric", c.isometric}};
        if (c.witness)
            jc["witness"] = to_json(*c.witness);
        else
            jc["separating_invariant"] = c.separating_invariant;
        checks.push_back(std::move(jc));
    }
    json pre = {{"exponent_ok", r.prechecks.exponent_ok},
                {"steinitz_order_ok", r.prechecks.steinitz_order_ok},
                {"odd_g_free_ok", r.prechecks.odd_g_free_ok}};
    if (!r.prechecks.reason.empty())
        pre["reason"] = r.prechecks.reason;
    json j = {{"lattice", to_json(r.lattice)}, {"verdict", r.verdict}, {"prechecks", pre}, {"checks", checks}};
    if (r.conj_matches_steinitz_action)
        j["conj_matches_steinitz_action"] = *r.conj_matches_steinitz_action;
    return j;
}

json to_json(TableRow const & row)
{
    json j = {{"h", row.class_number}, {"disc", row.disc}, {"g", row.g}, {"complete", row.complete},
              {"seconds", row.seconds}};
    if (row.complete) {
        if (row.g == 2)
            j["P"] = row.p_count;
        j["A_RQ"] = row.q_count;
        j[row.g == 2 ? "A_R" : "A_R_free"] = row.a_count;
    }
    return j;
}

}  // namespace hermlat
