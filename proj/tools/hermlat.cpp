#include "hermlat/serialization.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

using namespace hermlat;
using nlohmann::json;

namespace {

enum Exit
{
    ok = 0,
    negative = 1,
    usage = 2,
    incomplete = 3
};

struct RunConfig
{
    std::string task;
    std::vector<std::string> files;
    std::optional<std::int64_t> disc;
    std::string disc_range;
    std::size_t g = 2;
    bool free_only = false;
    bool indecomposable_only = false;
    std::string format;
    double max_seconds = 300;
    std::uint64_t max_candidates = 0;
    std::optional<std::uint64_t> seed;
    std::string out;
    bool force = false;
    unsigned jobs = 0;
};

struct UsageError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

std::vector<std::int64_t> discriminants(RunConfig const & cfg)
{
    std::vector<std::int64_t> out;
    if (cfg.disc) {
        std::string why = fundamental_discriminant_failure(*cfg.disc);
        if (!why.empty())
            throw UsageError("--disc " + std::to_string(*cfg.disc) + ": " + why);
        out.push_back(*cfg.disc);
    }
    if (!cfg.disc_range.empty()) {
        auto dots = cfg.disc_range.find("..");
        if (dots == std::string::npos)
            throw UsageError("--disc-range expects A..B");
        std::int64_t a = 0, b = 0;
        try {
            std::size_t pa = 0, pb = 0;
            std::string sa = cfg.disc_range.substr(0, dots), sb = cfg.disc_range.substr(dots + 2);
            a = std::stoll(sa, &pa);
            b = std::stoll(sb, &pb);
            if (pa != sa.size() || pb != sb.size())
                throw std::invalid_argument("trailing characters");
        } catch (std::exception const &) {
            throw UsageError("--disc-range: cannot parse \"" + cfg.disc_range + "\"");
        }
        if (a > b)
            std::swap(a, b);
        if (b >= 0)
            throw UsageError("--disc-range must be negative");
        for (std::int64_t d = b; d >= a; --d)
            if (fundamental_discriminant_failure(d).empty())
                out.push_back(d);
    }
    if (out.empty())
        throw UsageError("give --disc or --disc-range");
    return out;
}

EnumerationOptions enumeration_options(RunConfig const & cfg)
{
    EnumerationOptions o;
    o.free_only = cfg.free_only;
    o.indecomposable_only = cfg.indecomposable_only;
    o.seed = cfg.seed;
    if (!cfg.force) {
        o.max_seconds = cfg.max_seconds;
        o.max_candidates = cfg.max_candidates;
    }
    return o;
}

void check_rank(RunConfig const & cfg, std::size_t lo, std::size_t hi)
{
    if (cfg.g < lo || cfg.g > hi)
        throw UsageError("--g must be in " + std::to_string(lo) + ".." + std::to_string(hi));
}

std::string read_file(std::string const & path)
{
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

HermitianLattice load_lattice(std::string const & path)
{
    try {
        return parse_lattice(read_file(path));
    } catch (ParseError const & e) {
        throw UsageError(path + ": " + e.what());
    }
}

int cmd_classgroup(RunConfig const & cfg, std::ostream & out)
{
    auto discs = discriminants(cfg);
    std::string fmt = cfg.format.empty() ? "json" : cfg.format;
    json all = json::array();
    if (fmt == "csv")
        out << "disc,h,exponent,generators\n";
    for (auto d : discs) {
        IdealClassGroup cg = class_group(make_order(d));
        if (fmt == "json") {
            all.push_back(to_json(cg));
        } else {
            std::string gens;
            for (auto i : cg.generators)
                gens += (gens.empty() ? "" : " ") + cg.classes[i].to_string();
            if (fmt == "csv")
                out << d << "," << cg.class_number() << "," << cg.exponent << ",\"" << gens << "\"\n";
            else
                out << "disc " << d << "  h " << cg.class_number() << "  exponent " << cg.exponent
                    << "  generators " << (gens.empty() ? "-" : gens) << "\n";
        }
    }
    if (fmt == "json")
        out << (discs.size() == 1 ? all[0] : all).dump(2) << "\n";
    return ok;
}

int cmd_enumerate(RunConfig const & cfg, std::ostream & out)
{
    check_rank(cfg, 1, 3);
    auto discs = discriminants(cfg);
    std::string fmt = cfg.format.empty() ? "json" : cfg.format;
    bool complete = true;
    json all = json::array();
    if (fmt == "csv")
        out << "disc,index,steinitz,lattice\n";
    for (auto d : discs) {
        Order o = make_order(d);
        ClassList list = enumerate_unimodular(o, cfg.g, enumeration_options(cfg));
        complete = complete && list.complete;
        IdealClassGroup cg = class_group(o);
        if (fmt == "json") {
            all.push_back(to_json(list));
        } else if (fmt == "csv") {
            for (std::size_t k = 0; k < list.reps.size(); ++k)
                out << d << "," << k << "," << cg.classes[steinitz(list.reps[k], cg)].to_string() << ",\""
                    << canonical_text(list.reps[k]) << "\"\n";
        } else {
            out << "disc " << d << "  g " << cfg.g << "  classes " << (list.complete ? "" : ">=") << list.reps.size()
                << "\n";
            for (auto const & L : list.reps)
                out << "  " << canonical_text(L) << "\n";
        }
    }
    if (fmt == "json")
        out << (discs.size() == 1 ? all[0] : all).dump(2) << "\n";
    return complete ? ok : incomplete;
}

int cmd_moduli(RunConfig const & cfg, std::ostream & out)
{
    std::string fmt = cfg.format.empty() ? "json" : cfg.format;
    if (!cfg.files.empty()) {
        json all = json::array();
        for (auto const & f : cfg.files) {
            HermitianLattice L = load_lattice(f);
            if (!is_unimodular(L))
                throw UsageError(f + ": lattice is not unimodular");
            all.push_back(to_json(has_field_of_moduli_Q(L, class_group(L.order()))));
        }
        out << (all.size() == 1 ? all[0] : all).dump(2) << "\n";
        return ok;
    }
    check_rank(cfg, 2, 3);
    auto discs = discriminants(cfg);
    bool complete = true;
    json all = json::array();
    for (auto d : discs) {
        Order o = make_order(d);
        ModuliRun run = enumerate_moduli_Q(o, cfg.g, enumeration_options(cfg));
        complete = complete && run.complete();
        if (fmt == "json") {
            json reports = json::array();
            for (auto const & r : run.reports)
                reports.push_back(to_json(r));
            all.push_back({{"disc", d},
                           {"g", cfg.g},
                           {"complete", run.complete()},
                           {"classes", run.reports.size()},
                           {"field_of_moduli_Q", run.count_q()},
                           {"reports", reports}});
        } else {
            IdealClassGroup cg = class_group(o);
            for (std::size_t k = 0; k < run.reports.size(); ++k) {
                auto const & r = run.reports[k];
                out << d << (fmt == "csv" ? "," : "  ") << k << (fmt == "csv" ? "," : "  ")
                    << cg.classes[steinitz(r.lattice, cg)].to_string() << (fmt == "csv" ? "," : "  ")
                    << (r.verdict ? "true" : "false") << (fmt == "csv" ? "," : "  ")
                    << (r.prechecks.ok() ? "" : r.prechecks.reason) << "\n";
            }
        }
    }
    if (fmt == "json")
        out << (discs.size() == 1 ? all[0] : all).dump(2) << "\n";
    return complete ? ok : incomplete;
}

int cmd_isometry(RunConfig const & cfg, std::ostream & out)
{
    if (cfg.files.size() != 2)
        throw UsageError("isometry needs two lattice files");
    HermitianLattice a = load_lattice(cfg.files[0]);
    HermitianLattice b = load_lattice(cfg.files[1]);
    IsometryResult r = is_isometric(a, b);
    std::string fmt = cfg.format.empty() ? "json" : cfg.format;
    if (fmt == "json") {
        json j = {{"isometric", bool(r)}};
        if (r)
            j["witness"] = to_json(*r.witness);
        else
            j["separating_invariant"] = r.separating_invariant;
        out << j.dump(2) << "\n";
    } else {
        out << (r ? "isometric" : "not isometric: " + r.separating_invariant) << "\n";
    }
    return r ? ok : negative;
}

int cmd_table(RunConfig const & cfg, std::ostream & out)
{
    check_rank(cfg, 2, 3);
    auto discs = discriminants(cfg);
    std::string fmt = cfg.format.empty() ? "text" : cfg.format;
    EnumerationOptions opts = enumeration_options(cfg);

    /* rows run on a worker pool; output order does not depend on it */
    std::vector<std::optional<TableRow>> rows(discs.size());
    std::vector<std::string> errors(discs.size());
    std::atomic<std::size_t> next{0};
    unsigned workers = cfg.jobs ? cfg.jobs : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, static_cast<unsigned>(discs.size()));
    auto work = [&] {
        for (std::size_t i; (i = next++) < discs.size();) {
            try {
                rows[i] = table_row(discs[i], cfg.g, opts);
            } catch (std::exception const & e) {
                errors[i] = e.what();
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back(work);
    for (auto & t : pool)
        t.join();

    std::vector<std::size_t> order(discs.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    auto h_of = [&](std::size_t i) { return rows[i] ? rows[i]->class_number : class_group(make_order(discs[i])).class_number(); };
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return std::pair(h_of(x), -discs[x]) < std::pair(h_of(y), -discs[y]);
    });

    bool all_complete = true;
    bool g2 = cfg.g == 2;
    json arr = json::array();
    if (fmt == "csv")
        out << (g2 ? "h,disc,P,A_RQ,A_R\n" : "h,disc,A_RQ,A_R_free\n");
    if (fmt == "text")
        out << (g2 ? "h_R  Δ        𝒫    #A_{R,ℚ}  #A_R\n" : "h_R  Δ        #A_{R,ℚ}  #A_R^free\n");
    for (std::size_t i : order) {
        bool done = rows[i] && rows[i]->complete;
        all_complete = all_complete && done;
        auto cell = [&](std::size_t v) { return done ? std::to_string(v) : std::string("?"); };
        std::size_t h = h_of(i);
        if (!errors[i].empty())
            std::cerr << "disc " << discs[i] << ": " << errors[i] << "\n";
        if (fmt == "json") {
            json j = rows[i] ? to_json(*rows[i]) : json{{"h", h}, {"disc", discs[i]}, {"g", cfg.g}, {"complete", false}};
            if (!errors[i].empty())
                j["error"] = errors[i];
            arr.push_back(std::move(j));
        } else if (fmt == "csv") {
            out << h << "," << discs[i] << ",";
            if (g2)
                out << cell(rows[i] ? rows[i]->p_count : 0) << ",";
            out << cell(rows[i] ? rows[i]->q_count : 0) << "," << cell(rows[i] ? rows[i]->a_count : 0) << "\n";
        } else {
            out << std::left << std::setw(5) << h << std::setw(9) << discs[i];
            if (g2)
                out << std::setw(5) << cell(rows[i] ? rows[i]->p_count : 0);
            out << std::setw(10) << cell(rows[i] ? rows[i]->q_count : 0) << cell(rows[i] ? rows[i]->a_count : 0)
                << "\n";
        }
    }
    if (fmt == "json")
        out << arr.dump(2) << "\n";
    return all_complete ? ok : incomplete;
}

}  // namespace

int main(int argc, char ** argv)
{
    CLI::App app{"Unimodular hermitian lattices over imaginary quadratic orders and their fields of moduli"};
    RunConfig cfg;
    std::vector<std::string> positional;
    std::optional<std::uint64_t> seed;

    app.add_option("--task", cfg.task, "classgroup | enumerate | moduli | isometry | table")
        ->envname("HERMLAT_TASK")
        ->check(CLI::IsMember({"classgroup", "enumerate", "moduli", "isometry", "table"}));
    app.add_option("args", positional, "[task] [lattice files]");
    app.add_option("--disc", cfg.disc, "fundamental negative discriminant")->envname("HERMLAT_DISC");
    app.add_option("--disc-range", cfg.disc_range, "A..B, every fundamental discriminant in between")
        ->envname("HERMLAT_DISC_RANGE");
    app.add_option("--g", cfg.g, "rank")->envname("HERMLAT_G");
    app.add_flag("--free-only", cfg.free_only, "only lattices with trivial Steinitz class")->envname("HERMLAT_FREE_ONLY");
    app.add_flag("--indecomposable-only", cfg.indecomposable_only, "only indecomposable lattices")
        ->envname("HERMLAT_INDECOMPOSABLE_ONLY");
    app.add_option("--format", cfg.format, "json | csv | text")
        ->envname("HERMLAT_FORMAT")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--max-seconds", cfg.max_seconds, "wall clock cap per discriminant")
        ->envname("HERMLAT_MAX_SECONDS")
        ->capture_default_str();
    app.add_option("--max-candidates", cfg.max_candidates, "cap on Gram candidates per discriminant (0: none)")
        ->envname("HERMLAT_MAX_CANDIDATES");
    app.add_option("--seed", seed, "shuffle the candidate order")->envname("HERMLAT_SEED");
    app.add_option("--out", cfg.out, "write output here instead of stdout")->envname("HERMLAT_OUT");
    app.add_flag("--force", cfg.force, "lift the resource caps")->envname("HERMLAT_FORCE");
    app.add_option("--jobs", cfg.jobs, "worker threads for table rows (0: all cores)")->envname("HERMLAT_JOBS");

    try {
        app.parse(argc, argv);
    } catch (CLI::ParseError const & e) {
        return app.exit(e) == 0 ? ok : usage;
    }
    cfg.seed = seed;
    if (cfg.task.empty()) {
        if (positional.empty()) {
            std::cerr << "no task given\n" << app.help();
            return usage;
        }
        cfg.task = positional.front();
        positional.erase(positional.begin());
    }
    cfg.files = positional;

    std::ofstream file;
    if (!cfg.out.empty()) {
        file.open(cfg.out);
        if (!file) {
            std::cerr << "cannot write " << cfg.out << "\n";
            return usage;
        }
    }
    std::ostream & out = cfg.out.empty() ? std::cout : file;
    try {
        if (cfg.task == "classgroup")
            return cmd_classgroup(cfg, out);
        if (cfg.task == "enumerate")
            return cmd_enumerate(cfg, out);
        if (cfg.task == "moduli")
            return cmd_moduli(cfg, out);
        if (cfg.task == "isometry")
            return cmd_isometry(cfg, out);
        if (cfg.task == "table")
            return cmd_table(cfg, out);
        std::cerr << "unknown task \"" << cfg.task << "\"\n";
        return usage;
    } catch (UsageError const & e) {
        std::cerr << e.what() << "\n";
        return usage;
    }
}
