#include "doctest.h"

#include "hermlat/serialization.hpp"
#include "test_support.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

using namespace hermlat;
using namespace hermlat::testing;
namespace fs = std::filesystem;

namespace {

struct Run
{
    int status;
    std::string out;
};

Run run(std::string const & args)
{
    std::string cmd = std::string(HERMLAT_CLI) + " " + args + " 2>/dev/null";
    FILE * p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    char buf[4096];
    for (std::size_t n; (n = fread(buf, 1, sizeof buf, p)) > 0;)
        out.append(buf, n);
    int st = pclose(p);
    return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

fs::path write_temp(std::string const & name, std::string const & text)
{
    fs::path dir = fs::temp_directory_path() / "hermlat_cli_test";
    fs::create_directories(dir);
    fs::path p = dir / name;
    std::ofstream(p) << text;
    return p;
}

/* Golden lines whose discriminant is in discs, in file order. */
std::string golden_subset(std::string const & file, std::vector<std::string> const & discs)
{
    std::ifstream in(std::string(HERMLAT_GOLDEN) + "/" + file);
    std::string line, out;
    std::getline(in, line);
    out = line + "\n";
    while (std::getline(in, line)) {
        std::string disc = line.substr(line.find(',') + 1);
        disc = disc.substr(0, disc.find(','));
        if (std::find(discs.begin(), discs.end(), disc) != discs.end())
            out += line + "\n";
    }
    return out;
}

}  // namespace

TEST_CASE("table csv matches the golden rows")
{
    /* every golden row inside the range appears verbatim */
    Run r = run("table --g 2 --disc-range -84..-3 --format csv --jobs 4");
    CHECK(r.status == 0);
    std::ifstream in(std::string(HERMLAT_GOLDEN) + "/table_g2.csv");
    std::string line;
    std::getline(in, line);
    CHECK(r.out.rfind(line + "\n", 0) == 0);
    std::size_t matched = 0;
    while (std::getline(in, line)) {
        std::int64_t disc = std::stoll(line.substr(line.find(',') + 1));
        if (disc < -84)
            continue;
        INFO(line);
        CHECK(r.out.find("\n" + line + "\n") != std::string::npos);
        ++matched;
    }
    CHECK(matched == 16);

    Run r3 = run("--task table --g 3 --disc-range -11..-8 --format csv");
    CHECK(r3.status == 0);
    CHECK(r3.out == golden_subset("table_g3.csv", {"-8", "-11"}));
}

TEST_CASE("caps give exit code 3 and question marks")
{
    Run r = run("table --g 3 --disc -43 --format csv --max-candidates 1");
    CHECK(r.status == 3);
    CHECK(r.out == "h,disc,A_RQ,A_R_free\n1,-43,?,?\n");
}

TEST_CASE("usage errors give exit code 2")
{
    CHECK(run("table --g 2 --disc -12").status == 2);
    CHECK(run("table --g 5 --disc -3").status == 2);
    CHECK(run("frobnicate").status == 2);
    CHECK(run("table --g 2 --disc-range x..y").status == 2);
    CHECK(run("--format yaml table --disc -3").status == 2);
}

TEST_CASE("isometry exit codes")
{
    Order o = make_order(-7);
    KMatrix g = diag(o, {1, 2});
    KMatrix h = diag(o, {2, 1});
    KMatrix k = diag(o, {1, 3});
    auto a = write_temp("a.json", to_json(free_lattice(o, g)).dump());
    auto b = write_temp("b.json", to_json(free_lattice(o, h)).dump());
    auto c = write_temp("c.json", to_json(free_lattice(o, k)).dump());
    auto bad = write_temp("bad.json", "{\"disc\": -7, \"rank\": 2, \"ideals\": [[1,1,0,1]]");

    Run yes = run("isometry " + a.string() + " " + b.string());
    CHECK(yes.status == 0);
    auto j = nlohmann::json::parse(yes.out);
    CHECK(j["isometric"] == true);
    CHECK(j.contains("witness"));

    Run no = run("isometry " + a.string() + " " + c.string() + " --format text");
    CHECK(no.status == 1);
    CHECK(no.out.rfind("not isometric: ", 0) == 0);

    CHECK(run("isometry " + a.string() + " " + bad.string()).status == 2);
    CHECK(run("isometry " + a.string()).status == 2);
}

TEST_CASE("environment variables set options")
{
    Run r = run("");
    CHECK(r.status == 2);
    Run e = [] {
        std::string cmd = "HERMLAT_TASK=classgroup HERMLAT_DISC=-4027 HERMLAT_FORMAT=csv " + std::string(HERMLAT_CLI);
        FILE * p = popen(cmd.c_str(), "r");
        std::string out;
        char buf[512];
        for (std::size_t n; (n = fread(buf, 1, sizeof buf, p)) > 0;)
            out.append(buf, n);
        int st = pclose(p);
        return Run{WEXITSTATUS(st), out};
    }();
    CHECK(e.status == 0);
    CHECK(e.out.find("-4027,9,3,") != std::string::npos);
}

TEST_CASE("enumerate and moduli outputs")
{
    Run en = run("enumerate --disc -20 --g 2 --indecomposable-only");
    CHECK(en.status == 0);
    auto j = nlohmann::json::parse(en.out);
    CHECK(j["count"] == 3);
    CHECK(j["complete"] == true);
    for (auto const & rep : j["reps"])
        CHECK(is_unimodular(lattice_from_json(rep)));

    Run mo = run("moduli --disc -24 --g 2");
    CHECK(mo.status == 0);
    auto m = nlohmann::json::parse(mo.out);
    CHECK(m["field_of_moduli_Q"] == 3);

    auto f = write_temp("rep.json", j["reps"][0].dump());
    Run one = run("moduli " + f.string());
    CHECK(one.status == 0);
    CHECK(nlohmann::json::parse(one.out).contains("verdict"));
}
