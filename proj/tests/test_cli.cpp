#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#ifndef BESSELSUB_CLI_PATH
#define BESSELSUB_CLI_PATH "./besselsub"
#endif

namespace {

int run(const std::string& args)
{
    const std::string cmd = std::string(BESSELSUB_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    const int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

std::string slurp(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("sample: determinism, row count, support")
{
    const std::string f1 = "/tmp/besselsub_s1.csv", f2 = "/tmp/besselsub_s2.csv";
    REQUIRE(run("sample --law bessel_at_fpt --gamma 2 --t 1 --count 5000 --seed 7 --output " + f1) == 0);
    REQUIRE(run("sample --law bessel_at_fpt --gamma 2 --t 1 --count 5000 --seed 7 --output " + f2) == 0);
    const std::string a = slurp(f1), b = slurp(f2);
    CHECK(a == b); // byte-identical under equal seeds
    CHECK(a.substr(0, 6) == "value\n");
    CHECK(std::count(a.begin(), a.end(), '\n') == 5001);
    CHECK(a.find("\r") == std::string::npos); // LF endings
    auto all_nonneg = [](const std::string& csv) {
        std::istringstream in(csv);
        std::string line;
        std::getline(in, line); // header
        while (std::getline(in, line))
            if (!line.empty() && std::stod(line) < 0.0) return false;
        return true;
    };
    CHECK(all_nonneg(a)); // nonnegative support
    // iterated FPT draws are nonnegative too
    REQUIRE(run("sample --law iterated_fpt --n 3 --t 1 --count 2000 --seed 3 --output " + f1) == 0);
    CHECK(all_nonneg(slurp(f1)));
}

TEST_CASE("sample: usage errors exit with code 2")
{
    CHECK(run("sample --law no_such_law --count 10") == 2);
    CHECK(run("sample --law drifted_fpt --mu -1 --count 10") == 2);
    CHECK(run("sample --law stable --nu 1.5 --count 10") == 2);
    CHECK(run("nonsense-subcommand") == 2);
}

TEST_CASE("density: grid output with support flags")
{
    const std::string f = "/tmp/besselsub_d1.csv";
    REQUIRE(run("density --law beta_arcsin --gamma 2 --t 1 --grid 0.1:2.0:0.1 --output " + f) == 0);
    std::ifstream in(f);
    std::string line;
    std::getline(in, line);
    CHECK(line == "point,density,cdf,in_support");
    int rows = 0, flagged = 0;
    while (std::getline(in, line)) {
        ++rows;
        if (line.size() >= 2 && line.substr(line.size() - 2) == ",0") ++flagged;
    }
    CHECK(rows == 19);     // half-open grid [0.1, 2.0)
    CHECK(flagged == 10);  // points at or beyond t = 1 are flagged, not dropped
}

TEST_CASE("density: fox and quadrature routes agree through the CLI")
{
    const std::string fq = "/tmp/besselsub_q.csv", ff = "/tmp/besselsub_f.csv";
    REQUIRE(run("density --law iterated_bessel --gamma 2 --t 1 --grid 0.2:2.0:0.3 --method quadrature --output " + fq) == 0);
    REQUIRE(run("density --law iterated_bessel --gamma 2 --t 1 --grid 0.2:2.0:0.3 --method fox --output " + ff) == 0);
    std::ifstream a(fq), b(ff);
    std::string la, lb;
    std::getline(a, la);
    std::getline(b, lb);
    double worst = 0.0;
    while (std::getline(a, la) && std::getline(b, lb)) {
        const double va = std::stod(la.substr(la.find(',') + 1));
        const double vb = std::stod(lb.substr(lb.find(',') + 1));
        worst = std::max(worst, std::abs(va - vb));
    }
    CHECK(worst < 1e-6);
}

TEST_CASE("verify: report schema and exit code")
{
    const std::string f = "/tmp/besselsub_report.json";
    REQUIRE(run("verify --suite normalization --output " + f) == 0);
    const auto j = nlohmann::json::parse(slurp(f));
    CHECK(j["schema_version"] == 1);
    CHECK(j["summary"]["failed"] == 0);
    CHECK(j["checks"].size() >= 14); // every implemented density is covered
    for (const auto& c : j["checks"])
        CHECK(!c["paper_anchor"].get<std::string>().empty());
    CHECK(j.contains("coverage"));
}

TEST_CASE("environment seed is honored")
{
    const std::string f1 = "/tmp/besselsub_e1.csv", f2 = "/tmp/besselsub_e2.csv";
    setenv("BESSEL_SUBORDINATE_SEED", "99", 1);
    REQUIRE(run("sample --law fpt --t 1 --count 1000 --output " + f1) == 0);
    unsetenv("BESSEL_SUBORDINATE_SEED");
    REQUIRE(run("sample --law fpt --t 1 --count 1000 --seed 99 --output " + f2) == 0);
    CHECK(slurp(f1) == slurp(f2));
}

TEST_CASE("config file supplies defaults, flags take precedence")
{
    const std::string cfg = "/tmp/besselsub_cfg.ini";
    {
        std::ofstream out(cfg);
        out << "law=fpt\n" << "t=2.0\n" << "count=50\n" << "seed=9\n";
    }
    const std::string f1 = "/tmp/besselsub_c1.csv", f2 = "/tmp/besselsub_c2.csv";
    REQUIRE(run("sample --config " + cfg + " --output " + f1) == 0);
    REQUIRE(run("sample --law fpt --t 2 --count 50 --seed 9 --output " + f2) == 0);
    CHECK(slurp(f1) == slurp(f2));
    REQUIRE(run("sample --config " + cfg + " --count 3 --output " + f1) == 0);
    const std::string got = slurp(f1);
    CHECK(std::count(got.begin(), got.end(), '\n') == 4); // header + 3 rows
}

TEST_CASE("moments subcommand estimates and refuses")
{
    CHECK(run("moments --law iterated_bessel --gamma 2 --t 1 --order 1 --count 20000 --seed 5") == 0);
    CHECK(run("moments --law bessel_at_fpt --gamma 1 --t 1 --order 1 --count 1000 --seed 5") == 2);
}
