// Command-line surface for sampling, density evaluation, moment estimation
// and the verification suites.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "besselsub/laws.hpp"
#include "besselsub/suites.hpp"
#include "besselsub/version.hpp"

namespace fs = std::filesystem;
using namespace besselsub;

namespace {

// 17 significant digits, '.' decimal separator, LF endings
std::string fmt17(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_atomic(const std::string& path, const std::string& content)
{
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open output file " + tmp.string());
        out << content;
    }
    fs::rename(tmp, target);
}

// grid syntax min:max:step, inclusive of min, exclusive of max
std::vector<double> parse_grid(const std::string& s)
{
    double lo, hi, step;
    if (std::sscanf(s.c_str(), "%lf:%lf:%lf", &lo, &hi, &step) != 3 || !(step > 0.0) || !(hi > lo))
        throw CLI::ValidationError("--grid expects min:max:step with step > 0 and max > min");
    std::vector<double> pts;
    for (int k = 0;; ++k) {
        const double x = lo + k * step;
        if (x >= hi - 1e-9 * step) break;
        pts.push_back(x);
    }
    return pts;
}

// flat key=value configuration: each `key=value` line becomes `--key value`
// unless the flag was given explicitly (command line overrides file values;
// '#' starts a comment)
std::vector<std::string> apply_config(const std::vector<std::string>& args)
{
    std::string path;
    std::vector<std::string> out;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) {
            path = args[i + 1];
            ++i;
            continue;
        }
        out.push_back(args[i]);
    }
    if (path.empty()) return out;
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("--config: cannot open " + path);
    std::string line;
    std::vector<std::string> extra;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            const auto a = s.find_first_not_of(" \t\r");
            const auto b = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        const std::string key = "--" + trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key == "--" || value.empty()) continue;
        if (std::find(out.begin(), out.end(), key) != out.end()) continue; // flag wins
        extra.push_back(key);
        extra.push_back(value);
    }
    // insert after the subcommand name (args[0])
    out.insert(out.empty() ? out.end() : out.begin() + 1, extra.begin(), extra.end());
    return out;
}

std::uint64_t env_seed()
{
    if (const char* e = std::getenv("BESSEL_SUBORDINATE_SEED")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(e, &end, 10);
        if (end && *end == '\0') return v;
        throw CLI::ValidationError("BESSEL_SUBORDINATE_SEED must be an integer");
    }
    return vfy::kDefaultSeed;
}

struct CommonOpts {
    laws::LawParams params;
    std::string law;
    std::string convention = "half";
    std::string method = "quadrature";

    void attach(CLI::App* cmd, bool need_law = true)
    {
        if (need_law) cmd->add_option("--law", law, "law identifier")->required();
        cmd->add_option("--gamma", params.gamma, "Bessel order gamma > 0");
        cmd->add_option("--mu", params.mu, "drift mu >= 0");
        cmd->add_option("--nu", params.nu, "stable index in (0,1)");
        cmd->add_option("--n", params.n, "iteration depth n >= 1");
        cmd->add_option("--t", params.t, "process time / level t > 0");
        cmd->add_option("--x0", params.x0, "start point of the transition law");
        cmd->add_option("--convention", convention, "hyperbolic time convention")
            ->check(CLI::IsMember({"half", "whole"}));
        cmd->add_option("--method", method, "iterated-Bessel evaluation route")
            ->check(CLI::IsMember({"quadrature", "fox"}));
    }

    laws::LawParams resolved() const
    {
        laws::LawParams p = params;
        p.convention = (convention == "whole") ? hyp::Convention::whole : hyp::Convention::half;
        p.method = (method == "fox") ? dens::IbMethod::fox : dens::IbMethod::quadrature;
        return p;
    }
};

int cmd_sample(const CommonOpts& o, std::uint64_t seed, std::size_t count,
               const std::string& output, const std::string& format)
{
    const auto spec = laws::make_process_spec(o.law, o.resolved());
    if (!spec) {
        std::cerr << "error: no sampler for law '" << o.law << "'\n";
        return 2;
    }
    const auto batch = sim::sample_batch(*spec, seed, count);
    std::string content;
    if (format == "csv") {
        content.reserve(count * 24 + 8);
        content += "value\n";
        for (double v : batch.values) {
            content += fmt17(v);
            content += '\n';
        }
    } else {
        nlohmann::json j = nlohmann::json::array();
        for (double v : batch.values) j.push_back(v);
        content = j.dump();
        content += '\n';
    }
    if (!output.empty())
        write_atomic(output, content);
    else
        std::cout << content;
    // summary to stdout: mean and quartiles
    std::vector<double> s = batch.values;
    std::sort(s.begin(), s.end());
    double mean = 0.0;
    for (double v : s) mean += v;
    mean /= std::max<std::size_t>(s.size(), 1);
    std::cout << "# n=" << s.size() << " mean=" << fmt17(mean)
              << " q25=" << fmt17(s[s.size() / 4]) << " median=" << fmt17(s[s.size() / 2])
              << " q75=" << fmt17(s[3 * s.size() / 4]) << "\n";
    return 0;
}

int cmd_density(const CommonOpts& o, const std::vector<double>& grid,
                const std::string& output, const std::string& format)
{
    const auto law = laws::make_density(o.law, o.resolved());
    struct RowV { double x, pdf, cdf; bool ok; };
    std::vector<RowV> rows;
    rows.reserve(grid.size());
    for (double x : grid) {
        const bool in_support = x > law.support.lo && x < law.support.hi;
        double p = NAN, c = NAN;
        if (in_support) {
            p = law.pdf(x);
            c = law.cdf(x);
        }
        rows.push_back({x, p, c, in_support});
    }
    std::string content;
    if (format == "csv") {
        content += "point,density,cdf,in_support\n";
        for (const auto& r : rows)
            content += fmt17(r.x) + "," + fmt17(r.pdf) + "," + fmt17(r.cdf) + ","
                       + (r.ok ? "1" : "0") + "\n";
    } else {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& r : rows)
            j.push_back({{"point", r.x}, {"density", r.pdf}, {"cdf", r.cdf}, {"in_support", r.ok}});
        content = j.dump();
        content += '\n';
    }
    if (!output.empty())
        write_atomic(output, content);
    else
        std::cout << content;
    return 0;
}

int cmd_moments(const CommonOpts& o, double order, std::uint64_t seed, std::size_t count)
{
    const auto spec = laws::make_process_spec(o.law, o.resolved());
    if (!spec) {
        std::cerr << "error: no sampler for law '" << o.law << "'\n";
        return 2;
    }
    const auto batch = sim::sample_batch(*spec, seed, count);
    const auto est = mc::moment_estimate(batch, order);
    nlohmann::json j{{"law", o.law}, {"order", est.order}, {"estimate", est.estimate},
                     {"std_error", est.std_error}, {"n", est.n}};
    std::cout << j.dump() << "\n";
    return 0;
}

int cmd_verify(const std::string& suite, const std::string& law, const laws::LawParams& p,
               std::uint64_t seed, const std::string& output)
{
    const auto rep = (suite == "pde" && !law.empty())
                         ? vfy::run_pde_for_law(law, p.gamma, p.mu, seed)
                         : vfy::run_suite(suite, seed);
    auto j = rep.to_json();
    j["coverage"] = nlohmann::json::array();
    for (const auto& [id, anchor] : vfy::coverage_table())
        j["coverage"].push_back({{"check", id}, {"paper_anchor", anchor}});
    const std::string text = j.dump(2) + "\n";
    if (!output.empty())
        write_atomic(output, text);
    else
        std::cout << text;
    for (const auto& c : rep.checks)
        if (!c.pass)
            std::cerr << "FAIL " << c.id << " value=" << c.value << " reference=" << c.reference
                      << " tolerance=" << c.tolerance << "\n";
    std::cerr << "suite '" << suite << "': " << (rep.checks.size() - rep.failures()) << "/"
              << rep.checks.size() << " checks passed\n";
    return rep.failures() == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"iterated-Bessel / subordinated-process toolkit"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    std::uint64_t seed = 0;
    bool seed_given = false;
    std::size_t count = 10000;
    std::string output, format = "csv", grid_spec, suite = "all";
    double order = 1.0;

    CommonOpts sample_opts, density_opts, moment_opts, verify_opts;

    std::string config_path_doc;
    auto add_config_doc = [&](CLI::App* cmd) {
        cmd->add_option("--config", config_path_doc,
                        "flat key=value configuration file (explicit flags take precedence)");
    };
    auto* sample = app.add_subcommand("sample", "draw seeded i.i.d. samples of a law");
    add_config_doc(sample);
    sample_opts.attach(sample);
    sample->add_option("--count", count, "number of draws");
    sample->add_option("--seed", seed, "RNG seed")->each([&](const std::string&) { seed_given = true; });
    sample->add_option("--output", output, "output path (stdout when omitted)");
    sample->add_option("--format,--output-format", format)->check(CLI::IsMember({"csv", "json"}));

    auto* density = app.add_subcommand("density", "evaluate a density/CDF on a grid");
    add_config_doc(density);
    density_opts.attach(density);
    density->add_option("--grid", grid_spec, "grid as min:max:step (inclusive min, exclusive max)")->required();
    density->add_option("--output", output, "output path (stdout when omitted)");
    density->add_option("--format,--output-format", format)->check(CLI::IsMember({"csv", "json"}));

    auto* moments = app.add_subcommand("moments", "Monte Carlo moment estimate with error bar");
    add_config_doc(moments);
    moment_opts.attach(moments);
    moments->add_option("--order", order, "moment order");
    moments->add_option("--count", count, "number of draws");
    moments->add_option("--seed", seed, "RNG seed")->each([&](const std::string&) { seed_given = true; });

    auto* verify = app.add_subcommand("verify", "run a verification suite, write a JSON report");
    add_config_doc(verify);
    verify->add_option("--suite", suite, "suite id")
        ->check(CLI::IsMember({"normalization", "oracles", "pde", "identities", "moments", "all"}));
    verify->add_option("--seed", seed, "statistical suite seed")->each([&](const std::string&) { seed_given = true; });
    verify->add_option("--output", output, "report path (stdout when omitted)");
    std::string verify_law;
    verify->add_option("--law", verify_law, "restrict the pde suite to one law's governing equation");
    verify->add_option("--gamma", verify_opts.params.gamma, "Bessel order for the filtered pde run");
    verify->add_option("--mu", verify_opts.params.mu, "drift for the filtered pde run");

    try {
        std::vector<std::string> args(argv + 1, argv + argc);
        args = apply_config(args);
        // CLI11 parses reversed argument vectors
        std::reverse(args.begin(), args.end());
        app.parse(args);
        if (!seed_given) seed = env_seed();
        if (sample->parsed()) return cmd_sample(sample_opts, seed, count, output, format);
        if (density->parsed()) return cmd_density(density_opts, parse_grid(grid_spec), output, format);
        if (moments->parsed()) return cmd_moments(moment_opts, order, seed, count);
        if (verify->parsed()) return cmd_verify(suite, verify_law, verify_opts.resolved(), seed, output);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
