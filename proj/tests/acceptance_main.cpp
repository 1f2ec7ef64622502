// Acceptance gate: runs every release criterion at its stated tolerance and
// prints one PASS/FAIL line per criterion. Exits nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "besselsub/suites.hpp"

using namespace besselsub;
using Clock = std::chrono::steady_clock;

namespace {

struct Criterion {
    const char* id;
    const char* summary;
    const char* suite;
    std::vector<std::string> prefixes; // check-id prefixes belonging to the criterion
    double budget_seconds;
};

bool id_matches(const std::string& id, const std::vector<std::string>& prefixes)
{
    for (const auto& p : prefixes)
        if (id.rfind(p, 0) == 0) return true;
    return false;
}

} // namespace

int main()
{
    setvbuf(stdout, nullptr, _IONBF, 0);
    const std::vector<Criterion> criteria = {
        {"1", "normalization: every implemented density integrates to 1", "normalization", {"norm."}, 60},
        {"2", "master integral: quadrature vs closed form on the 81-point grid, 1e-8", "oracles", {"mi.grid81"}, 10},
        {"3", "Fox-H route vs double-integral route at 60 points, 1e-6", "oracles", {"fox.grid60", "fox.refine", "fox.shift"}, 120},
        {"4", "sample moments match the Mellin closed forms within 3 sigma", "moments", {"mom.ir.", "mom.baf.mu0.5"}, 90},
        {"5", "distributional identities: two-sample/one-sample KS p > 0.01", "identities",
         {"ks.wrty", "ks.qzc", "ks.lamperti.nu0.5", "ks.s12_fpt", "ks.fpt-ratio"}, 120},
        {"6", "special-case reductions exact to 1e-10", "oracles", {"reduce."}, 30},
        {"7", "PDE residuals: slope >= 1.5, final max < 1e-3, negative controls fail", "pde", {"pde."}, 600},
        {"8", "iterated-FPT Laplace transforms within 3 sigma, n in {1,2,3}", "identities", {"lap.ifpt."}, 60},
        {"9", "hyperbolic dual routes, sinh-mean identity, J3 convention probe", "identities+oracles",
         {"dual.pj2", "dual.pj3", "mc.qazl.", "probe.j3"}, 120},
        {"10", "drifted-FPT lemma consequences and the mu -> 0 limit", "identities+oracles",
         {"mom.mv", "lap.rtg", "drift.mu0limit"}, 60},
        {"11", "Mittag-Leffler relation and the by-product integral identity", "oracles",
         {"ml.", "ident.integral."}, 30},
    };

    printf("acceptance suite (seed %llu)\n", static_cast<unsigned long long>(vfy::kDefaultSeed));
    const auto t0 = Clock::now();
    vfy::VerificationReport norm, oracles, pdes, idents, moms;
    double t_norm, t_orc, t_pde, t_id, t_mom;
    {
        auto a = Clock::now(); norm = vfy::run_normalization(); t_norm = std::chrono::duration<double>(Clock::now() - a).count();
        a = Clock::now(); oracles = vfy::run_oracles(); t_orc = std::chrono::duration<double>(Clock::now() - a).count();
        a = Clock::now(); pdes = vfy::run_pde(); t_pde = std::chrono::duration<double>(Clock::now() - a).count();
        a = Clock::now(); idents = vfy::run_identities(); t_id = std::chrono::duration<double>(Clock::now() - a).count();
        a = Clock::now(); moms = vfy::run_moments(); t_mom = std::chrono::duration<double>(Clock::now() - a).count();
    }
    std::vector<vfy::CheckRecord> all;
    for (const auto* r : {&norm, &oracles, &pdes, &idents, &moms})
        all.insert(all.end(), r->checks.begin(), r->checks.end());

    int failed_criteria = 0;
    for (const auto& c : criteria) {
        int total = 0, passed = 0;
        std::string first_fail;
        for (const auto& chk : all) {
            if (!id_matches(chk.id, c.prefixes)) continue;
            ++total;
            if (chk.pass) ++passed;
            else if (first_fail.empty()) first_fail = chk.id;
        }
        double secs = 0.0;
        if (std::string(c.suite) == "normalization") secs = t_norm;
        else if (std::string(c.suite) == "oracles") secs = t_orc;
        else if (std::string(c.suite) == "pde") secs = t_pde;
        else if (std::string(c.suite) == "moments") secs = t_mom;
        else secs = t_id + t_orc;
        const bool ok = total > 0 && passed == total && secs < c.budget_seconds;
        printf("[%s] criterion %2s: %-68s %3d/%-3d checks, %6.1fs (budget %.0fs)%s\n",
               ok ? "PASS" : "FAIL", c.id, c.summary, passed, total, secs, c.budget_seconds,
               first_fail.empty() ? "" : ("  first failure: " + first_fail).c_str());
        if (!ok) ++failed_criteria;
    }
    const double wall = std::chrono::duration<double>(Clock::now() - t0).count();
    printf("acceptance: %d/%zu criteria passed in %.1fs\n", static_cast<int>(criteria.size()) - failed_criteria,
           criteria.size(), wall);
    return failed_criteria == 0 ? 0 : 1;
}
