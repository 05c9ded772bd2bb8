// Acceptance run: one PASS/FAIL line per criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "qannulus/bounds.hpp"
#include "qannulus/commands.hpp"
#include "qannulus/config.hpp"
#include "qannulus/full_operator.hpp"
#include "qannulus/kernels.hpp"
#include "qannulus/suite.hpp"

using namespace qannulus;
namespace fs = std::filesystem;

namespace {

constexpr std::uint64_t kSeed = 7;

struct Outcome {
    bool ok = false;
    std::string detail;
};

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

const WeightParams& params() {
    static const WeightParams p = WeightParams::make(2.0, 1.0, 3.0);
    return p;
}

long failures(const CheckTable& t, const std::function<bool(const BoundReport&)>& pick) {
    long bad = 0;
    for (const auto& r : t.rows)
        if (pick(r) && !r.satisfied) ++bad;
    return bad;
}

double worst(const CheckTable& t) {
    double w = 0.0;
    for (const auto& r : t.rows) w = std::max(w, r.computed);
    return w;
}

Outcome lemma_q() {
    const CheckTable t = check_lem1(40);
    const auto count = [&](const char* name, bool skip_l0) {
        return failures(t, [&](const BoundReport& r) { return r.name == name && !(skip_l0 && r.index[1] == 0); });
    };
    const long id = count("lem1.identity", false);
    const long e1 = count("lem1.est1", false);
    const long e2 = count("lem1.est2", true);
    const long e3 = count("lem1.est3.proof", false);
    return {id + e1 + e2 + e3 == 0,
            fmt("identity %ld, est1 %ld, est2(l>=1) %ld, est3 proof-form %ld violations", id, e1, e2, e3)};
}

Outcome lemma_I() {
    const CheckTable t = check_lem2(20, 20, RationalScalar(1, 2));
    long exact_bad = 0, maj_bad = 0, maj_zero = 0, maj_rows = 0;
    for (const auto& r : t.rows) {
        if (r.name == "lem2.majorant" || r.name == "lem2.majorant.equality") {
            ++maj_rows;
            if (!(r.majorant - r.computed > 0.0) && r.computed <= r.majorant) ++maj_zero;
            if (!(r.majorant - r.computed > 0.0)) ++maj_bad;
        } else if (!r.satisfied) {
            ++exact_bad;
        }
    }
    return {exact_bad == 0 && maj_bad == 0,
            fmt("exact identities %ld failed; majorant margin<=0 in %ld/%ld cells (%ld of them equalities)", exact_bad,
                maj_bad, maj_rows, maj_zero)};
}

Outcome lemma_J() {
    const CheckTable t = check_lem3(15, 20, {0.5, std::exp(-1.5)});
    const long bad = failures(t, [](const BoundReport&) { return true; });
    return {bad == 0, fmt("%ld/%zu violations, worst margin %.4g", bad, t.rows.size(), t.worst_margin())};
}

Outcome roundtrip() {
    const CheckTable t = suite::roundtrips(params(), BetaFunction::canonical(), 10, 100, kSeed, 1e-10);
    const long bad = failures(t, [](const BoundReport&) { return true; });
    return {bad == 0, fmt("%ld/%zu over 1e-10, worst relative %.3g", bad, t.rows.size(), worst(t))};
}

Outcome implementation() {
    const BetaFunction beta = BetaFunction::canonical();
    const CheckTable id = suite::implementation_identity(params(), beta, 50, kSeed, 1e-10);
    const CheckTable der = suite::derivation_properties(beta, 50, kSeed, 1e-12);
    const long b1 = failures(id, [](const BoundReport&) { return true; });
    const long b2 = failures(der, [](const BoundReport&) { return true; });
    return {b1 + b2 == 0, fmt("identity worst %.3g (%ld bad), Leibniz/covariance worst %.3g (%ld bad)", worst(id), b1,
                              worst(der), b2)};
}

Outcome covariance() {
    const CheckTable t = suite::d_covariance(params(), BetaFunction::canonical(),
                                             {std::numbers::pi / 7.0, 1.0, 2.5}, 20, kSeed, 1e-12);
    const long bad = failures(t, [](const BoundReport&) { return true; });
    return {bad == 0, fmt("%ld/%zu over 1e-12, worst %.3g", bad, t.rows.size(), worst(t))};
}

Outcome decay_verdict(const DecayReport& rep) {
    bool finite = true;
    for (const auto& r : rep.rows) finite = finite && std::isfinite(r.hs.upper());
    const auto onset_ok = [](const std::optional<long>& o) { return o && *o <= 10; };
    const double edge = std::max(rep.rows.front().hs.upper(), rep.rows.back().hs.upper());
    const bool small_edges = edge < 1e-3 * rep.max_norm;
    const auto show = [](const std::optional<long>& o) { return o ? std::to_string(*o) : std::string("none"); };
    return {finite && onset_ok(rep.onset_positive) && onset_ok(rep.onset_negative) && small_edges,
            fmt("finite %s; onset n>=%s, n<=-%s; ||Q_-25|| %.6g, ||Q_25|| %.6g, max %.6g", finite ? "yes" : "no",
                show(rep.onset_positive).c_str(), show(rep.onset_negative).c_str(), rep.rows.front().hs.value(),
                rep.rows.back().hs.value(), rep.max_norm)};
}

Outcome hs_decay() {
    return decay_verdict(decay_experiment(params(), BetaFunction::canonical(), -25, 25));
}

Outcome regions() {
    long bad = 0;
    std::string where;
    const auto reps = kernels::ordered_map(16, [](long n) { return region_bounds(n, params()); });
    for (const auto& rep : reps) {
        if (!rep.dominance()) {
            ++bad;
            where += fmt(" n=%ld:dominance", rep.n);
        }
        for (int k = kernels::kC1; k <= kernels::kD2; ++k) {
            if (rep.upper(k) > rep.majorant[k]) {
                ++bad;
                where += fmt(" n=%ld:%s(%.4g>%.4g)", rep.n, kernels::kRegionNames[k], rep.upper(k), rep.majorant[k]);
            }
        }
    }
    return {bad == 0, fmt("%ld violations for n in [0,15]", bad) + where};
}

Outcome spectrum() {
    const BetaFunction beta = BetaFunction::canonical();
    std::vector<std::vector<double>> sv;
    double dirac = 0.0;
    for (const long W : {40L, 60L, 80L}) {
        const TruncatedOperator T = assemble_Q_matrix(SiteRange::symmetric(W), -15, 15, beta, params());
        sv.push_back(singular_values(T));
        std::vector<double> pm;
        for (const double s : sv.back()) {
            pm.push_back(s);
            pm.push_back(-s);
        }
        std::sort(pm.begin(), pm.end());
        const std::vector<double> ev = block_dirac_spectrum(T);
        if (ev.size() != pm.size()) return {false, "block-Dirac spectrum has the wrong size"};
        for (std::size_t i = 0; i < ev.size(); ++i) dirac = std::max(dirac, std::abs(ev[i] - pm[i]));
    }
    double change = 0.0;
    for (std::size_t k = 0; k < 50; ++k) change = std::max(change, std::abs(sv[2][k] - sv[1][k]) / sv[2][k]);
    const double ratio = sv[2][49] / sv[2][0];
    return {change < 1e-3 && ratio < 1e-2 && dirac <= 1e-10,
            fmt("rel change 60->80 %.3g, sigma_50/sigma_1 %.3g, Dirac vs +-sigma %.3g", change, ratio, dirac)};
}

Outcome closure() {
    const auto rows = closure_approx_check({4, 8, 16, 32, 64}, BetaFunction::canonical(), params());
    bool dec = true;
    for (std::size_t i = 1; i < rows.size(); ++i)
        dec = dec && rows[i].w_prime.value + rows[i].w_prime.error < rows[i - 1].w_prime.value - rows[i - 1].w_prime.error;
    const double last = rows.back().w_prime.value + rows.back().w_prime.error;
    return {dec && last < 1e-6, fmt("strictly decreasing %s, N=64 residual %.3g", dec ? "yes" : "no", last)};
}

Outcome perturbed() {
    const BetaFunction beta = BetaFunction::sine_perturbed(0.3, 20);
    const CheckTable t = suite::roundtrips(params(), beta, 10, 100, kSeed, 1e-10);
    const long bad = failures(t, [](const BoundReport&) { return true; });
    const Outcome d = decay_verdict(decay_experiment(params(), beta, -25, 25));
    return {bad == 0 && d.ok, fmt("roundtrips %ld bad (worst %.3g); decay: ", bad, worst(t)) + d.detail};
}

std::string slurp(const fs::path& f) {
    std::ifstream in(f, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Outcome determinism() {
    const fs::path root = fs::temp_directory_path() / ("qannulus_accept_" + std::to_string(::getpid()));
    RunConfig cfg;
    cfg.seed = kSeed;
    std::ostringstream log;
    (void)cmd_verify(cfg, root / "a", log);
    (void)cmd_verify(cfg, root / "b", log);
    bool same = true;
    for (const char* f : {"checks.csv", "flagged.csv"}) {
        const std::string x = slurp(root / "a" / f);
        same = same && !x.empty() && x == slurp(root / "b" / f);
    }
    fs::remove_all(root);
    return {same, same ? "checks.csv and flagged.csv byte-identical" : "outputs differ"};
}

struct Criterion {
    int id;
    const char* name;
    double budget_s;
    Outcome (*run)();
};

}  // namespace

int main() {
    const Criterion all[] = {
        {1, "exact q_n identity and estimates", 30, lemma_q},
        {2, "exact I_m suite at x=1/2", 10, lemma_I},
        {3, "J_n majorant", 30, lemma_J},
        {4, "D_n Q_n roundtrips", 60, roundtrip},
        {5, "implementation identity, Leibniz, covariance of delta", 30, implementation},
        {6, "rotation covariance of D", 10, covariance},
        {7, "HS decay", 120, hs_decay},
        {8, "region dominance and majorants", 120, regions},
        {9, "compactness evidence", 300, spectrum},
        {10, "closure", 10, closure},
        {11, "perturbed beta", 120, perturbed},
        {12, "determinism", 60, determinism},
    };
    int failed = 0;
    for (const auto& c : all) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool in_time = s < c.budget_s;
        const bool pass = o.ok && in_time;
        if (!pass) ++failed;
        std::printf("[%s] criterion %2d: %s (%.2fs of %.0fs) %s%s\n", pass ? "PASS" : "FAIL", c.id, c.name, s,
                    c.budget_s, o.detail.c_str(), in_time ? "" : " [over time budget]");
        std::fflush(stdout);
    }
    std::printf("%d of 12 criteria failed\n", failed);
    return failed == 0 ? 0 : 1;
}
