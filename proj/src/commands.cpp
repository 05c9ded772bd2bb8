#include "qannulus/commands.hpp"

#include <cmath>
#include <numbers>

#include "qannulus/errors.hpp"
#include "qannulus/report.hpp"
#include "qannulus/suite.hpp"

namespace qannulus {

namespace fs = std::filesystem;

namespace {

void require_hs_finite(const WeightParams& p) {
    // hs_norm_Qn carries the message naming the violated inequality.
    if (!check_admissible(p).hs_finite) (void)hs_norm_Qn(0, p, BetaFunction::canonical());
}

nlohmann::json base_summary(const char* command, const RunConfig& cfg) {
    return {{"schema", 1}, {"command", command}, {"params", params_json(cfg.params)},
            {"beta", cfg.beta_variant}, {"seed", cfg.seed}};
}

}  // namespace

CommandResult cmd_verify(const RunConfig& cfg, const fs::path& out, std::ostream& log) {
    require_hs_finite(cfg.params);
    fs::create_directories(out);
    const BetaFunction beta = cfg.beta();
    const WeightParams& p = cfg.params;

    struct Section {
        const char* name;
        CheckTable table;
    };
    std::vector<Section> sections;
    const auto run = [&](const char* name, CheckTable t) {
        log << "  " << name << ": " << t.passed() << "/" << t.rows.size() << " satisfied, " << t.failed()
            << " failed, " << t.flagged_failed() << " flagged\n";
        sections.push_back({name, std::move(t)});
    };

    log << "verify: a=" << p.a << " b=" << p.b << " gamma=" << p.gamma << " seed=" << cfg.seed << "\n";
    run("lemma_q", check_lem1(cfg.lem1_n_max));
    run("lemma_I", check_lem2(cfg.lem2_m_max, cfg.lem2_j_max, RationalScalar(1, 2)));
    run("lemma_J", check_lem3(cfg.lem3_n_max, cfg.lem3_j_max, {0.5, p.mu_ratio()}));
    run("kernels", suite::kernel_agreement(12, 8));
    run("roundtrips", suite::roundtrips(p, beta, cfg.roundtrip_n, cfg.roundtrip_count, cfg.seed));
    run("algebra", suite::algebra_properties(cfg.identity_pairs, cfg.seed));
    run("derivation", suite::derivation_properties(beta, cfg.identity_pairs, cfg.seed));
    run("implementation", suite::implementation_identity(p, beta, cfg.identity_pairs, cfg.seed));
    run("covariance", suite::d_covariance(p, beta, {std::numbers::pi / 7.0, 1.0, 2.5}, cfg.covariance_samples, cfg.seed));
    run("closure", suite::closure(p, beta, {4, 8, 16, 32, 64}));
    if (check_admissible(p).admissible && beta.is_canonical())
        run("regions", suite::regions(p, cfg.region_n_max));
    run("beta", suite::beta_growth(beta));

    CheckTable all;
    CheckTable flagged;
    nlohmann::json sec = nlohmann::json::object();
    for (const auto& s : sections) {
        sec[s.name] = check_summary(s.table);
        all.append(s.table);
    }
    for (const auto& r : all.rows)
        if (r.flagged) flagged.rows.push_back(r);
    check_csv(all).write(out / "checks.csv");
    check_csv(flagged).write(out / "flagged.csv");

    nlohmann::json j = base_summary("verify", cfg);
    j["sections"] = sec;
    j["totals"] = check_summary(all);
    j["flagged"] = {{"rows", flagged.rows.size()}, {"failed", flagged.flagged_failed()}};
    write_json(j, out / "summary.json");

    const long failed = all.failed();
    log << "verify: " << failed << " unflagged failures, " << all.flagged_failed() << " flagged failures\n";
    return {failed == 0 ? 0 : 1, j};
}

CommandResult cmd_decay(const RunConfig& cfg, const fs::path& out, std::ostream& log) {
    require_hs_finite(cfg.params);
    fs::create_directories(out);
    HsOptions opt;
    opt.M = cfg.window;
    const DecayReport rep = decay_experiment(cfg.params, cfg.beta(), cfg.n_min, cfg.n_max, opt);

    CsvTable csv({"n", "hs_norm", "tail_bound", "upper", "window", "mirror"});
    for (const auto& r : rep.rows)
        csv.add({r.n, r.hs.value(), r.hs.bound(), r.hs.upper(), r.hs.M,
                 r.mirror ? *r.mirror : std::nan("")});
    csv.write(out / "decay.csv");

    const std::string verdict = rep.rows.empty() ? "empty" : rep.decaying() ? "decaying" : "not decaying";
    nlohmann::json j = base_summary("decay", cfg);
    j["n_range"] = {cfg.n_min, cfg.n_max};
    j["rows"] = rep.rows.size();
    j["verdict"] = verdict;
    j["theorem_hypothesis"] = rep.admissible;
    j["onset_positive"] = rep.onset_positive ? nlohmann::json(*rep.onset_positive) : nlohmann::json(nullptr);
    j["onset_negative"] = rep.onset_negative ? nlohmann::json(*rep.onset_negative) : nlohmann::json(nullptr);
    j["max_hs_norm"] = rep.max_norm;
    j["max_mirror_rel_diff"] = rep.max_mirror_rel_diff;
    write_json(j, out / "summary.json");

    log << "decay: " << rep.rows.size() << " modes, verdict " << verdict;
    if (!rep.admissible) log << " (outside the admissibility hypothesis)";
    log << "\n";
    return {0, j};
}

CommandResult cmd_spectrum(const RunConfig& cfg, const fs::path& out, std::ostream& log) {
    fs::create_directories(out);
    const BetaFunction beta = cfg.beta();
    const bool q = cfg.spectrum_operator == "Q";
    const long K = cfg.spectrum_modes;

    std::vector<std::vector<double>> svals;
    nlohmann::json windows = nlohmann::json::array();
    double worst_sym = 0.0;
    for (const long W : cfg.spectrum_windows) {
        const SiteRange sites = SiteRange::symmetric(W);
        const TruncatedOperator T = q ? assemble_Q_matrix(sites, -K, K, beta, cfg.params)
                                      : assemble_D_matrix(sites, -K, K, beta, cfg.params);
        std::vector<double> sv = singular_values(T);
        const std::vector<double> ev = block_dirac_spectrum(T);

        // Spectrum of the odd assembly is +-sigma.
        std::vector<double> pm;
        for (const double s : sv) {
            pm.push_back(s);
            pm.push_back(-s);
        }
        std::sort(pm.begin(), pm.end());
        double sym = 0.0;
        for (std::size_t i = 0; i < ev.size() && i < pm.size(); ++i) sym = std::max(sym, std::abs(ev[i] - pm[i]));
        worst_sym = std::max(worst_sym, sym);

        CsvTable s({"k", "sigma"});
        for (std::size_t k = 0; k < sv.size(); ++k) s.add({static_cast<long>(k + 1), sv[k]});
        s.write(out / ("singular_W" + std::to_string(W) + ".csv"));
        CsvTable e({"k", "eigenvalue"});
        for (std::size_t k = 0; k < ev.size(); ++k) e.add({static_cast<long>(k + 1), ev[k]});
        e.write(out / ("dirac_W" + std::to_string(W) + ".csv"));

        nlohmann::json top = nlohmann::json::array();
        for (long k = 0; k < cfg.spectrum_top_k && k < static_cast<long>(sv.size()); ++k) top.push_back(sv[k]);
        windows.push_back({{"window", W}, {"sites", sites.size()}, {"top", top}, {"dirac_pm_sigma_max_diff", sym}});
        log << "spectrum: W=" << W << " sigma_1=" << (sv.empty() ? 0.0 : sv.front()) << "\n";
        svals.push_back(std::move(sv));
    }

    CsvTable d({"window_from", "window_to", "k", "rel_change"});
    nlohmann::json deltas = nlohmann::json::array();
    for (std::size_t w = 1; w < svals.size(); ++w) {
        double worst = 0.0;
        const long k_max = std::min<long>(cfg.spectrum_top_k, static_cast<long>(std::min(svals[w].size(), svals[w - 1].size())));
        for (long k = 0; k < k_max; ++k) {
            const double a = svals[w - 1][k];
            const double b = svals[w][k];
            const double rel = b != 0.0 ? std::abs(b - a) / std::abs(b) : std::abs(a);
            worst = std::max(worst, rel);
            d.add({cfg.spectrum_windows[w - 1], cfg.spectrum_windows[w], k + 1, rel});
        }
        deltas.push_back({{"from", cfg.spectrum_windows[w - 1]}, {"to", cfg.spectrum_windows[w]}, {"max_rel_change", worst}});
    }
    d.write(out / "stabilization.csv");

    nlohmann::json j = base_summary("spectrum", cfg);
    j["operator"] = cfg.spectrum_operator;
    j["modes"] = {-K, K};
    j["windows"] = windows;
    j["stabilization"] = deltas;
    j["dirac_symmetric"] = worst_sym <= 1e-10;
    write_json(j, out / "summary.json");
    return {0, j};
}

CommandResult cmd_kernels(const RunConfig& cfg, const fs::path& out, std::ostream& log) {
    fs::create_directories(out);
    const ModeOperatorSpec base{0, cfg.beta(), cfg.params};
    const auto entries = kernels::kernel_sweep(base, cfg.kernel_n_min, cfg.kernel_n_max, cfg.kernel_window);
    CsvTable csv({"n", "l", "j", "sign", "log_magnitude"});
    for (const auto& e : entries)
        csv.add({e.n, e.l, e.j, static_cast<long>(e.k.sign), e.k.sign == 0 ? 0.0 : e.k.log_magnitude});
    csv.write(out / "kernels.csv");
    nlohmann::json j = base_summary("kernels", cfg);
    j["entries"] = entries.size();
    write_json(j, out / "summary.json");
    log << "kernels: " << entries.size() << " entries\n";
    return {0, j};
}

}  // namespace qannulus
