#include <CLI11.hpp>

#include <iostream>

#include "qannulus/commands.hpp"
#include "qannulus/errors.hpp"

using namespace qannulus;

int main(int argc, char** argv) {
    CLI::App app{"Quantum annulus operator toolkit"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir;
    long long seed = -1;
    bool json = false;
    app.add_option("--config", config_path, "Config file (sectioned key = value)");
    app.add_option("--out", out_dir, "Output directory (overrides run.out)");
    app.add_option("--seed", seed, "Random seed (overrides run.seed)")->check(CLI::NonNegativeNumber);
    app.add_flag("--json", json, "Print the JSON summary to stdout");

    auto* verify = app.add_subcommand("verify", "Run the property and lemma suite");
    auto* decay = app.add_subcommand("decay", "Tabulate ||Q_n||_HS over the mode range");
    auto* spectrum = app.add_subcommand("spectrum", "Singular values and block-Dirac spectra");
    auto* kern = app.add_subcommand("kernels", "Dump parametrix kernel entries");
    for (auto* sub : {verify, decay, spectrum, kern}) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        RunConfig cfg = config_path.empty() ? RunConfig{} : load_config(config_path);
        if (seed >= 0) cfg.seed = static_cast<std::uint64_t>(seed);
        const std::filesystem::path out = out_dir.empty() ? cfg.out_dir : std::filesystem::path(out_dir);
        std::ostream& log = json ? std::cerr : std::cout;

        CommandResult r;
        if (verify->parsed()) r = cmd_verify(cfg, out, log);
        else if (decay->parsed()) r = cmd_decay(cfg, out, log);
        else if (spectrum->parsed()) r = cmd_spectrum(cfg, out, log);
        else r = cmd_kernels(cfg, out, log);

        if (json) std::cout << r.summary.dump(2) << '\n';
        return r.exit_code;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const DivergenceError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const SizeError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
