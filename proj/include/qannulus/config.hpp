#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "qannulus/beta.hpp"
#include "qannulus/lattice.hpp"

namespace qannulus {

struct RunConfig {
    WeightParams params;

    // [beta]
    std::string beta_variant = "canonical";  // canonical | sine | table
    double beta_slope = 1.0;
    double sine_amplitude = 0.3;
    long sine_half_width = 20;
    std::filesystem::path beta_table;  // resolved against the config file

    // [run]
    long n_min = -25;
    long n_max = 25;
    long window = 0;  // 0 = auto (tail-bound driven)
    std::uint64_t seed = 7;
    std::filesystem::path out_dir = "out";

    // [lemmas]
    long lem1_n_max = 40;
    long lem2_m_max = 20;
    long lem2_j_max = 20;
    long lem3_n_max = 15;
    long lem3_j_max = 20;

    // [checks]
    long roundtrip_n = 10;
    long roundtrip_count = 100;
    long identity_pairs = 50;
    long covariance_samples = 20;
    long region_n_max = 15;

    // [spectrum]
    std::vector<long> spectrum_windows = {40, 60, 80};
    long spectrum_modes = 15;
    long spectrum_top_k = 50;
    std::string spectrum_operator = "Q";  // Q | D

    // [kernels]
    long kernel_n_min = -3;
    long kernel_n_max = 3;
    long kernel_window = 6;

    BetaFunction beta() const;
};

/// Parses sectioned key=value text. `base` resolves relative paths.
/// Throws ConfigError naming the field and line.
RunConfig parse_config(const std::string& text, const std::filesystem::path& base = ".");
RunConfig load_config(const std::filesystem::path& file);

/// Reads a perturbation table: lines "l, t" with consecutive l; '#' starts a
/// comment. beta(l) = slope * l + t(l), frozen at the end values outside.
BetaFunction read_beta_table(const std::filesystem::path& file, double slope);

}  // namespace qannulus
