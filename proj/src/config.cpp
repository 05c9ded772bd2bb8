#include "qannulus/config.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "qannulus/errors.hpp"

namespace qannulus {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double to_double(const std::string& field, int line, const std::string& v) {
    double d = 0.0;
    const auto* end = v.data() + v.size();
    const auto [ptr, ec] = std::from_chars(v.data(), end, d);
    if (ec != std::errc{} || ptr != end) throw ConfigError(field, line, "expected a decimal number, got '" + v + "'");
    return d;
}

long to_long(const std::string& field, int line, const std::string& v) {
    long d = 0;
    const auto* end = v.data() + v.size();
    const auto [ptr, ec] = std::from_chars(v.data(), end, d);
    if (ec != std::errc{} || ptr != end) throw ConfigError(field, line, "expected an integer, got '" + v + "'");
    return d;
}

std::vector<long> to_list(const std::string& field, int line, const std::string& v) {
    std::vector<long> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(to_long(field, line, trim(item)));
    if (out.empty()) throw ConfigError(field, line, "expected a comma-separated integer list");
    return out;
}

}  // namespace

RunConfig parse_config(const std::string& text, const std::filesystem::path& base) {
    RunConfig c;
    std::istringstream in(text);
    std::string raw;
    std::string section;
    int line = 0;
    std::map<std::string, int> seen;
    double a = c.params.a, b = c.params.b, g = c.params.gamma;
    int params_line = 0;

    while (std::getline(in, raw)) {
        ++line;
        const auto hash = raw.find('#');
        const std::string s = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (s.empty()) continue;
        if (s.front() == '[') {
            if (s.back() != ']') throw ConfigError("", line, "unterminated section header");
            section = trim(s.substr(1, s.size() - 2));
            continue;
        }
        const auto eq = s.find('=');
        if (eq == std::string::npos) throw ConfigError("", line, "expected key = value");
        const std::string key = trim(s.substr(0, eq));
        const std::string val = trim(s.substr(eq + 1));
        const std::string field = section.empty() ? key : section + "." + key;
        if (key.empty()) throw ConfigError("", line, "empty key");
        if (val.empty()) throw ConfigError(field, line, "missing value");
        if (seen.contains(field)) throw ConfigError(field, line, "duplicate key (first on line " + std::to_string(seen[field]) + ")");
        seen[field] = line;

        const auto D = [&] { return to_double(field, line, val); };
        const auto L = [&] { return to_long(field, line, val); };

        if (field == "params.a") a = D(), params_line = line;
        else if (field == "params.b") b = D(), params_line = line;
        else if (field == "params.gamma") g = D(), params_line = line;
        else if (field == "beta.variant") {
            if (val != "canonical" && val != "sine" && val != "table")
                throw ConfigError(field, line, "must be canonical, sine or table");
            c.beta_variant = val;
        } else if (field == "beta.slope") c.beta_slope = D();
        else if (field == "beta.amplitude") c.sine_amplitude = D();
        else if (field == "beta.half_width") c.sine_half_width = L();
        else if (field == "beta.table") c.beta_table = base / val;
        else if (field == "run.n_min") c.n_min = L();
        else if (field == "run.n_max") c.n_max = L();
        else if (field == "run.window") c.window = val == "auto" ? 0 : L();
        else if (field == "run.seed") {
            const long v = L();
            if (v < 0) throw ConfigError(field, line, "seed must be nonnegative");
            c.seed = static_cast<std::uint64_t>(v);
        } else if (field == "run.out") c.out_dir = base / val;
        else if (field == "lemmas.lem1_n_max") c.lem1_n_max = L();
        else if (field == "lemmas.lem2_m_max") c.lem2_m_max = L();
        else if (field == "lemmas.lem2_j_max") c.lem2_j_max = L();
        else if (field == "lemmas.lem3_n_max") c.lem3_n_max = L();
        else if (field == "lemmas.lem3_j_max") c.lem3_j_max = L();
        else if (field == "checks.roundtrip_n") c.roundtrip_n = L();
        else if (field == "checks.roundtrip_count") c.roundtrip_count = L();
        else if (field == "checks.identity_pairs") c.identity_pairs = L();
        else if (field == "checks.covariance_samples") c.covariance_samples = L();
        else if (field == "checks.region_n_max") c.region_n_max = L();
        else if (field == "spectrum.windows") c.spectrum_windows = to_list(field, line, val);
        else if (field == "spectrum.modes") c.spectrum_modes = L();
        else if (field == "spectrum.top_k") c.spectrum_top_k = L();
        else if (field == "spectrum.operator") {
            if (val != "Q" && val != "D") throw ConfigError(field, line, "must be Q or D");
            c.spectrum_operator = val;
        } else if (field == "kernels.n_min") c.kernel_n_min = L();
        else if (field == "kernels.n_max") c.kernel_n_max = L();
        else if (field == "kernels.window") c.kernel_window = L();
        else throw ConfigError(field, line, "unknown key");

        if (c.window < 0 || c.kernel_window < 0) throw ConfigError(field, line, "window must be nonnegative");
        for (const long w : c.spectrum_windows)
            if (w < 0) throw ConfigError(field, line, "windows must be nonnegative");
    }

    try {
        c.params = WeightParams::make(a, b, g);
    } catch (const std::invalid_argument& e) {
        throw ConfigError("params", params_line, e.what());
    }
    if (c.beta_variant == "table" && c.beta_table.empty())
        throw ConfigError("beta.table", seen.contains("beta.variant") ? seen["beta.variant"] : 0,
                          "variant 'table' needs a table path");
    return c;
}

RunConfig load_config(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw ConfigError("", 0, "cannot open " + file.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str(), file.parent_path().empty() ? std::filesystem::path(".") : file.parent_path());
}

BetaFunction RunConfig::beta() const {
    if (beta_variant == "sine") return BetaFunction::sine_perturbed(sine_amplitude, sine_half_width);
    if (beta_variant == "table") return read_beta_table(beta_table, beta_slope);
    if (beta_slope != 1.0) return BetaFunction::perturbed(beta_slope, 0, {0.5}, 0.5, 0.5);
    return BetaFunction::canonical();
}

BetaFunction read_beta_table(const std::filesystem::path& file, double slope) {
    std::ifstream in(file);
    if (!in) throw ConfigError("beta.table", 0, "cannot open " + file.string());
    std::string raw;
    int line = 0;
    std::vector<double> t;
    long first = 0;
    long expect = 0;
    while (std::getline(in, raw)) {
        ++line;
        const auto hash = raw.find('#');
        const std::string s = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (s.empty()) continue;
        const auto comma = s.find(',');
        if (comma == std::string::npos) throw ConfigError("beta.table", line, "expected 'l, t'");
        const long l = to_long("beta.table", line, trim(s.substr(0, comma)));
        const double v = to_double("beta.table", line, trim(s.substr(comma + 1)));
        if (t.empty()) first = expect = l;
        if (l != expect) throw ConfigError("beta.table", line, "sites must be consecutive");
        t.push_back(v);
        ++expect;
    }
    if (t.empty()) throw ConfigError("beta.table", line, "empty table");
    const double left = t.front();
    const double right = t.back();
    try {
        return BetaFunction::perturbed(slope, first, std::move(t), left, right);
    } catch (const std::invalid_argument& e) {
        throw ConfigError("beta.table", 0, e.what());
    }
}

}  // namespace qannulus
