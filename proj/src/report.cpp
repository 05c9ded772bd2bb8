#include "qannulus/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "qannulus/errors.hpp"

namespace qannulus {

std::string format_real(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

CsvTable::CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

void CsvTable::add(std::vector<Cell> row) {
    if (row.size() != header_.size()) throw std::invalid_argument("csv row width does not match header");
    rows_.push_back(std::move(row));
}

void CsvTable::write(std::ostream& os) const {
    for (std::size_t i = 0; i < header_.size(); ++i) os << (i ? "," : "") << header_[i];
    os << '\n';
    for (const auto& r : rows_) {
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (i) os << ',';
            std::visit(
                [&](const auto& c) {
                    using T = std::decay_t<decltype(c)>;
                    if constexpr (std::is_same_v<T, double>)
                        os << format_real(c);
                    else
                        os << c;
                },
                r[i]);
        }
        os << '\n';
    }
}

void CsvTable::write(const std::filesystem::path& file) const {
    std::ofstream out(file, std::ios::binary);
    if (!out) throw Error("cannot write " + file.string());
    write(out);
}

CsvTable check_csv(const CheckTable& t) {
    CsvTable csv({"check", "i0", "i1", "i2", "relation", "computed", "error", "majorant", "margin", "satisfied",
                  "flagged"});
    for (const auto& r : t.rows)
        csv.add({r.name, r.index[0], r.index[1], r.index[2],
                 std::string(r.relation == BoundReport::Relation::eq ? "eq" : "le"), r.computed, r.error,
                 r.majorant, r.margin(), static_cast<long>(r.satisfied), static_cast<long>(r.flagged)});
    return csv;
}

nlohmann::json check_summary(const CheckTable& t) {
    const double wm = t.worst_margin();
    return {{"total", t.rows.size()},
            {"passed", t.passed()},
            {"failed", t.failed()},
            {"flagged_failed", t.flagged_failed()},
            {"worst_margin", std::isfinite(wm) ? nlohmann::json(wm) : nlohmann::json(nullptr)}};
}

nlohmann::json params_json(const WeightParams& p) {
    const Admissibility adm = check_admissible(p);
    return {{"a", p.a},
            {"b", p.b},
            {"gamma", p.gamma},
            {"hs_finite", adm.hs_finite},
            {"admissible", adm.admissible},
            {"admissibility_sum", adm.sum}};
}

void write_json(const nlohmann::json& j, const std::filesystem::path& file) {
    std::ofstream out(file, std::ios::binary);
    if (!out) throw Error("cannot write " + file.string());
    out << j.dump(2) << '\n';
}

}  // namespace qannulus
