#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "qannulus/bounds.hpp"

namespace qannulus {

/// Round-trip decimal text: 17 significant digits, "inf"/"-inf"/"nan".
std::string format_real(double v);

/// Comma-separated table with a header row. Cells are integers, reals
/// (17 significant digits) or plain strings.
class CsvTable {
public:
    using Cell = std::variant<long, double, std::string>;

    explicit CsvTable(std::vector<std::string> header);

    void add(std::vector<Cell> row);
    std::size_t size() const { return rows_.size(); }
    void write(std::ostream& os) const;
    void write(const std::filesystem::path& file) const;

private:
    std::vector<std::string> header_;
    std::vector<std::vector<Cell>> rows_;
};

/// check,i0,i1,i2,relation,computed,error,majorant,margin,satisfied,flagged
CsvTable check_csv(const CheckTable& t);

/// {passed, failed, flagged_failed, worst_margin}
nlohmann::json check_summary(const CheckTable& t);

nlohmann::json params_json(const WeightParams& p);

void write_json(const nlohmann::json& j, const std::filesystem::path& file);

}  // namespace qannulus
