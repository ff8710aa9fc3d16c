/**
 * @file dump.hpp
 * @brief JSON dump and cache format for R-matrix factors, check reports and Lie type labels.
 *
 * A dump is {"header": {...}, "records": [...]}. Each record is
 * {factor, z_power, left_monomial, right_monomial, coeff} with the coefficient an hbar
 * polynomial rendered with "p/q" rationals. Records are sorted by
 * (factor, z_power, left text, right text), so equal inputs give equal bytes.
 */
#pragma once

#include "yrm/report.hpp"
#include "yrm/rmatrix.hpp"

#include "json.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace yrm {

/// Tied to the PBW ordering of generators; dumps with another version are never reused.
inline constexpr const char* kOrderVersion = "pbw-v1";

/// "A1".."G2" for named data, otherwise "cartan[2,-1;-1,2]d[1,1]".
std::string type_label(const CartanDatum& c);
/// Inverse of type_label; throws std::invalid_argument.
CartanDatum cartan_from_label(const std::string& label);
/// Reads {"cartan": [[...]], "symmetrizers": [...]} (symmetrizers optional) and validates it.
CartanDatum cartan_from_file(const std::filesystem::path& path);

struct DumpHeader {
    std::string type;
    int N = 0;
    int hbar_order = HPoly::kNoTrunc;
    std::string order_version = kOrderVersion;
    std::string zeta = "ones";
    std::vector<std::string> factors;
    std::vector<std::string> faults;

    nlohmann::json to_json() const;
    static DumpHeader from_json(const nlohmann::json& j);
    friend bool operator==(const DumpHeader&, const DumpHeader&) = default;
};

/// Sorted records of one factor.
nlohmann::json factor_records(const Yangian& Y, const RFactor& f);
/// Header plus the records of every factor, sorted.
nlohmann::json make_dump(const DumpHeader& h, const std::vector<nlohmann::json>& record_lists);
/// Parses the records of one factor back; blocks are rebuilt by weight. Throws std::invalid_argument.
RFactor load_factor(const Yangian& Y, const nlohmann::json& dump, FactorKind kind);

/// Canonical JSON text (two-space indent, trailing newline).
std::string dump_text(const nlohmann::json& j);
/// Human-readable listing grouped by factor and z power.
std::string pretty_text(const nlohmann::json& dump);

/// Reads and parses a JSON file; throws std::runtime_error on missing or corrupt files.
nlohmann::json read_json_file(const std::filesystem::path& path);
/// Writes via a temporary file in the same directory and renames it into place.
void write_atomic(const std::filesystem::path& path, const std::string& content);

/// {check, instance, status, first_discrepancy} per result.
nlohmann::json report_to_json(const Report& r);
std::string report_pretty(const Report& r);

}  // namespace yrm
