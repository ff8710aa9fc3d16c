/**
 * @file dump.cpp
 * @brief Serialization of factors and reports.
 */
#include "yrm/dump.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace yrm {

namespace {

std::string join_ints(const std::vector<int>& v, char sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? std::string(1, sep) : "") + std::to_string(v[i]);
    return out;
}

std::vector<int> split_ints(const std::string& s, char sep) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, sep)) {
        std::size_t used = 0;
        out.push_back(std::stoi(tok, &used));
        if (used != tok.size()) throw std::invalid_argument("bad integer '" + tok + "'");
    }
    return out;
}

}  // namespace

std::string type_label(const CartanDatum& c) {
    for (const char* n : {"A1", "A2", "A3", "B2", "G2"})
        if (c.name == n) {
            const CartanDatum ref = CartanDatum::named(n);
            if (ref.a == c.a && ref.d == c.d) return n;
        }
    std::string rows;
    for (std::size_t i = 0; i < c.a.size(); ++i) rows += (i ? ";" : "") + join_ints(c.a[i], ',');
    return "cartan[" + rows + "]d[" + join_ints(c.d, ',') + "]";
}

CartanDatum cartan_from_label(const std::string& label) {
    if (label.rfind("cartan[", 0) != 0) return CartanDatum::named(label);
    const std::size_t close = label.find("]d[");
    if (close == std::string::npos || label.back() != ']') throw std::invalid_argument("bad type label '" + label + "'");
    std::vector<std::vector<int>> a;
    std::stringstream rows(label.substr(7, close - 7));
    std::string row;
    try {
        while (std::getline(rows, row, ';')) a.push_back(split_ints(row, ','));
        CartanDatum c = CartanDatum::from_matrix(a, split_ints(label.substr(close + 3, label.size() - close - 4), ','));
        c.validate();
        return c;
    } catch (const std::logic_error& e) {
        throw std::invalid_argument("bad type label '" + label + "': " + e.what());
    }
}

CartanDatum cartan_from_file(const std::filesystem::path& path) {
    const nlohmann::json j = read_json_file(path);
    try {
        std::optional<std::vector<int>> d;
        if (j.contains("symmetrizers")) d = j.at("symmetrizers").get<std::vector<int>>();
        CartanDatum c = CartanDatum::from_matrix(j.at("cartan").get<std::vector<std::vector<int>>>(), d);
        c.validate();
        return c;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(path.string() + ": " + e.what());
    }
}

nlohmann::json DumpHeader::to_json() const {
    nlohmann::json j;
    j["type"] = type;
    j["N"] = N;
    j["hbar_order"] = hbar_order == HPoly::kNoTrunc ? nlohmann::json(nullptr) : nlohmann::json(hbar_order);
    j["order_version"] = order_version;
    j["zeta"] = zeta;
    j["factors"] = factors;
    j["faults"] = faults;
    return j;
}

DumpHeader DumpHeader::from_json(const nlohmann::json& j) {
    try {
        DumpHeader h;
        h.type = j.at("type").get<std::string>();
        h.N = j.at("N").get<int>();
        h.hbar_order = j.at("hbar_order").is_null() ? HPoly::kNoTrunc : j.at("hbar_order").get<int>();
        h.order_version = j.at("order_version").get<std::string>();
        h.zeta = j.at("zeta").get<std::string>();
        h.factors = j.at("factors").get<std::vector<std::string>>();
        h.faults = j.at("faults").get<std::vector<std::string>>();
        return h;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("bad dump header: ") + e.what());
    }
}

nlohmann::json factor_records(const Yangian& Y, const RFactor& f) {
    const std::string name = factor_name(f.kind);
    std::vector<std::tuple<int, std::string, std::string, std::string>> rows;
    for (const auto& [k, c] : f.series.coeffs())
        for (const auto& [t, v] : c.terms()) {
            if (t.size() != 2) throw std::invalid_argument("factor_records: arity must be 2");
            rows.emplace_back(k, Y.mono_to_string(t[0]), Y.mono_to_string(t[1]), v.to_string());
        }
    std::sort(rows.begin(), rows.end());
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [k, l, r, c] : rows)
        out.push_back({{"factor", name}, {"z_power", k}, {"left_monomial", l}, {"right_monomial", r}, {"coeff", c}});
    return out;
}

nlohmann::json make_dump(const DumpHeader& h, const std::vector<nlohmann::json>& record_lists) {
    std::vector<nlohmann::json> all;
    for (const auto& list : record_lists)
        for (const auto& r : list) all.push_back(r);
    auto key = [](const nlohmann::json& r) {
        return std::make_tuple(r.at("factor").get<std::string>(), r.at("z_power").get<int>(),
                               r.at("left_monomial").get<std::string>(), r.at("right_monomial").get<std::string>());
    };
    std::stable_sort(all.begin(), all.end(), [&](const auto& a, const auto& b) { return key(a) < key(b); });
    nlohmann::json j;
    j["header"] = h.to_json();
    j["records"] = all;
    return j;
}

RFactor load_factor(const Yangian& Y, const nlohmann::json& dump, FactorKind kind) {
    try {
        const DumpHeader h = DumpHeader::from_json(dump.at("header"));
        if (h.order_version != kOrderVersion)
            throw std::invalid_argument("order_version '" + h.order_version + "' does not match '" + kOrderVersion + "'");
        RFactor f;
        f.kind = kind;
        f.N = h.N;
        f.series = TSeries(Truncation{h.N, h.hbar_order});
        const std::string name = factor_name(kind);
        bool seen = false;
        for (const auto& r : dump.at("records")) {
            if (r.at("factor").get<std::string>() != name) continue;
            seen = true;
            const TKey t{Y.parse_mono(r.at("left_monomial").get<std::string>()), Y.parse_mono(r.at("right_monomial").get<std::string>())};
            f.series.add(r.at("z_power").get<int>(), YTensor(t, HPoly::parse(r.at("coeff").get<std::string>())));
        }
        if (!seen) throw std::invalid_argument("dump has no records for factor '" + name + "'");
        if (kind == FactorKind::Minus) f.blocks = split_by_weight(Y, f.series, 1, false);
        if (kind == FactorKind::Plus) f.blocks = split_by_weight(Y, f.series, 0, false);
        return f;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("corrupt dump: ") + e.what());
    }
}

std::string dump_text(const nlohmann::json& j) { return j.dump(2) + "\n"; }

std::string pretty_text(const nlohmann::json& dump) {
    std::ostringstream os;
    const auto& h = dump.at("header");
    os << "type " << h.at("type").get<std::string>() << "  N " << h.at("N").get<int>() << "  hbar order "
       << (h.at("hbar_order").is_null() ? std::string("none") : std::to_string(h.at("hbar_order").get<int>())) << "  zeta "
       << h.at("zeta").get<std::string>() << "  " << h.at("order_version").get<std::string>() << "\n";
    if (!h.at("faults").empty()) os << "faults " << h.at("faults").dump() << "\n";
    std::string factor;
    int z = 1;
    for (const auto& r : dump.at("records")) {
        const std::string f = r.at("factor").get<std::string>();
        const int k = r.at("z_power").get<int>();
        if (f != factor) {
            os << "\n[" << f << "]\n";
            factor = f;
            z = 1;
        }
        if (k != z) {
            os << "  z^" << k << ":\n";
            z = k;
        }
        os << "    (" << r.at("coeff").get<std::string>() << ") " << r.at("left_monomial").get<std::string>() << " (x) "
           << r.at("right_monomial").get<std::string>() << "\n";
    }
    return os.str();
}

nlohmann::json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(path.string() + " is not valid JSON: " + e.what());
    }
}

void write_atomic(const std::filesystem::path& path, const std::string& content) {
    const std::filesystem::path dir = path.has_parent_path() ? path.parent_path() : std::filesystem::path(".");
    std::filesystem::create_directories(dir);
    std::random_device rd;
    const std::filesystem::path tmp = dir / (path.filename().string() + ".tmp" + std::to_string(rd()));
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out << content;
        out.flush();
        if (!out) throw std::runtime_error("write failed for " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw std::runtime_error("cannot rename into " + path.string() + ": " + ec.message());
    }
}

nlohmann::json report_to_json(const Report& r) {
    nlohmann::json out = nlohmann::json::array();
    for (const CheckResult& c : r)
        out.push_back({{"check", c.check}, {"instance", c.instance}, {"status", c.pass ? "pass" : "fail"},
                       {"first_discrepancy", c.first_discrepancy}});
    return out;
}

std::string report_pretty(const Report& r) {
    std::ostringstream os;
    for (const CheckResult& c : r) {
        os << (c.pass ? "PASS  " : "FAIL  ") << c.check << "  " << c.instance;
        if (!c.first_discrepancy.empty()) os << "\n      first discrepancy: " << c.first_discrepancy;
        os << "\n";
    }
    return os.str();
}

}  // namespace yrm
