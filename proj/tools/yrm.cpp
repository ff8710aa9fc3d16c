/**
 * @file yrm.cpp
 * @brief Command-line front end: compute factors, run verification suites, list dumps.
 *
 * Exit status: 0 on success, 1 when a selected check fails, 2 on invalid input.
 */
#include "yrm/algebra_checks.hpp"
#include "yrm/dump.hpp"
#include "yrm/rmatrix.hpp"
#include "yrm/shiftop.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using namespace yrm;

namespace {

struct Options {
    std::string type;
    std::string cartan_file;
    int order = -1;
    int hbar_order = -1;
    std::string zeta = "ones";
    std::vector<std::string> factors{"full"};
    std::vector<std::string> listed;  ///< dump: factors to list, empty for all
    std::vector<std::string> checks;
    std::vector<std::string> faults;
    std::string cache_dir;
    std::string out;
    std::string format = "json";
    std::string input;
    bool verbose = false;
};

std::vector<std::string> split_list(const std::vector<std::string>& items) {
    std::vector<std::string> out;
    for (const std::string& item : items) {
        std::stringstream ss(item);
        std::string tok;
        while (std::getline(ss, tok, ','))
            if (!tok.empty()) out.push_back(tok);
    }
    return out;
}

CartanDatum cartan_of(const Options& o) {
    if (!o.cartan_file.empty()) return cartan_from_file(o.cartan_file);
    if (o.type.empty()) throw std::invalid_argument("one of --type or --cartan-file is required");
    return cartan_from_label(o.type);
}

void emit(const Options& o, const std::string& text) {
    if (o.out.empty()) std::cout << text;
    else write_atomic(o.out, text);
}

/// Faults for the R-matrix and for the shift operator, split by prefix.
void parse_faults(const Options& o, const LieData& lie, std::vector<Fault>& rf, std::vector<ShiftFault>& sf) {
    for (const std::string& spec : o.faults) {
        if (spec.rfind("phi", 0) == 0) sf.push_back(ShiftFault::parse(spec));
        else rf.push_back(Fault::parse(spec, lie));
    }
}

std::string cache_name(const DumpHeader& h) {
    std::string s = h.type + "_N" + std::to_string(h.N);
    if (h.hbar_order != HPoly::kNoTrunc) s += "_M" + std::to_string(h.hbar_order);
    s += "_" + h.zeta + "_" + h.factors.front();
    for (char& c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-') c = '_';
    return s + ".json";
}

int cmd_compute(const Options& o) {
    if (o.order < 0) throw std::invalid_argument("--order must be >= 0");
    const CartanDatum cartan = cartan_of(o);
    const LieData lie0 = LieData::build(cartan);
    std::vector<Fault> rf;
    std::vector<ShiftFault> sf;
    parse_faults(o, lie0, rf, sf);
    if (!sf.empty()) throw std::invalid_argument("shift-operator faults only apply to verify");

    std::vector<FactorKind> kinds;
    for (const std::string& f : split_list(o.factors)) {
        if (f == "all") kinds = {FactorKind::Minus, FactorKind::Zero, FactorKind::Plus, FactorKind::Full};
        else kinds.push_back(parse_factor(f));
    }
    std::sort(kinds.begin(), kinds.end());
    kinds.erase(std::unique(kinds.begin(), kinds.end()), kinds.end());

    DumpHeader header;
    header.type = type_label(cartan);
    header.N = o.order;
    header.hbar_order = o.hbar_order < 0 ? HPoly::kNoTrunc : o.hbar_order;
    header.zeta = zeta_name(parse_zeta(o.zeta));
    for (const Fault& f : rf) header.faults.push_back(f.to_string());
    for (FactorKind k : kinds) header.factors.push_back(factor_name(k));

    const bool use_cache = !o.cache_dir.empty() && rf.empty();
    std::optional<UniversalR> R;
    auto engine = [&]() -> UniversalR& {
        if (!R) R.emplace(Yangian(apply_lie_faults(lie0, rf)), RConfig{o.order, header.hbar_order, parse_zeta(o.zeta), rf});
        return *R;
    };
    std::vector<nlohmann::json> lists;
    for (FactorKind k : kinds) {
        DumpHeader single = header;
        single.factors = {factor_name(k)};
        const fs::path file = use_cache ? fs::path(o.cache_dir) / cache_name(single) : fs::path();
        if (use_cache && fs::exists(file)) {
            try {
                nlohmann::json cached = read_json_file(file);
                if (DumpHeader::from_json(cached.at("header")) == single) {
                    lists.push_back(cached.at("records"));
                    if (o.verbose) std::cerr << "yrm: " << factor_name(k) << " loaded from " << file.string() << "\n";
                    continue;
                }
                std::cerr << "yrm: warning: cache header mismatch in " << file.string() << ", recomputing\n";
            } catch (const std::exception& e) {
                std::cerr << "yrm: warning: unreadable cache " << file.string() << " (" << e.what() << "), recomputing\n";
            }
        }
        nlohmann::json records = factor_records(engine().yangian(), engine().factor(k));
        if (o.verbose) std::cerr << "yrm: " << factor_name(k) << " computed\n";
        if (use_cache) write_atomic(file, dump_text(make_dump(single, {records})));
        lists.push_back(std::move(records));
    }
    const nlohmann::json dump = make_dump(header, lists);
    emit(o, o.format == "pretty" ? pretty_text(dump) : dump_text(dump));
    return 0;
}

int cmd_verify(const Options& o) {
    if (o.order < 0) throw std::invalid_argument("--order must be >= 0");
    const CartanDatum cartan = cartan_of(o);
    const LieData lie0 = LieData::build(cartan);
    std::vector<Fault> rf;
    std::vector<ShiftFault> sf;
    parse_faults(o, lie0, rf, sf);
    std::vector<std::string> checks = split_list(o.checks);
    if (checks.empty()) checks = rmatrix_check_names();

    auto member = [](const std::vector<std::string>& v, const std::string& s) { return std::find(v.begin(), v.end(), s) != v.end(); };
    for (const std::string& c : checks)
        if (!member(rmatrix_check_names(), c) && !member(shift_check_names(), c) && !member(algebra_check_names(), c))
            throw std::invalid_argument("unknown check '" + c + "'");

    const Yangian Y(apply_lie_faults(lie0, rf));
    UniversalR R(Y, RConfig{o.order, o.hbar_order < 0 ? HPoly::kNoTrunc : o.hbar_order, parse_zeta(o.zeta), rf});
    std::optional<ShiftOperator> S;
    Report report;
    for (const std::string& c : checks) {
        Report part;
        if (member(rmatrix_check_names(), c)) {
            part = run_rmatrix_checks(R, {c});
        } else if (member(shift_check_names(), c)) {
            if (!S) S.emplace(Y, o.order, -1, sf);
            part = run_shift_checks(*S, {c});
        } else {
            part = run_algebra_checks(Y, {c}, o.order);
        }
        report.insert(report.end(), part.begin(), part.end());
    }

    DumpHeader header;
    header.type = type_label(cartan);
    header.N = o.order;
    header.hbar_order = R.config().hbar_order;
    header.zeta = zeta_name(R.config().zeta);
    for (const Fault& f : rf) header.faults.push_back(f.to_string());
    for (const ShiftFault& f : sf) header.faults.push_back(f.to_string());
    const bool ok = all_pass(report);
    if (o.format == "pretty") {
        emit(o, report_pretty(report) + (ok ? "all checks passed\n" : "some checks failed\n"));
    } else {
        nlohmann::json j;
        j["header"] = header.to_json();
        j["header"].erase("factors");
        j["checks"] = checks;
        j["results"] = report_to_json(report);
        j["status"] = ok ? "pass" : "fail";
        emit(o, dump_text(j));
    }
    return ok ? 0 : 1;
}

int cmd_dump(const Options& o) {
    const nlohmann::json dump = read_json_file(o.input);
    if (!dump.contains("header") || !dump.contains("records")) throw std::runtime_error(o.input + ": not a factor dump");
    DumpHeader h = DumpHeader::from_json(dump.at("header"));
    const Yangian Y(LieData::build(cartan_from_label(h.type)));
    std::vector<std::string> wanted = split_list(o.listed);
    if (wanted.empty()) wanted = h.factors;
    std::vector<nlohmann::json> lists;
    std::vector<std::string> names;
    for (const std::string& f : wanted) {
        if (!std::count(h.factors.begin(), h.factors.end(), f)) throw std::invalid_argument("dump has no factor '" + f + "'");
        // Parsing validates every monomial and coefficient.
        lists.push_back(factor_records(Y, load_factor(Y, dump, parse_factor(f))));
        names.push_back(f);
    }
    h.factors = names;
    const nlohmann::json out = make_dump(h, lists);
    emit(o, o.format == "pretty" ? pretty_text(out) : dump_text(out));
    return 0;
}

void add_common(CLI::App* sub, Options& o, bool needs_order) {
    auto* t = sub->add_option("--type", o.type, "Named type (A1, A2, A3, B2, G2) or a type label from a dump");
    auto* f = sub->add_option("--cartan-file", o.cartan_file, "JSON file {\"cartan\": [[...]], \"symmetrizers\": [...]}");
    t->excludes(f);
    auto* n = sub->add_option("--order", o.order, "Truncation order N (z^-N)")->check(CLI::NonNegativeNumber);
    if (needs_order) n->required();
    sub->add_option("--hbar-order", o.hbar_order, "Drop hbar^M and higher")->check(CLI::NonNegativeNumber);
    sub->add_option("--zeta", o.zeta, "Target for alpha_j(zeta)")->check(CLI::IsMember({"ones", "ramp"}));
    sub->add_option("--inject-fault", o.faults, "Fault spec, repeatable: drop-block:B, flip-sign:B, perturb-g:K, phi-sign:x+, phi-sign:h, phi-chain");
    sub->add_option("-o,--out", o.out, "Output path (default stdout)");
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "pretty"}));
    sub->add_flag("-v,--verbose", o.verbose, "Report cache use on stderr");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Universal R-matrix of the Yangian: exact truncated computation and verification"};
    app.require_subcommand(1);
    Options o;

    auto* compute = app.add_subcommand("compute", "Compute factors and write a JSON dump");
    add_common(compute, o, true);
    compute->add_option("--factor", o.factors, "minus, zero, plus, full or all (comma separated)");
    compute->add_option("--cache-dir", o.cache_dir, "Cache directory")->envname("YRM_CACHE_DIR");

    auto* verify = app.add_subcommand("verify", "Run checks and write a report; exit 1 if any fails");
    add_common(verify, o, true);
    std::string names;
    for (const auto* list : {&rmatrix_check_names(), &shift_check_names(), &algebra_check_names()})
        for (const std::string& n : *list) names += (names.empty() ? "" : ",") + n;
    verify->add_option("--checks", o.checks, "Comma-separated subset of " + names);

    auto* dump = app.add_subcommand("dump", "List a dump or cache file");
    dump->add_option("file", o.input, "Dump or cache file")->required();
    dump->add_option("--factor", o.listed, "Factors to list (default all in the file)");
    dump->add_option("-o,--out", o.out, "Output path (default stdout)");
    dump->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "pretty"}));

    CLI11_PARSE(app, argc, argv);
    try {
        if (*compute) return cmd_compute(o);
        if (*verify) return cmd_verify(o);
        return cmd_dump(o);
    } catch (const std::exception& e) {
        std::cerr << "yrm: error: " << e.what() << "\n";
        return 2;
    }
}
