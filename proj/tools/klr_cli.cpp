// klr: command-line front end for the library.
//
// Exit status: 2 on bad flags or malformed input, 1 when a verification
// check fails, 0 otherwise.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "klr/crystal.hpp"
#include "klr/graded.hpp"
#include "klr/json_io.hpp"
#include "klr/morita.hpp"

using namespace klr;
using Json = nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ------------------------------------------------------------------ parsing

std::vector<int> parse_ints(const std::string& s, const char* what) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw UsageError(std::string("bad ") + what + " '" + s + "'");
        }
        if (used != tok.size()) throw UsageError(std::string("bad ") + what + " '" + s + "'");
        out.push_back(v);
    }
    return out;
}

RootVector parse_beta(const std::string& s) {
    if (!s.empty() && s.front() == '{') {
        try {
            return klr::json::decode_root_vector(Json::parse(s));
        } catch (const Json::exception& e) {
            throw UsageError(std::string("bad --beta JSON: ") + e.what());
        }
    }
    RootVector v;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        const auto colon = tok.find(':');
        if (colon == std::string::npos) throw UsageError("bad --beta entry '" + tok + "' (want residue:multiplicity)");
        const auto i = parse_ints(tok.substr(0, colon), "--beta residue");
        const auto m = parse_ints(tok.substr(colon + 1), "--beta multiplicity");
        if (i.size() != 1 || m.size() != 1 || m[0] < 0) throw UsageError("bad --beta entry '" + tok + "'");
        v.add(i[0], m[0]);
    }
    return v;
}

struct Common {
    std::string type = "c";
    std::string charge;
    std::string format = "json";
};

DominantWeight weight_of(const Common& c) {
    if (c.charge.empty()) throw UsageError("--charge is required");
    return DominantWeight(parse_cartan_type(c.type), parse_ints(c.charge, "--charge"));
}

MultiPartition shape_of(const std::string& s, const DominantWeight& w) {
    MultiPartition mp = parse_multipartition(s);
    if (mp.level() != w.level()) {
        throw UsageError("--shape has " + std::to_string(mp.level()) + " component(s) but --charge has level " +
                         std::to_string(w.level()));
    }
    return mp;
}

unsigned thread_cap() {
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("KLR_THREADS")) {
        const auto v = parse_ints(env, "KLR_THREADS");
        if (v.size() != 1 || v[0] < 1) throw UsageError("KLR_THREADS must be a positive integer");
        n = std::min(n, static_cast<unsigned>(v[0]));
    }
    return n;
}

// ------------------------------------------------------------------ output
//
// Every command produces records (one JSON object per row).  Json prints
// either a single document or one record per line; csv prints the records
// with JSON-encoded cells; pretty is command specific.

struct Output {
    std::vector<std::string> columns;
    std::vector<Json> records;
    std::optional<Json> document;
    std::vector<std::string> pretty;
};

std::string csv_cell(const Json& v) {
    std::string s = v.is_string() ? v.get<std::string>() : v.dump();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) {
        if (ch == '"') q += '"';
        q += ch;
    }
    return q + "\"";
}

void emit(const Output& out, const std::string& format) {
    if (format == "json") {
        if (out.document) std::cout << out.document->dump() << '\n';
        else
            for (const auto& r : out.records) std::cout << r.dump() << '\n';
    } else if (format == "csv") {
        for (std::size_t k = 0; k < out.columns.size(); ++k) std::cout << (k ? "," : "") << out.columns[k];
        std::cout << '\n';
        for (const auto& r : out.records) {
            for (std::size_t k = 0; k < out.columns.size(); ++k) {
                const auto it = r.find(out.columns[k]);
                std::cout << (k ? "," : "") << csv_cell(it == r.end() ? Json(nullptr) : *it);
            }
            std::cout << '\n';
        }
    } else {
        for (const auto& line : out.pretty) std::cout << line << '\n';
    }
}

std::string join(const std::vector<int>& v, const char* sep = ",") {
    std::string s;
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? sep : "") + std::to_string(v[k]);
    return s;
}

std::vector<std::string> draw(const StandardTableau& t) {
    std::vector<std::string> lines;
    const auto rows = t.rows();
    int width = 1;
    for (int n = t.size(); n >= 10; n /= 10) ++width;
    for (std::size_t m = 0; m < rows.size(); ++m) {
        if (rows.size() > 1) lines.push_back("  component " + std::to_string(m + 1) + (rows[m].empty() ? ": -" : ":"));
        for (const auto& row : rows[m]) {
            std::string line = "   ";
            for (int e : row) {
                std::string cell = std::to_string(e);
                line += std::string(static_cast<std::size_t>(width) - cell.size() + 1, ' ') + cell;
            }
            lines.push_back(line);
        }
    }
    return lines;
}

// ------------------------------------------------------------------ commands

Output cmd_block(const Common& c, std::optional<int> n, const std::string& beta_s) {
    const DominantWeight w = weight_of(c);
    if (n.has_value() == !beta_s.empty()) throw UsageError("block needs exactly one of --n or --beta");
    std::map<RootVector, std::vector<MultiPartition>> blocks;
    if (n) {
        if (*n < 0) throw UsageError("--n must be non-negative");
        for (const auto& mp : multipartitions_of(*n, w.level())) blocks[content(w, mp)].push_back(mp);
    } else {
        const RootVector beta = parse_beta(beta_s);
        for (Residue i : [&] {
                 std::vector<Residue> ks;
                 for (auto [k, m] : beta.entries()) ks.push_back(k);
                 return ks;
             }())
            w.type.require_label(i);
        blocks[beta] = enumerate_block(w, beta);
    }
    Output out;
    out.columns = {"beta", "size", "shapes"};
    for (const auto& [beta, shapes] : blocks) {
        Json js = Json::array();
        std::string names;
        for (const auto& mp : shapes) {
            js.push_back(klr::json::encode(mp));
            names += (names.empty() ? "" : "  ") + mp.to_string();
        }
        out.records.push_back({{"beta", klr::json::encode(beta)}, {"size", beta.height()}, {"shapes", js}});
        out.pretty.push_back(beta.to_string() + " (" + std::to_string(shapes.size()) + "): " + (names.empty() ? "none" : names));
    }
    return out;
}

Output cmd_tableaux(const Common& c, const std::string& shape_s, const std::string& residues_s, bool with_degrees) {
    const DominantWeight w = weight_of(c);
    const MultiPartition shape = shape_of(shape_s, w);
    std::optional<ResidueFilter> filter;
    if (!residues_s.empty()) {
        auto seq = parse_ints(residues_s, "--residues");
        if (static_cast<int>(seq.size()) != shape.size()) throw UsageError("--residues must have one entry per box");
        filter = ResidueFilter{w, std::move(seq)};
    }
    Output out;
    out.columns = {"index", "shape", "rows", "residues"};
    if (with_degrees) out.columns.push_back("degree");
    int index = 0;
    for_each_standard(shape, filter, [&](const StandardTableau& t) {
        Json rec = klr::json::encode(t);
        rec["index"] = ++index;
        const auto seq = residue_sequence(t, w);
        rec["residues"] = seq;
        std::string head = "#" + std::to_string(index) + "  residues " + join(seq);
        if (with_degrees) {
            const int d = degree(t, w);
            rec["degree"] = d;
            head += "  degree " + std::to_string(d);
        }
        out.records.push_back(std::move(rec));
        out.pretty.push_back(head);
        for (auto& line : draw(t)) out.pretty.push_back(std::move(line));
        return true;
    });
    if (out.pretty.empty()) out.pretty.push_back("no tableaux");
    return out;
}

Output cmd_kleshchev(const Common& c, const std::string& shape_s, std::optional<int> n, const std::string& beta_s,
                     bool list) {
    const DominantWeight w = weight_of(c);
    Output out;
    if (!shape_s.empty()) {
        if (n || !beta_s.empty() || list) throw UsageError("kleshchev takes --shape alone, or --n/--beta with --list");
        const MultiPartition mp = shape_of(shape_s, w);
        const bool k = is_kleshchev(mp, w);
        out.columns = {"shape", "kleshchev"};
        out.records.push_back({{"shape", klr::json::encode(mp)}, {"kleshchev", k}});
        out.document = k;
        out.pretty.push_back(k ? "true" : "false");
        return out;
    }
    if (!list) throw UsageError("kleshchev needs --shape, or --list with --n or --beta");
    if (n.has_value() == !beta_s.empty()) throw UsageError("kleshchev --list needs exactly one of --n or --beta");
    std::vector<MultiPartition> shapes;
    if (n) {
        if (*n < 0) throw UsageError("--n must be non-negative");
        shapes = multipartitions_of(*n, w.level());
    } else {
        shapes = enumerate_block(w, parse_beta(beta_s));
    }
    out.columns = {"shape"};
    for (const auto& mp : shapes) {
        if (!is_kleshchev(mp, w)) continue;
        out.records.push_back({{"shape", klr::json::encode(mp)}});
        out.pretty.push_back(mp.to_string());
    }
    return out;
}

Output cmd_gdim(const Common& c, const std::string& shape_s, const std::string& weight_s, const std::string& beta_s,
                const std::string& omega_s) {
    const DominantWeight w = weight_of(c);
    LaurentPoly p;
    if (!shape_s.empty()) {
        if (!beta_s.empty() || !omega_s.empty()) throw UsageError("gdim takes --shape or --beta, not both");
        const MultiPartition shape = shape_of(shape_s, w);
        if (weight_s.empty()) {
            p = gdim_specht(shape, w);
        } else {
            const auto seq = parse_ints(weight_s, "--weight");
            if (static_cast<int>(seq.size()) != shape.size()) throw UsageError("--weight must have one entry per box");
            p = gdim_specht_weight(shape, w, seq);
        }
    } else if (!beta_s.empty()) {
        if (!weight_s.empty()) throw UsageError("--weight needs --shape");
        std::optional<RootVector> omega;
        if (!omega_s.empty()) {
            if (w.type.kind != CartanKind::C) throw UsageError("--omega is only defined in type C");
            omega = parse_beta(omega_s);
        }
        p = gdim_block(w, parse_beta(beta_s), omega);
    } else {
        throw UsageError("gdim needs --shape or --beta");
    }
    Output out;
    out.document = klr::json::encode(p);
    out.columns = {"exponent", "coefficient"};
    for (auto [e, k] : p.terms()) out.records.push_back({{"exponent", e}, {"coefficient", k}});
    out.pretty.push_back(p.to_string());
    return out;
}

Json bridge_fields(const BlockBridge& b) { return klr::json::encode(b); }

Output cmd_bridge(int kappa_c, const std::string& shape_s, const std::string& beta_s) {
    if (shape_s.empty() == beta_s.empty()) throw UsageError("bridge needs exactly one of --shape or --beta");
    const DominantWeight wc{CartanType::c(), {kappa_c}};
    std::vector<Partition> shapes;
    RootVector beta;
    if (!shape_s.empty()) {
        const MultiPartition mp = shape_of(shape_s, wc);
        shapes.push_back(mp.component(1));
        beta = content(wc, mp);
    } else {
        beta = parse_beta(beta_s);
        for (const auto& mp : enumerate_block(wc, beta)) shapes.push_back(mp.component(1));
    }
    const BlockBridge b = make_bridge(kappa_c, beta);
    Output out;
    const Json bj = bridge_fields(b);
    out.columns = {"kappa_c", "beta", "a0", "rho", "omega", "kappa1", "kappa2", "nu", "bipartition"};
    Json pairs = Json::array();
    out.pretty.push_back("kappa_C " + std::to_string(b.kappa_c) + "  beta " + b.beta.to_string() + "  a0 " +
                         std::to_string(b.a0));
    out.pretty.push_back("rho " + b.rho.to_string() + "  omega " + b.omega.to_string());
    out.pretty.push_back("A-charges (" + std::to_string(b.kappa1) + "," + std::to_string(b.kappa2) + ")  A-block " +
                         b.a_beta().to_string());
    for (const auto& nu : shapes) {
        const MultiPartition bp = from_type_c(nu, b);
        Json rec = bj;
        rec.erase("beta_minus_omega");
        rec["nu"] = klr::json::encode(nu);
        rec["bipartition"] = klr::json::encode(bp);
        out.records.push_back(rec);
        pairs.push_back({{"nu", rec["nu"]}, {"bipartition", rec["bipartition"]}});
        out.pretty.push_back("  " + nu.to_string() + "  <->  " + bp.to_string());
    }
    if (!shape_s.empty()) out.document = {{"bridge", bj}, {"nu", pairs[0]["nu"]}, {"bipartition", pairs[0]["bipartition"]}};
    else out.document = {{"bridge", bj}, {"pairs", pairs}};
    return out;
}

Output cmd_verify(int kappa_c, std::optional<int> max_n, const std::string& beta_s, const std::string& checks_s,
                  bool& all_pass) {
    if (max_n.has_value() == !beta_s.empty()) throw UsageError("verify needs exactly one of --max-n or --beta");
    const CheckSet checks = CheckSet::parse(checks_s);
    std::vector<BridgeReport> reports;
    if (max_n) {
        if (*max_n < 0) throw UsageError("--max-n must be non-negative");
        reports = verify_range(kappa_c, *max_n, checks, thread_cap());
    } else {
        reports.push_back(verify_bridge(make_bridge(kappa_c, parse_beta(beta_s)), checks));
    }
    all_pass = true;
    Output out;
    out.columns = {"beta", "shapes", "count", "graded", "shift", "dominance", "kleshchev", "goodpath", "pass"};
    Json blocks = Json::array();
    for (const auto& r : reports) {
        const Json j = klr::json::encode(r);
        blocks.push_back(j);
        all_pass = all_pass && r.pass();
        Json rec = {{"beta", klr::json::encode(r.bridge.beta)}, {"shapes", r.c_block.size()}, {"pass", r.pass()}};
        std::string line = (r.pass() ? "PASS " : "FAIL ") + r.bridge.beta.to_string() + " (" +
                           std::to_string(r.c_block.size()) + " shapes)";
        for (const char* name : {"count", "graded", "dominance", "kleshchev", "goodpath"}) {
            const auto& checks_j = j.at("checks");
            if (!checks_j.contains(name)) {
                rec[name] = nullptr;
                continue;
            }
            const bool ok = checks_j.at(name).at("pass").get<bool>();
            rec[name] = ok;
            line += std::string("  ") + name + (ok ? " ok" : " FAILED");
            if (!ok && checks_j.at(name).contains("witness"))
                line += " [" + checks_j.at(name).at("witness").get<std::string>() + "]";
        }
        rec["shift"] = r.graded && r.graded->shift ? Json(*r.graded->shift) : Json(nullptr);
        out.records.push_back(std::move(rec));
        out.pretty.push_back(line);
    }
    Json names = Json::array();
    for (const auto& [flag, name] : std::vector<std::pair<bool, const char*>>{{checks.count, "count"},
                                                                             {checks.graded, "graded"},
                                                                             {checks.dominance, "dominance"},
                                                                             {checks.kleshchev, "kleshchev"},
                                                                             {checks.goodpath, "goodpath"}})
        if (flag) names.push_back(name);
    out.document = {{"kappa_c", kappa_c}, {"checks", names}, {"pass", all_pass}, {"blocks", blocks}};
    if (max_n) (*out.document)["max_n"] = *max_n;
    out.pretty.push_back(std::to_string(reports.size()) + " block(s), " + (all_pass ? "all passed" : "FAILURES"));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Combinatorics of KLR algebras of types A and C, and the level-two bridge between them"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for every subcommand");

    Common common;
    auto add_common = [&](CLI::App* sub, bool typed) {
        if (typed) {
            sub->add_option("--type", common.type, "Cartan type: a or c")->check(CLI::IsMember({"a", "c", "A", "C"}))
                ->capture_default_str();
            sub->add_option("--charge", common.charge, "Comma-separated charge, e.g. 0 or 1,1")->required();
        }
        sub->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"json", "csv", "pretty"}))
            ->capture_default_str();
    };

    std::optional<int> n, max_n;
    std::string beta, shape, residues, weight, omega, checks = "all";
    bool with_degrees = false, list = false;
    int kappa_c = 0;

    auto* block = app.add_subcommand("block", "List the shapes of one block (--beta) or of every block of size --n");
    add_common(block, true);
    block->add_option("--n", n, "Total size");
    block->add_option("--beta", beta, "Block as JSON {\"0\":1} or 0:1,1:2");

    auto* tableaux = app.add_subcommand("tableaux", "Stream the standard tableaux of a shape");
    add_common(tableaux, true);
    tableaux->add_option("--shape", shape, "Shape, e.g. 3,2,1 or 2,1/1")->required();
    tableaux->add_option("--residues", residues, "Keep only this residue sequence");
    tableaux->add_flag("--with-degrees", with_degrees, "Include the degree of each tableau");

    auto* kleshchev = app.add_subcommand("kleshchev", "Kleshchev test for --shape, or --list over --n / --beta");
    add_common(kleshchev, true);
    kleshchev->add_option("--shape", shape, "Shape to test");
    kleshchev->add_option("--n", n, "List over all shapes of this size");
    kleshchev->add_option("--beta", beta, "List over one block");
    kleshchev->add_flag("--list", list, "List Kleshchev shapes, one per line");

    auto* gdim = app.add_subcommand("gdim", "Graded dimension of a Specht module, a weight space, or a block");
    add_common(gdim, true);
    gdim->add_option("--shape", shape, "Specht module shape");
    gdim->add_option("--weight", weight, "Residue sequence of the weight space");
    gdim->add_option("--beta", beta, "Block");
    gdim->add_option("--omega", omega, "Truncate the block to tableaux starting with content omega (type C)");

    auto* bridge = app.add_subcommand("bridge", "Bridge data and the bipartition image of a level-one type-C shape");
    add_common(bridge, false);
    bridge->add_option("--kappa-c", kappa_c, "Type-C charge")->required()->check(CLI::NonNegativeNumber);
    bridge->add_option("--shape", shape, "Partition in the type-C block");
    bridge->add_option("--beta", beta, "Whole type-C block");

    auto* verify = app.add_subcommand("verify", "Check the bridge on every type-C block with a zero node");
    add_common(verify, false);
    verify->add_option("--kappa-c", kappa_c, "Type-C charge")->required()->check(CLI::NonNegativeNumber);
    verify->add_option("--max-n", max_n, "Largest block height");
    verify->add_option("--beta", beta, "A single block instead of a range");
    verify->add_option("--checks", checks, "Subset of count,graded,dominance,kleshchev,goodpath, or all")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        Output out;
        int status = 0;
        if (*block) out = cmd_block(common, n, beta);
        else if (*tableaux) out = cmd_tableaux(common, shape, residues, with_degrees);
        else if (*kleshchev) out = cmd_kleshchev(common, shape, n, beta, list);
        else if (*gdim) out = cmd_gdim(common, shape, weight, beta, omega);
        else if (*bridge) out = cmd_bridge(kappa_c, shape, beta);
        else {
            bool pass = true;
            out = cmd_verify(kappa_c, max_n, beta, checks, pass);
            status = pass ? 0 : 1;
        }
        emit(out, common.format);
        std::cout.flush();
        return status;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const klr::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
