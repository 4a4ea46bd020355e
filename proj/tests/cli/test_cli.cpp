#include <doctest.h>

#include <array>
#include <cstdio>
#include <sstream>
#include <string>

#include "klr/crystal.hpp"
#include "klr/json_io.hpp"

using namespace klr;
using Json = nlohmann::json;

namespace {

struct Run {
    int status = -1;
    std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + (env.empty() ? "" : " ") + KLR_CLI_PATH + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string line;
    while (std::getline(ss, line)) out.push_back(line);
    return out;
}

std::vector<std::string> csv_split(const std::string& line) {
    std::vector<std::string> cells(1);
    bool quoted = false;
    for (std::size_t k = 0; k < line.size(); ++k) {
        const char ch = line[k];
        if (quoted) {
            if (ch == '"' && k + 1 < line.size() && line[k + 1] == '"') {
                cells.back() += '"';
                ++k;
            } else if (ch == '"') {
                quoted = false;
            } else {
                cells.back() += ch;
            }
        } else if (ch == '"') {
            quoted = true;
        } else if (ch == ',') {
            cells.emplace_back();
        } else {
            cells.back() += ch;
        }
    }
    return cells;
}

// csv rows back to JSON records, parsing every cell as JSON
std::vector<Json> csv_records(const std::string& text) {
    const auto ls = lines(text);
    REQUIRE(!ls.empty());
    const auto header = csv_split(ls[0]);
    std::vector<Json> out;
    for (std::size_t k = 1; k < ls.size(); ++k) {
        const auto cells = csv_split(ls[k]);
        REQUIRE(cells.size() == header.size());
        Json rec = Json::object();
        for (std::size_t c = 0; c < cells.size(); ++c) rec[header[c]] = Json::parse(cells[c]);
        out.push_back(rec);
    }
    return out;
}

std::vector<Json> json_lines(const std::string& text) {
    std::vector<Json> out;
    for (const auto& l : lines(text)) out.push_back(Json::parse(l));
    return out;
}

}  // namespace

TEST_CASE("documented examples") {
    const auto g = run("gdim --type c --charge 0 --shape 2,2 --weight 0,1,1,0");
    CHECK(g.status == 0);
    CHECK(g.out == "[[-1,1],[1,1]]\n");
    const auto k = run("kleshchev --type c --charge 0 --shape 2");
    CHECK(k.status == 0);
    CHECK(k.out == "false\n");
    CHECK(run("verify --kappa-c 0 --max-n 8 --checks count,graded").status == 0);
}

TEST_CASE("exit codes") {
    CHECK(run("").status == 2);
    CHECK(run("nonsense").status == 2);
    CHECK(run("gdim --type c --charge 0").status == 2);
    CHECK(run("gdim --type b --charge 0 --shape 1").status == 2);
    CHECK(run("gdim --type c --charge -1 --shape 1").status == 2);
    CHECK(run("gdim --type c --charge 0 --shape 2,3").status == 2);
    CHECK(run("gdim --type c --charge 0 --shape 1/1").status == 2);
    CHECK(run("tableaux --type c --charge 0 --shape 2 --format xml").status == 2);
    CHECK(run("block --type c --charge 0").status == 2);
    CHECK(run("block --type c --charge 0 --n 3 --beta 0:1").status == 2);
    CHECK(run("bridge --kappa-c 0 --shape 2,2 --beta 0:1").status == 2);
    CHECK(run("bridge --kappa-c 0 --beta 1:1").status == 2);
    CHECK(run("verify --kappa-c 0 --max-n 3 --checks count,bogus").status == 2);
    CHECK(run("verify --kappa-c 0 --max-n 3", "KLR_THREADS=zero").status == 2);
    CHECK(run("--help").status == 0);
    // dominance transport fails on a block of height 8
    CHECK(run("verify --kappa-c 0 --beta 0:2,1:3,2:2,3:1 --checks dominance").status == 1);
    CHECK(run("verify --kappa-c 1 --max-n 6").status == 0);
}

TEST_CASE("output is deterministic and independent of the thread count") {
    const std::string args = "verify --kappa-c 1 --max-n 7 --checks count,graded,kleshchev,goodpath";
    const auto a = run(args, "KLR_THREADS=1");
    const auto b = run(args, "KLR_THREADS=3");
    const auto c = run(args);
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
    CHECK(run("tableaux --type c --charge 0 --shape 3,2,1 --with-degrees").out ==
          run("tableaux --type c --charge 0 --shape 3,2,1 --with-degrees").out);
}

TEST_CASE("json tableaux decode to the library's enumeration") {
    const DominantWeight w{CartanType::c(), {1}};
    const MultiPartition shape{Partition({3, 2, 2})};
    const auto recs = json_lines(run("tableaux --type c --charge 1 --shape 3,2,2 --with-degrees").out);
    const auto expect = enumerate_standard(shape);
    REQUIRE(recs.size() == expect.size());
    for (std::size_t k = 0; k < recs.size(); ++k) {
        const auto t = klr::json::decode_tableau(recs[k]);
        CHECK(t == expect[k]);
        CHECK(recs[k].at("degree").get<int>() == degree(t, w));
        CHECK(recs[k].at("residues").get<ResidueSequence>() == residue_sequence(t, w));
    }
    const auto filtered = json_lines(run("tableaux --type a --charge 1,1 --shape 1/1 --residues 1,1").out);
    CHECK(filtered.size() == 2);
}

TEST_CASE("csv and json carry the same data") {
    for (const std::string args : {"tableaux --type c --charge 0 --shape 3,2,1 --with-degrees",
                                   "tableaux --type a --charge 0,2 --shape 2/1",
                                   "block --type c --charge 0 --n 6", "kleshchev --type a --charge 1,1 --n 4 --list",
                                   "bridge --kappa-c 1 --beta 0:2,1:3,2:1"}) {
        CAPTURE(args);
        const auto j = run(args);
        const auto c = run(args + " --format csv");
        REQUIRE(j.status == 0);
        REQUIRE(c.status == 0);
        const auto from_csv = csv_records(c.out);
        if (args.rfind("bridge", 0) == 0) {
            const Json doc = Json::parse(j.out);
            REQUIRE(doc.at("pairs").size() == from_csv.size());
            for (std::size_t k = 0; k < from_csv.size(); ++k) {
                CHECK(doc.at("pairs")[k].at("nu") == from_csv[k].at("nu"));
                CHECK(doc.at("pairs")[k].at("bipartition") == from_csv[k].at("bipartition"));
                CHECK(doc.at("bridge").at("rho") == from_csv[k].at("rho"));
            }
            continue;
        }
        const auto from_json = json_lines(j.out);
        REQUIRE(from_json.size() == from_csv.size());
        for (std::size_t k = 0; k < from_json.size(); ++k) CHECK(from_json[k] == from_csv[k]);
    }
    const auto gj = Json::parse(run("gdim --type c --charge 0 --beta 0:2,1:2").out);
    const auto gc = csv_records(run("gdim --type c --charge 0 --beta 0:2,1:2 --format csv").out);
    REQUIRE(gj.size() == gc.size());
    for (std::size_t k = 0; k < gc.size(); ++k) {
        CHECK(gj[k][0] == gc[k].at("exponent"));
        CHECK(gj[k][1] == gc[k].at("coefficient"));
    }
}

TEST_CASE("kleshchev listing agrees with the library") {
    const DominantWeight w{CartanType::c(), {0}};
    const auto recs = json_lines(run("kleshchev --type c --charge 0 --n 7 --list").out);
    std::vector<Json> expect;
    for (const auto& p : partitions_of(7))
        if (is_kleshchev(MultiPartition{p}, w)) expect.push_back({{"shape", klr::json::encode(p)}});
    CHECK(recs == expect);
    CHECK(run("kleshchev --type c --charge 0 --n 7 --list --format pretty").out.find("3,2,1,1") !=
          std::string::npos);
}

TEST_CASE("verify report") {
    const auto r = run("verify --kappa-c 0 --beta 0:1,1:2");
    REQUIRE(r.status == 0);
    const Json doc = Json::parse(r.out);
    CHECK(doc.at("pass") == true);
    const Json& block = doc.at("blocks").at(0);
    CHECK(block.at("checks").at("count").at("lhs") == 4);
    CHECK(block.at("checks").at("graded").at("shift") == 0);
    CHECK(block.at("a_block") == Json::parse("[[[1],[1]]]"));
    const auto bridge = Json::parse(run("bridge --kappa-c 0 --shape 7,6,5,4").out);
    CHECK(bridge.at("bipartition") == Json::parse("[[3,2,1],[]]"));
    CHECK(bridge.at("bridge").at("kappa1") == 4);
}
