#include "klr/json_io.hpp"

namespace klr::json {

json encode(const RootVector& v) {
    json j = json::object();
    for (auto [i, m] : v.entries()) j[std::to_string(i)] = m;
    return j;
}

json encode(const Partition& p) { return p.parts(); }

json encode(const MultiPartition& mp) {
    if (mp.level() == 1) return encode(mp.component(1));
    json j = json::array();
    for (const auto& p : mp.components()) j.push_back(encode(p));
    return j;
}

json encode(const Node& a) { return json::array({a.row, a.col, a.comp}); }

json encode(const StandardTableau& t) {
    json rows = t.rows();
    if (t.shape().level() == 1) rows = rows.at(0);
    return {{"shape", encode(t.shape())}, {"rows", rows}};
}

json encode(const SemistandardTableauPlus& t) {
    return {{"shape", encode(t.shape())},
            {"rho", encode(t.rho())},
            {"lambda", encode(t.lambda())},
            {"fill", t.fill()}};
}

json encode(const SegmentData& s) { return {{"k", s.k}, {"residues", s.residues}, {"ydeg", s.ydeg}}; }

json encode(const LaurentPoly& p) {
    json j = json::array();
    for (auto [e, c] : p.terms()) j.push_back(json::array({e, c}));
    return j;
}

json encode(const BlockBridge& b) {
    return {{"kappa_c", b.kappa_c}, {"beta", encode(b.beta)},   {"a0", b.a0},         {"rho", encode(b.rho)},
            {"omega", encode(b.omega)}, {"kappa1", b.kappa1}, {"kappa2", b.kappa2}, {"beta_minus_omega", encode(b.a_beta())}};
}

namespace {

json pair_json(const ShapePair& p) { return {{"nu", encode(p.nu)}, {"bipartition", encode(p.bp)}}; }

void put_witness(json& j, const std::optional<std::string>& w) {
    if (w) j["witness"] = *w;
}

}  // namespace

json encode(const BridgeReport& r) {
    json checks = json::object();
    if (r.count) {
        json per = json::array();
        for (const auto& s : r.count->per_shape) {
            json e = pair_json(s.shapes);
            e["factorizable"] = s.factorizable;
            e["rho_tableaux"] = s.rho_tableaux;
            e["bipartition_tableaux"] = s.bp_tableaux;
            e["pass"] = s.pass;
            per.push_back(std::move(e));
        }
        json c = {{"pass", r.count->pass},
                  {"lhs", r.count->lhs},
                  {"rhs", r.count->rhs},
                  {"bijective", r.count->bijective},
                  {"per_shape", per}};
        put_witness(c, r.count->witness);
        checks["count"] = std::move(c);
    }
    if (r.graded) {
        json per = json::array();
        for (const auto& s : r.graded->per_shape) {
            json e = pair_json(s.shapes);
            e["factorizable_gdim"] = encode(s.factorizable);
            e["rho_gdim"] = encode(s.rho);
            e["bipartition_gdim"] = encode(s.bp);
            e["shift"] = s.shift ? json(*s.shift) : json(nullptr);
            per.push_back(std::move(e));
        }
        json g = {{"pass", r.graded->pass},
                  {"shift", r.graded->shift ? json(*r.graded->shift) : json(nullptr)},
                  {"per_shape", per}};
        put_witness(g, r.graded->witness);
        checks["graded"] = std::move(g);
    }
    if (r.dominance) {
        json d = {{"pass", r.dominance->pass}, {"monotone", r.dominance->monotone}, {"pairs", r.dominance->pairs}};
        put_witness(d, r.dominance->witness);
        checks["dominance"] = std::move(d);
    }
    if (r.kleshchev) {
        json a = json::array(), c = json::array();
        for (const auto& bp : r.kleshchev->a_kleshchev) a.push_back(encode(bp));
        for (const auto& nu : r.kleshchev->c_kleshchev) c.push_back(encode(nu));
        json k = {{"pass", r.kleshchev->pass}, {"a_kleshchev", a}, {"c_kleshchev", c}};
        put_witness(k, r.kleshchev->witness);
        checks["kleshchev"] = std::move(k);
    }
    if (r.goodpath) {
        json per = json::array();
        for (const auto& e : r.goodpath->entries) {
            per.push_back({{"nu", encode(e.nu)},
                           {"word", e.word ? json(*e.word) : json(nullptr)},
                           {"replayed", e.replayed}});
        }
        json g = {{"pass", r.goodpath->pass}, {"entries", per}};
        put_witness(g, r.goodpath->witness);
        checks["goodpath"] = std::move(g);
    }
    json cb = json::array(), ab = json::array();
    for (const auto& nu : r.c_block) cb.push_back(encode(nu));
    for (const auto& bp : r.a_block) ab.push_back(encode(bp));
    return {{"bridge", encode(r.bridge)}, {"c_block", cb}, {"a_block", ab}, {"pass", r.pass()}, {"checks", checks}};
}

RootVector decode_root_vector(const json& j) {
    if (!j.is_object()) throw Error("root vector JSON must be an object");
    RootVector v;
    for (auto it = j.begin(); it != j.end(); ++it) {
        std::size_t used = 0;
        const int i = std::stoi(it.key(), &used);
        if (used != it.key().size()) throw Error("bad residue key '" + it.key() + "'");
        const int m = it.value().get<int>();
        if (m < 0) throw Error("negative multiplicity in root vector");
        v.add(i, m);
    }
    return v;
}

Partition decode_partition(const json& j) {
    if (!j.is_array()) throw Error("partition JSON must be an array");
    return Partition(j.get<std::vector<int>>());
}

MultiPartition decode_multipartition(const json& j) {
    if (!j.is_array()) throw Error("multipartition JSON must be an array");
    if (j.empty() || !j.front().is_array()) return MultiPartition{decode_partition(j)};
    std::vector<Partition> comps;
    for (const auto& c : j) comps.push_back(decode_partition(c));
    return MultiPartition(std::move(comps));
}

StandardTableau decode_tableau(const json& j) {
    const MultiPartition shape = decode_multipartition(j.at("shape"));
    std::vector<std::vector<std::vector<int>>> rows;
    if (shape.level() == 1) rows.push_back(j.at("rows").get<std::vector<std::vector<int>>>());
    else rows = j.at("rows").get<std::vector<std::vector<std::vector<int>>>>();
    return tableau_from_rows(shape, rows);
}

LaurentPoly decode_laurent(const json& j) {
    std::map<int, LaurentPoly::Coeff> coeffs;
    for (const auto& term : j) coeffs[term.at(0).get<int>()] += term.at(1).get<LaurentPoly::Coeff>();
    return LaurentPoly(coeffs);
}

}  // namespace klr::json
