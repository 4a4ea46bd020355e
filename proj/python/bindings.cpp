#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "klr/crystal.hpp"
#include "klr/graded.hpp"
#include "klr/json_io.hpp"
#include "klr/morita.hpp"
#include "klr/semistandard.hpp"

namespace py = pybind11;
using namespace klr;

namespace {

using Shape = std::vector<std::vector<int>>;
using Beta = std::map<int, int>;

DominantWeight weight(const std::string& type, const std::vector<int>& charge) {
    return DominantWeight(parse_cartan_type(type), charge);
}

MultiPartition shape(const Shape& comps, const DominantWeight& w) {
    std::vector<Partition> parts;
    for (const auto& c : comps) parts.emplace_back(c);
    MultiPartition mp(std::move(parts));
    if (mp.level() != w.level()) throw Error("shape level does not match the charge");
    return mp;
}

Shape to_py(const MultiPartition& mp) {
    Shape out;
    for (const auto& c : mp.components()) out.push_back(c.parts());
    return out;
}

// Reports and other nested records cross the boundary as JSON text.
py::object from_json(const nlohmann::json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

py::list tableaux(const std::string& type, const std::vector<int>& charge, const Shape& comps,
                  const std::optional<std::vector<int>>& residues) {
    const auto w = weight(type, charge);
    const auto mp = shape(comps, w);
    std::optional<ResidueFilter> filter;
    if (residues) filter = ResidueFilter{w, *residues};
    py::list out;
    for_each_standard(mp, filter, [&](const StandardTableau& t) {
        py::dict d;
        d["rows"] = t.rows();
        d["residues"] = residue_sequence(t, w);
        d["degree"] = degree(t, w);
        d["y"] = y_exponents(t, w);
        d["word"] = permutation_word(t);
        out.append(std::move(d));
        return true;
    });
    return out;
}

std::vector<std::pair<int, std::int64_t>> poly(const LaurentPoly& p) { return p.terms(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Combinatorics of KLR algebras of types A and C";

    py::register_exception<Error>(m, "KLRError", PyExc_ValueError);

    m.def("bilinear_form", [](const std::string& type, int i, int j) { return bilinear_form(parse_cartan_type(type), i, j); });

    m.def("residue", [](const std::string& type, const std::vector<int>& charge, int row, int col, int comp) {
        return residue(weight(type, charge), Node{row, col, comp});
    }, py::arg("type"), py::arg("charge"), py::arg("row"), py::arg("col"), py::arg("comp") = 1);

    m.def("content", [](const std::string& type, const std::vector<int>& charge, const Shape& comps) {
        const auto w = weight(type, charge);
        return content(w, shape(comps, w)).entries();
    });

    m.def("block", [](const std::string& type, const std::vector<int>& charge, const Beta& beta) {
        std::vector<Shape> out;
        for (const auto& mp : enumerate_block(weight(type, charge), RootVector(beta))) out.push_back(to_py(mp));
        return out;
    });

    m.def("conjugate", [](const std::vector<int>& p) { return Partition(p).conjugate().parts(); });

    m.def("dominates", [](const Shape& a, const Shape& b) {
        std::vector<Partition> pa, pb;
        for (const auto& c : a) pa.emplace_back(c);
        for (const auto& c : b) pb.emplace_back(c);
        return dominates(MultiPartition(pa), MultiPartition(pb));
    });

    m.def("tableaux", &tableaux, py::arg("type"), py::arg("charge"), py::arg("shape"),
          py::arg("residues") = std::nullopt);

    m.def("count_tableaux", [](const std::vector<int>& p) { return count_standard(MultiPartition{Partition(p)}); });

    m.def("is_kleshchev", [](const std::string& type, const std::vector<int>& charge, const Shape& comps) {
        const auto w = weight(type, charge);
        return is_kleshchev(shape(comps, w), w);
    });

    m.def("good_node", [](const std::string& type, const std::vector<int>& charge, const Shape& comps, int i) {
        const auto w = weight(type, charge);
        std::optional<std::array<int, 3>> out;
        if (auto a = good_node(shape(comps, w), w, i)) out = std::array<int, 3>{a->row, a->col, a->comp};
        return out;
    });

    m.def("cogood_node", [](const std::string& type, const std::vector<int>& charge, const Shape& comps, int i) {
        const auto w = weight(type, charge);
        std::optional<std::array<int, 3>> out;
        if (auto a = cogood_node(shape(comps, w), w, i)) out = std::array<int, 3>{a->row, a->col, a->comp};
        return out;
    });

    m.def("good_path", [](const std::string& type, const std::vector<int>& charge, const Shape& comps) {
        const auto w = weight(type, charge);
        return good_path(shape(comps, w), w);
    });

    m.def("factors_through", [](const std::vector<int>& nu, const std::vector<int>& rho, int kappa_c) {
        return factors_through(Partition(nu), Partition(rho), DominantWeight(CartanType::c(), {kappa_c}));
    });

    m.def("gdim_specht", [](const std::string& type, const std::vector<int>& charge, const Shape& comps,
                            const std::optional<std::vector<int>>& weight_seq) {
        const auto w = weight(type, charge);
        const auto mp = shape(comps, w);
        return poly(weight_seq ? gdim_specht_weight(mp, w, *weight_seq) : gdim_specht(mp, w));
    }, py::arg("type"), py::arg("charge"), py::arg("shape"), py::arg("weight") = std::nullopt);

    m.def("gdim_block", [](const std::string& type, const std::vector<int>& charge, const Beta& beta,
                           const std::optional<Beta>& omega) {
        std::optional<RootVector> om;
        if (omega) om = RootVector(*omega);
        return poly(gdim_block(weight(type, charge), RootVector(beta), om));
    }, py::arg("type"), py::arg("charge"), py::arg("beta"), py::arg("omega") = std::nullopt);

    m.def("sstd_plus", [](const std::vector<int>& rho, const std::vector<int>& lambda) {
        std::vector<std::vector<std::vector<int>>> out;
        for (const auto& t : enumerate_sstd_plus(Partition(rho), Partition(lambda))) out.push_back(t.fill());
        return out;
    });

    m.def("bridge", [](int kappa_c, const Beta& beta) { return from_json(json::encode(make_bridge(kappa_c, RootVector(beta)))); });

    m.def("to_type_c", [](int kappa_c, const Beta& beta, const Shape& bp) {
        const auto b = make_bridge(kappa_c, RootVector(beta));
        return to_type_c(shape(bp, b.a_weight()), b).parts();
    });

    m.def("from_type_c", [](int kappa_c, const Beta& beta, const std::vector<int>& nu) {
        return to_py(from_type_c(Partition(nu), make_bridge(kappa_c, RootVector(beta))));
    });

    m.def("verify", [](int kappa_c, const Beta& beta, const std::string& checks) {
        return from_json(json::encode(verify_bridge(make_bridge(kappa_c, RootVector(beta)), CheckSet::parse(checks))));
    }, py::arg("kappa_c"), py::arg("beta"), py::arg("checks") = "all");

    m.def("verify_range", [](int kappa_c, int max_n, const std::string& checks, unsigned threads) {
        std::vector<BridgeReport> reports;
        {
            py::gil_scoped_release release;
            reports = verify_range(kappa_c, max_n, CheckSet::parse(checks), threads);
        }
        py::list out;
        for (const auto& r : reports) out.append(from_json(json::encode(r)));
        return out;
    }, py::arg("kappa_c"), py::arg("max_n"), py::arg("checks") = "all", py::arg("threads") = 1);
}
