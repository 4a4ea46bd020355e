#include "klr/morita.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "klr/crystal.hpp"

namespace klr {

BlockBridge make_bridge(Residue kappa_c, const RootVector& beta) {
    if (kappa_c < 0) throw Error("kappa_c must be non-negative");
    BlockBridge b;
    b.kappa_c = kappa_c;
    b.beta = beta;
    b.a0 = beta[0];
    if (b.a0 == 0) throw Error("no zero nodes: bridge undefined, block is already type-A-like");
    b.rho = Partition::rectangle(b.a0, kappa_c + b.a0);
    b.omega = content(b.c_weight(), MultiPartition{b.rho});
    if (!b.omega.le(beta)) throw Error("omega = " + b.omega.to_string() + " is not below beta = " + beta.to_string());
    b.kappa1 = kappa_c + b.a0;
    b.kappa2 = b.a0;
    return b;
}

Partition to_type_c(const MultiPartition& bp, const BlockBridge& bridge) {
    if (bp.level() != 2) throw Error("to_type_c expects a bipartition");
    if (content(bridge.a_weight(), bp) != bridge.a_beta()) {
        throw Error("bipartition " + bp.to_string() + " is not in the A-block " + bridge.a_beta().to_string());
    }
    return rect_add(bridge.rho, bp.component(1), bp.component(2).conjugate());
}

MultiPartition from_type_c(const Partition& nu, const BlockBridge& bridge) {
    if (content(bridge.c_weight(), MultiPartition{nu}) != bridge.beta) {
        throw Error("partition " + nu.to_string() + " is not in the C-block " + bridge.beta.to_string());
    }
    auto [lambda, mu] = rect_split(nu, bridge.rho);
    return MultiPartition{lambda, mu};
}

StandardTableau tableau_to_type_c(const StandardTableau& s, const StandardTableau& u, const BlockBridge& bridge) {
    if (s.shape() != MultiPartition{bridge.rho}) throw Error("tableau_to_type_c: s is not a rho-tableau");
    const Partition nu = to_type_c(u.shape(), bridge);
    const int b = bridge.rho.length();
    std::vector<Node> nodes = s.nodes();
    for (const Node& x : u.nodes()) {
        if (x.comp == 1) nodes.push_back({x.row, bridge.a0 + x.col, 1});
        else nodes.push_back({b + x.col, x.row, 1});
    }
    return StandardTableau(MultiPartition{nu}, std::move(nodes));
}

std::pair<StandardTableau, StandardTableau> tableau_from_type_c(const StandardTableau& t, const BlockBridge& bridge) {
    if (t.shape().level() != 1) throw Error("tableau_from_type_c expects a partition tableau");
    const MultiPartition bp = from_type_c(t.shape().component(1), bridge);
    const int r = bridge.rho.size();
    const int b = bridge.rho.length();
    std::vector<Node> head(t.nodes().begin(), t.nodes().begin() + r);
    std::vector<Node> tail;
    for (auto it = t.nodes().begin() + r; it != t.nodes().end(); ++it) {
        if (it->row <= b) {
            if (it->col <= bridge.a0) throw Error("tableau does not factorize through rho");
            tail.push_back({it->row, it->col - bridge.a0, 1});
        } else {
            tail.push_back({it->col, it->row - b, 2});
        }
    }
    return {StandardTableau(MultiPartition{bridge.rho}, std::move(head)), StandardTableau(bp, std::move(tail))};
}

CheckSet CheckSet::parse(const std::string& csv) {
    CheckSet out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok == "count") out.count = true;
        else if (tok == "graded") out.graded = true;
        else if (tok == "dominance") out.dominance = true;
        else if (tok == "kleshchev") out.kleshchev = true;
        else if (tok == "goodpath") out.goodpath = true;
        else if (tok == "all") out = all();
        else throw Error("unknown check '" + tok + "'");
    }
    return out;
}

bool BridgeReport::pass() const {
    return (!count || count->pass) && (!graded || graded->pass) && (!dominance || dominance->pass) &&
           (!kleshchev || kleshchev->pass) && (!goodpath || goodpath->pass);
}

namespace {

std::string pair_name(const ShapePair& p) { return p.nu.to_string() + " <-> " + p.bp.to_string(); }

CountCheck run_count(const BlockBridge& bridge, const std::vector<ShapePair>& pairs,
                     const std::vector<Partition>& c_block, const std::vector<MultiPartition>& a_block) {
    CountCheck out;
    // Bijectivity: images of the A-block are exactly the C-block.
    std::set<Partition> image;
    for (const auto& p : pairs) image.insert(p.nu);
    const std::set<Partition> c_set(c_block.begin(), c_block.end());
    out.bijective = image == c_set && image.size() == a_block.size();
    if (!out.bijective) {
        for (const auto& nu : c_block) {
            if (!image.count(nu)) {
                out.witness = "C-shape " + nu.to_string() + " has no A-preimage";
                break;
            }
        }
        if (!out.witness) out.witness = "image of the A-block is not the C-block";
    }

    const std::uint64_t rho_count = count_standard(MultiPartition{bridge.rho});
    std::uint64_t bp_sq = 0;
    bool shapes_ok = true;
    for (const auto& p : pairs) {
        CountShape cs;
        cs.shapes = p;
        cs.factorizable = count_factorizable(MultiPartition{p.nu}, bridge.c_weight(), bridge.omega);
        cs.rho_tableaux = rho_count;
        cs.bp_tableaux = count_standard(p.bp);
        cs.pass = cs.factorizable == cs.rho_tableaux * cs.bp_tableaux;
        if (!cs.pass && shapes_ok) {
            shapes_ok = false;
            if (!out.witness) out.witness = "per-shape count differs at " + pair_name(p);
        }
        bp_sq += cs.bp_tableaux * cs.bp_tableaux;
        out.per_shape.push_back(std::move(cs));
    }
    for (const auto& nu : c_block) {
        const std::uint64_t f = count_factorizable(MultiPartition{nu}, bridge.c_weight(), bridge.omega);
        out.lhs += f * f;
    }
    out.rhs = rho_count * rho_count * bp_sq;
    out.pass = out.bijective && shapes_ok && out.lhs == out.rhs;
    if (!out.pass && !out.witness) out.witness = "block totals differ";
    return out;
}

GradedCheck run_graded(const BlockBridge& bridge, const std::vector<ShapePair>& pairs) {
    GradedCheck out;
    const LaurentPoly rho_poly = gdim_specht(MultiPartition{bridge.rho}, bridge.c_weight());
    std::set<std::optional<int>> shifts;
    for (const auto& p : pairs) {
        GradedShape gs;
        gs.shapes = p;
        gs.factorizable = gdim_factorizable(MultiPartition{p.nu}, bridge.c_weight(), bridge.omega);
        gs.rho = rho_poly;
        gs.bp = gdim_specht(p.bp, bridge.a_weight());
        gs.shift = monomial_shift(gs.factorizable, gs.rho * gs.bp);
        if (gs.shift != std::optional<int>(0) && !out.witness) {
            out.witness = pair_name(p) + ": " + gs.factorizable.to_string() + " vs " + (gs.rho * gs.bp).to_string();
        }
        shifts.insert(gs.shift);
        out.per_shape.push_back(std::move(gs));
    }
    if (shifts.size() == 1) out.shift = *shifts.begin();
    if (pairs.empty()) out.shift = 0;
    out.pass = out.shift == std::optional<int>(0);
    return out;
}

DominanceCheck run_dominance(const std::vector<ShapePair>& pairs) {
    DominanceCheck out;
    out.pass = true;
    out.monotone = true;
    for (const auto& x : pairs) {
        for (const auto& y : pairs) {
            ++out.pairs;
            const bool a = dominates(x.bp, y.bp);
            const bool c = dominates(MultiPartition{x.nu}, MultiPartition{y.nu});
            if (a && !c) out.monotone = false;
            if (a != c && out.pass) {
                out.pass = false;
                std::ostringstream os;
                os << x.bp.to_string() << (a ? " dominates " : " does not dominate ") << y.bp.to_string() << " but "
                   << x.nu.to_string() << (c ? " dominates " : " does not dominate ") << y.nu.to_string();
                out.witness = os.str();
            }
        }
    }
    return out;
}

KleshchevCheck run_kleshchev(const BlockBridge& bridge, const std::vector<ShapePair>& pairs,
                             const std::vector<Partition>& c_block) {
    KleshchevCheck out;
    std::set<Partition> image;
    for (const auto& p : pairs) {
        if (is_kleshchev(p.bp, bridge.a_weight())) {
            out.a_kleshchev.push_back(p.bp);
            image.insert(p.nu);
        }
    }
    std::set<Partition> c_set;
    for (const auto& nu : c_block) {
        if (is_kleshchev(MultiPartition{nu}, bridge.c_weight())) {
            out.c_kleshchev.push_back(nu);
            c_set.insert(nu);
        }
    }
    out.pass = image == c_set;
    if (!out.pass) {
        for (const auto& p : pairs) {
            if (image.count(p.nu) != c_set.count(p.nu)) {
                out.witness = pair_name(p) + ": A-Kleshchev=" + (image.count(p.nu) ? "true" : "false") +
                              ", C-Kleshchev=" + (c_set.count(p.nu) ? "true" : "false");
                break;
            }
        }
        if (!out.witness) out.witness = "C-Kleshchev shape outside the image of the A-block";
    }
    return out;
}

GoodPathCheck run_goodpath(const BlockBridge& bridge, const std::vector<Partition>& c_block) {
    GoodPathCheck out;
    out.pass = true;
    const auto w = bridge.c_weight();
    for (const auto& nu : c_block) {
        if (!is_kleshchev(MultiPartition{nu}, w)) continue;
        GoodPathEntry e;
        e.nu = nu;
        e.word = factors_through(nu, bridge.rho, w);
        if (e.word) {
            const auto empty = MultiPartition::empty_of_level(1);
            const ResidueSequence head(e.word->begin(), e.word->begin() + bridge.rho.size());
            const auto full = cogood_path(empty, *e.word, w);
            const auto part = cogood_path(empty, head, w);
            e.replayed = full.shape == MultiPartition{nu} && part.shape == MultiPartition{bridge.rho};
        }
        if (!e.replayed && out.pass) {
            out.pass = false;
            out.witness = "Kleshchev " + nu.to_string() + (e.word ? ": witness does not replay" : ": no witness word");
        }
        out.entries.push_back(std::move(e));
    }
    return out;
}

}  // namespace

BridgeReport verify_bridge(const BlockBridge& bridge, const CheckSet& checks) {
    BridgeReport rep;
    rep.bridge = bridge;
    for (const auto& mp : enumerate_block(bridge.c_weight(), bridge.beta)) rep.c_block.push_back(mp.component(1));
    rep.a_block = enumerate_block(bridge.a_weight(), bridge.a_beta());

    std::vector<ShapePair> pairs;
    for (const auto& bp : rep.a_block) pairs.push_back({to_type_c(bp, bridge), bp});

    if (checks.count) rep.count = run_count(bridge, pairs, rep.c_block, rep.a_block);
    if (checks.graded) rep.graded = run_graded(bridge, pairs);
    if (checks.dominance) rep.dominance = run_dominance(pairs);
    if (checks.kleshchev) rep.kleshchev = run_kleshchev(bridge, pairs, rep.c_block);
    if (checks.goodpath) rep.goodpath = run_goodpath(bridge, rep.c_block);
    return rep;
}

std::vector<RootVector> c_blocks_with_zero(Residue kappa_c, int max_n) {
    const DominantWeight w(CartanType::c(), {kappa_c});
    std::vector<RootVector> out;
    for (int n = 1; n <= max_n; ++n) {
        std::set<RootVector> seen;
        for (const auto& p : partitions_of(n)) {
            RootVector beta = content(w, MultiPartition{p});
            if (beta[0] >= 1) seen.insert(std::move(beta));
        }
        out.insert(out.end(), seen.begin(), seen.end());
    }
    return out;
}

std::vector<BridgeReport> verify_range(Residue kappa_c, int max_n, const CheckSet& checks, unsigned threads) {
    const auto blocks = c_blocks_with_zero(kappa_c, max_n);
    std::vector<BridgeReport> out(blocks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next++; k < blocks.size(); k = next++) {
            out[k] = verify_bridge(make_bridge(kappa_c, blocks[k]), checks);
        }
    };
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(blocks.size())));
    if (threads == 1) {
        worker();
        return out;
    }
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return out;
}

}  // namespace klr
