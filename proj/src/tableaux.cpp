#include "klr/tableaux.hpp"

#include <algorithm>
#include <map>

#include "shape_state.hpp"

namespace klr {

// ---------------------------------------------------------- StandardTableau

StandardTableau::StandardTableau(MultiPartition shape, std::vector<Node> nodes)
    : shape_(std::move(shape)), nodes_(std::move(nodes)) {
    if (static_cast<int>(nodes_.size()) != shape_.size()) {
        throw Error("tableau: node count does not match the shape");
    }
    // Adding nodes in entry order must stay inside the shape and produce an
    // l-partition at every step; this is exactly row and column strictness.
    detail::ShapeState grow(shape_.level());
    for (const Node& a : nodes_) {
        if (!shape_.contains(a) || !grow.is_addable(a)) {
            throw Error("tableau is not standard for shape " + shape_.to_string());
        }
        grow.add(a);
    }
}

int StandardTableau::entry(const Node& node) const {
    for (std::size_t k = 0; k < nodes_.size(); ++k) {
        if (nodes_[k] == node) return static_cast<int>(k) + 1;
    }
    throw Error("node not in tableau");
}

std::vector<std::vector<std::vector<int>>> StandardTableau::rows() const {
    std::vector<std::vector<std::vector<int>>> out(shape_.level());
    for (int m = 1; m <= static_cast<int>(shape_.level()); ++m) {
        const Partition& p = shape_.component(m);
        out[m - 1].resize(static_cast<std::size_t>(p.length()));
        for (int r = 1; r <= p.length(); ++r) out[m - 1][r - 1].assign(static_cast<std::size_t>(p.row(r)), 0);
    }
    for (std::size_t k = 0; k < nodes_.size(); ++k) {
        const Node& a = nodes_[k];
        out[a.comp - 1][a.row - 1][a.col - 1] = static_cast<int>(k) + 1;
    }
    return out;
}

MultiPartition StandardTableau::prefix_shape(int m) const {
    detail::ShapeState s(shape_.level());
    for (int k = 0; k < m && k < size(); ++k) s.add(nodes_[k]);
    return s.to_multipartition();
}

StandardTableau tableau_from_rows(const MultiPartition& shape,
                                  const std::vector<std::vector<std::vector<int>>>& rows) {
    const int n = shape.size();
    std::vector<Node> nodes(static_cast<std::size_t>(n), Node{0, 0, 0});
    if (rows.size() != shape.level()) throw Error("tableau rows: wrong number of components");
    for (int m = 1; m <= static_cast<int>(shape.level()); ++m) {
        const Partition& p = shape.component(m);
        const auto& comp = rows[m - 1];
        if (static_cast<int>(comp.size()) != p.length()) throw Error("tableau rows: row count mismatch");
        for (int r = 1; r <= p.length(); ++r) {
            if (static_cast<int>(comp[r - 1].size()) != p.row(r)) throw Error("tableau rows: row length mismatch");
            for (int c = 1; c <= p.row(r); ++c) {
                const int e = comp[r - 1][c - 1];
                if (e < 1 || e > n || nodes[e - 1].row != 0) throw Error("tableau rows: entries are not 1..n");
                nodes[e - 1] = Node{r, c, m};
            }
        }
    }
    return StandardTableau(shape, std::move(nodes));
}

StandardTableau initial_tableau(const MultiPartition& shape) {
    return StandardTableau(shape, shape.nodes());
}

StandardTableau column_initial_tableau(const MultiPartition& shape) {
    if (shape.level() != 1) throw Error("column-initial tableau is defined for partitions only");
    const Partition& p = shape.component(1);
    std::vector<Node> nodes;
    for (int c = 1; c <= p.row(1); ++c) {
        for (int r = 1; p.row(r) >= c; ++r) nodes.push_back({r, c, 1});
    }
    return StandardTableau(shape, std::move(nodes));
}

// --------------------------------------------------------------- statistics

ResidueSequence residue_sequence(const StandardTableau& t, const DominantWeight& weight) {
    ResidueSequence out;
    out.reserve(t.nodes().size());
    for (const Node& a : t.nodes()) out.push_back(residue(weight, a));
    return out;
}

int degree(const StandardTableau& t, const DominantWeight& weight) {
    detail::ShapeState s(t.shape().level());
    int deg = 0;
    for (const Node& a : t.nodes()) {
        s.add(a);
        const Residue i = residue(weight, a);
        deg += s.count_addable_below(a, weight, i) - s.count_removable_below(a, weight, i);
    }
    return deg;
}

std::vector<int> y_exponents(const StandardTableau& t, const DominantWeight& weight) {
    detail::ShapeState s(t.shape().level());
    std::vector<int> out;
    out.reserve(t.nodes().size());
    for (const Node& a : t.nodes()) {
        out.push_back(s.count_addable_below(a, weight, residue(weight, a)));
        s.add(a);
    }
    return out;
}

// -------------------------------------------------------------- enumeration

namespace {

// Depth-first enumeration of standard fillings of a fixed shape.  accept(k,
// node) decides whether node may carry entry k (1-based) given the nodes
// placed so far.
template <class Accept, class Emit>
bool dfs_fill(const MultiPartition& shape, detail::ShapeState& state, std::vector<Node>& placed,
              Accept& accept, Emit& emit) {
    const int n = shape.size();
    const int k = static_cast<int>(placed.size()) + 1;
    if (k > n) return emit(placed);
    for (int m = 1; m <= static_cast<int>(shape.level()); ++m) {
        const Partition& target = shape.component(m);
        for (int r = 1; r <= target.length(); ++r) {
            const int len = state.row_length(m, r);
            if (len >= target.row(r)) continue;
            const Node a{r, len + 1, m};
            if (!state.is_addable(a)) continue;
            if (!accept(k, a)) continue;
            state.add(a);
            placed.push_back(a);
            const bool go_on = dfs_fill(shape, state, placed, accept, emit);
            placed.pop_back();
            state.remove(a);
            if (!go_on) return false;
        }
    }
    return true;
}

}  // namespace

void for_each_standard(const MultiPartition& shape, const std::optional<ResidueFilter>& filter,
                       const std::function<bool(const StandardTableau&)>& visit) {
    if (filter && static_cast<int>(filter->sequence.size()) != shape.size()) return;
    detail::ShapeState state(shape.level());
    std::vector<Node> placed;
    auto accept = [&](int k, const Node& a) {
        return !filter || residue(filter->weight, a) == filter->sequence[k - 1];
    };
    auto emit = [&](const std::vector<Node>& nodes) { return visit(StandardTableau(shape, nodes)); };
    dfs_fill(shape, state, placed, accept, emit);
}

std::vector<StandardTableau> enumerate_standard(const MultiPartition& shape,
                                                const std::optional<ResidueFilter>& filter) {
    std::vector<StandardTableau> out;
    for_each_standard(shape, filter, [&](const StandardTableau& t) {
        out.push_back(t);
        return true;
    });
    return out;
}

std::uint64_t count_standard(const MultiPartition& shape, const std::optional<ResidueFilter>& filter) {
    if (filter && static_cast<int>(filter->sequence.size()) != shape.size()) return 0;
    detail::ShapeState state(shape.level());
    std::vector<Node> placed;
    std::uint64_t count = 0;
    auto accept = [&](int k, const Node& a) {
        return !filter || residue(filter->weight, a) == filter->sequence[k - 1];
    };
    auto emit = [&](const std::vector<Node>&) {
        ++count;
        return true;
    };
    dfs_fill(shape, state, placed, accept, emit);
    return count;
}

std::vector<StandardTableau> tableaux_with_residues(const DominantWeight& weight, const ResidueSequence& seq) {
    std::vector<StandardTableau> out;
    detail::ShapeState state(weight.level());
    std::vector<Node> placed;
    auto rec = [&](auto&& self) -> void {
        const std::size_t k = placed.size();
        if (k == seq.size()) {
            out.emplace_back(state.to_multipartition(), placed);
            return;
        }
        for (const Node& a : state.addable_nodes()) {
            if (residue(weight, a) != seq[k]) continue;
            state.add(a);
            placed.push_back(a);
            self(self);
            placed.pop_back();
            state.remove(a);
        }
    };
    rec(rec);
    return out;
}

namespace {

// Walks the tableaux of nu whose first ht(omega) entries use exactly the
// residues of omega.  The residue budget is charged while descending, so no
// non-factorizable prefix is ever extended past its first violation.
template <class Emit>
void walk_factorizable(const MultiPartition& nu, const DominantWeight& weight, const RootVector& omega,
                       Emit&& emit) {
    if (omega.height() > nu.size()) return;
    const int prefix = omega.height();
    std::map<Residue, int> left = omega.entries();
    detail::ShapeState state(nu.level());
    std::vector<Node> placed;
    auto rec = [&](auto&& self) -> void {
        const int k = static_cast<int>(placed.size()) + 1;
        if (k > nu.size()) {
            emit(placed);
            return;
        }
        for (int m = 1; m <= static_cast<int>(nu.level()); ++m) {
            const Partition& target = nu.component(m);
            for (int r = 1; r <= target.length(); ++r) {
                const int len = state.row_length(m, r);
                if (len >= target.row(r)) continue;
                const Node a{r, len + 1, m};
                if (!state.is_addable(a)) continue;
                int* slot = nullptr;
                if (k <= prefix) {
                    auto it = left.find(residue(weight, a));
                    if (it == left.end() || it->second == 0) continue;
                    slot = &it->second;
                    --*slot;
                }
                state.add(a);
                placed.push_back(a);
                self(self);
                placed.pop_back();
                state.remove(a);
                if (slot) ++*slot;
            }
        }
    };
    rec(rec);
}

}  // namespace

std::vector<StandardTableau> factorizable_tableaux(const MultiPartition& nu, const DominantWeight& weight,
                                                   const RootVector& omega) {
    std::vector<StandardTableau> out;
    walk_factorizable(nu, weight, omega, [&](const std::vector<Node>& nodes) { out.emplace_back(nu, nodes); });
    return out;
}

std::uint64_t count_factorizable(const MultiPartition& nu, const DominantWeight& weight, const RootVector& omega) {
    std::uint64_t n = 0;
    walk_factorizable(nu, weight, omega, [&](const std::vector<Node>&) { ++n; });
    return n;
}

// -------------------------------------------------------------- permutations

std::vector<int> tableau_permutation(const StandardTableau& t) {
    const auto init = t.shape().nodes();
    std::vector<int> perm;
    perm.reserve(init.size());
    for (const Node& a : init) perm.push_back(t.entry(a));
    return perm;
}

std::vector<int> permutation_word(const StandardTableau& t) {
    std::vector<int> seq = tableau_permutation(t);
    const int n = static_cast<int>(seq.size());
    // Sort seq to the identity by right multiplication with adjacent
    // transpositions, moving the largest misplaced value first.  Each swap
    // removes one inversion, so the reversed record is reduced.
    std::vector<int> record;
    for (int m = n; m >= 1; --m) {
        int p = static_cast<int>(std::find(seq.begin(), seq.end(), m) - seq.begin());
        while (p < m - 1) {
            std::swap(seq[p], seq[p + 1]);
            record.push_back(p + 1);
            ++p;
        }
    }
    std::reverse(record.begin(), record.end());
    return record;
}

std::vector<Node> apply_word_to_initial(const MultiPartition& shape, const std::vector<int>& word) {
    std::vector<Node> nodes = shape.nodes();
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        const int i = *it;
        if (i < 1 || i >= static_cast<int>(nodes.size())) throw Error("word letter out of range");
        std::swap(nodes[i - 1], nodes[i]);
    }
    return nodes;
}

}  // namespace klr
