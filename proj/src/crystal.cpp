#include "klr/crystal.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <shared_mutex>
#include <tuple>

namespace klr {

Signature i_signature(const MultiPartition& mp, const DominantWeight& weight, Residue i) {
    Signature sig;
    for (const Node& a : addable_nodes(mp, weight, i)) sig.push_back({Marker::Addable, a});
    for (const Node& a : removable_nodes(mp, weight, i)) sig.push_back({Marker::Removable, a});
    std::sort(sig.begin(), sig.end(),
              [](const SignatureEntry& x, const SignatureEntry& y) { return reading_less(x.node, y.node); });
    return sig;
}

Signature reduce_signature(const Signature& sig) {
    Signature stack;
    for (const auto& e : sig) {
        if (e.marker == Marker::Addable && !stack.empty() && stack.back().marker == Marker::Removable) {
            stack.pop_back();
        } else {
            stack.push_back(e);
        }
    }
    return stack;
}

std::optional<Node> good_node(const MultiPartition& mp, const DominantWeight& weight, Residue i) {
    for (const auto& e : reduce_signature(i_signature(mp, weight, i))) {
        if (e.marker == Marker::Removable) return e.node;
    }
    return std::nullopt;
}

std::optional<Node> cogood_node(const MultiPartition& mp, const DominantWeight& weight, Residue i) {
    std::optional<Node> last;
    for (const auto& e : reduce_signature(i_signature(mp, weight, i))) {
        if (e.marker == Marker::Addable) last = e.node;
    }
    return last;
}

// ------------------------------------------------------------------ Kleshchev

namespace {

using CacheKey = std::tuple<int, std::vector<Residue>, MultiPartition>;

class KleshchevCache {
public:
    std::optional<bool> find(const CacheKey& key) const {
        std::shared_lock lock(mutex_);
        auto it = map_.find(key);
        if (it == map_.end()) return std::nullopt;
        return it->second;
    }

    void insert(const CacheKey& key, bool value) {
        std::unique_lock lock(mutex_);
        map_.emplace(key, value);
    }

    void clear() {
        std::unique_lock lock(mutex_);
        map_.clear();
    }

private:
    mutable std::shared_mutex mutex_;
    std::map<CacheKey, bool> map_;
};

KleshchevCache& kleshchev_cache() {
    static KleshchevCache cache;
    return cache;
}

std::set<Residue> removable_residues(const MultiPartition& mp, const DominantWeight& weight) {
    std::set<Residue> out;
    for (const Node& a : mp.removable_nodes()) out.insert(residue(weight, a));
    return out;
}

}  // namespace

bool is_kleshchev(const MultiPartition& mp, const DominantWeight& weight) {
    if (mp.size() == 0) return true;
    const CacheKey key{static_cast<int>(weight.type.kind), weight.charge, mp};
    if (auto hit = kleshchev_cache().find(key)) return *hit;

    bool result = false;
    for (Residue i : removable_residues(mp, weight)) {
        if (auto a = good_node(mp, weight, i); a && is_kleshchev(mp.without_node(*a), weight)) {
            result = true;
            break;
        }
    }
    kleshchev_cache().insert(key, result);
    return result;
}

void clear_kleshchev_cache() { kleshchev_cache().clear(); }

// ---------------------------------------------------------------------- paths

CogoodPathResult cogood_path(const MultiPartition& start, const ResidueSequence& word,
                             const DominantWeight& weight) {
    MultiPartition cur = start;
    for (std::size_t k = 0; k < word.size(); ++k) {
        auto a = cogood_node(cur, weight, word[k]);
        if (!a) return {std::nullopt, k};
        cur = cur.with_node(*a);
    }
    return {cur, std::nullopt};
}

namespace {

bool contains_all(const MultiPartition& big, const MultiPartition& small) {
    for (std::size_t m = 0; m < big.level(); ++m) {
        if (!big.components()[m].contains(small.components()[m])) return false;
    }
    return true;
}

// Removes good nodes from `from` until `target` is reached, never leaving
// the set of l-partitions containing target.  Returns the removal residues
// in removal order.
std::optional<ResidueSequence> good_removals(const MultiPartition& from, const MultiPartition& target,
                                             const DominantWeight& weight) {
    std::set<MultiPartition> dead;
    ResidueSequence trail;
    auto rec = [&](auto&& self, const MultiPartition& cur) -> bool {
        if (cur == target) return true;
        if (dead.count(cur)) return false;
        for (Residue i : removable_residues(cur, weight)) {
            auto a = good_node(cur, weight, i);
            if (!a) continue;
            MultiPartition next = cur.without_node(*a);
            if (!contains_all(next, target)) continue;
            trail.push_back(i);
            if (self(self, next)) return true;
            trail.pop_back();
        }
        dead.insert(cur);
        return false;
    };
    if (from.level() != target.level() || !contains_all(from, target)) return std::nullopt;
    if (!rec(rec, from)) return std::nullopt;
    return trail;
}

}  // namespace

std::optional<ResidueSequence> good_path(const MultiPartition& mp, const DominantWeight& weight) {
    auto removals = good_removals(mp, MultiPartition::empty_of_level(mp.level()), weight);
    if (!removals) return std::nullopt;
    std::reverse(removals->begin(), removals->end());
    return removals;
}

std::optional<ResidueSequence> factors_through(const Partition& nu, const Partition& rho,
                                               const DominantWeight& weight) {
    if (weight.level() != 1) throw Error("factors_through expects a level-one charge");
    if (!nu.contains(rho)) return std::nullopt;
    auto inner = good_path(MultiPartition{rho}, weight);
    if (!inner) return std::nullopt;
    auto outer = good_removals(MultiPartition{nu}, MultiPartition{rho}, weight);
    if (!outer) return std::nullopt;
    std::reverse(outer->begin(), outer->end());
    ResidueSequence word = *inner;
    word.insert(word.end(), outer->begin(), outer->end());
    return word;
}

}  // namespace klr
