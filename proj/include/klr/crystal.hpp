#pragma once

// Good and cogood nodes, Kleshchev l-partitions, and good-node paths.

#include <cstddef>
#include <optional>
#include <vector>

#include "klr/partitions.hpp"
#include "klr/tableaux.hpp"

namespace klr {

enum class Marker { Addable, Removable };

struct SignatureEntry {
    Marker marker;
    Node node;
    friend bool operator==(const SignatureEntry&, const SignatureEntry&) = default;
};

using Signature = std::vector<SignatureEntry>;

/// Addable and removable i-nodes of mp merged in reading order.
Signature i_signature(const MultiPartition& mp, const DominantWeight& weight, Residue i);

/// Cancels adjacent (r, a) pairs until the word has the form a...a r...r.
Signature reduce_signature(const Signature& sig);

std::optional<Node> good_node(const MultiPartition& mp, const DominantWeight& weight, Residue i);
std::optional<Node> cogood_node(const MultiPartition& mp, const DominantWeight& weight, Residue i);

/// Memoized; safe to call from several threads.
bool is_kleshchev(const MultiPartition& mp, const DominantWeight& weight);

/// Drops every memoized Kleshchev verdict.
void clear_kleshchev_cache();

struct CogoodPathResult {
    std::optional<MultiPartition> shape;
    /// 0-based position of the first letter without a cogood node.
    std::optional<std::size_t> failed_at;

    explicit operator bool() const { return shape.has_value(); }
};

/// Adds cogood nodes of residues word[0], word[1], ... in turn.
CogoodPathResult cogood_path(const MultiPartition& start, const ResidueSequence& word,
                             const DominantWeight& weight);

/// A residue word j' (x) j'' in addition order such that adding cogood
/// nodes along j' builds rho from the empty partition and continuing along
/// j'' builds nu.  Found by removing good nodes from nu.  Empty optional if
/// no such word exists.
std::optional<ResidueSequence> factors_through(const Partition& nu, const Partition& rho,
                                               const DominantWeight& weight);

/// A word whose cogood additions build mp from the empty l-partition, found
/// by good-node removal; empty optional if mp is not Kleshchev.
std::optional<ResidueSequence> good_path(const MultiPartition& mp, const DominantWeight& weight);

}  // namespace klr
