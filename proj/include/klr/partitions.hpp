#pragma once

// Partitions, l-partitions and their residue combinatorics.

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "klr/cartan.hpp"

namespace klr {

/// Weakly decreasing list of positive parts; the empty list is the empty
/// partition.  Trailing zeros are stripped on construction.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    /// a^b
    static Partition rectangle(int width, int height);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const { return size_; }
    bool empty() const { return parts_.empty(); }

    /// Row length with 1-based rows; 0 beyond the last row.
    int row(int r) const { return (r >= 1 && r <= length()) ? parts_[r - 1] : 0; }
    bool contains(const Partition& other) const;
    bool is_rectangle() const;

    Partition conjugate() const;

    std::string to_string() const;  // "3,2,1"; empty partition is "-"

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// Box [r,c,m] of a Young diagram; all coordinates 1-based.
struct Node {
    int row = 1;
    int col = 1;
    int comp = 1;

    friend bool operator==(const Node&, const Node&) = default;
};

/// Reading order used by i-signatures: component first, then row.  Two
/// distinct nodes of the same row compare by column only as a tiebreak.
inline bool reading_less(const Node& a, const Node& b) {
    if (a.comp != b.comp) return a.comp < b.comp;
    if (a.row != b.row) return a.row < b.row;
    return a.col < b.col;
}

/// Strictly below: later component, or same component and a larger row.
inline bool strictly_below(const Node& a, const Node& ref) {
    return a.comp > ref.comp || (a.comp == ref.comp && a.row > ref.row);
}

class MultiPartition {
public:
    MultiPartition() = default;
    explicit MultiPartition(std::vector<Partition> comps);
    MultiPartition(std::initializer_list<Partition> comps);

    static MultiPartition empty_of_level(std::size_t level);

    const std::vector<Partition>& components() const { return comps_; }
    const Partition& component(int m) const { return comps_.at(m - 1); }
    std::size_t level() const { return comps_.size(); }
    int size() const;

    bool contains(const Node& node) const;
    bool is_addable(const Node& node) const;
    bool is_removable(const Node& node) const;

    /// Throws klr::Error unless the node is addable (resp. removable).
    MultiPartition with_node(const Node& node) const;
    MultiPartition without_node(const Node& node) const;

    /// All boxes in reading order.
    std::vector<Node> nodes() const;
    std::vector<Node> addable_nodes() const;
    std::vector<Node> removable_nodes() const;

    std::string to_string() const;  // components joined by '/'

    friend bool operator==(const MultiPartition&, const MultiPartition&) = default;
    friend auto operator<=>(const MultiPartition& a, const MultiPartition& b) {
        return a.comps_ <=> b.comps_;
    }

private:
    std::vector<Partition> comps_;
};

/// Parses "3,2,1", "-" (empty), and "3,2,1/-" for l-partitions.
Partition parse_partition(const std::string& s);
MultiPartition parse_multipartition(const std::string& s);

Residue residue(const DominantWeight& weight, const Node& node);

/// Sum of alpha_res(A) over the boxes of mp.
RootVector content(const DominantWeight& weight, const MultiPartition& mp);

std::vector<Node> addable_nodes(const MultiPartition& mp, const DominantWeight& weight, Residue i);
std::vector<Node> removable_nodes(const MultiPartition& mp, const DominantWeight& weight, Residue i);

/// Dominance order on l-partitions of the same size and level.
bool dominates(const MultiPartition& a, const MultiPartition& b);

/// rho + lambda for a rectangle rho with length(rho) >= length(lambda).
Partition rect_add(const Partition& rho, const Partition& lambda);
/// rho + (lambda, mu): lambda is added to the rows of rho and the rows of mu
/// are appended below.  Requires mu_1 <= width(rho).
Partition rect_add(const Partition& rho, const Partition& lambda, const Partition& mu);

/// Inverse of nu = rho + (lambda, mu'): returns (lambda, mu) with mu the
/// conjugate of the rows of nu below rho.
std::pair<Partition, Partition> rect_split(const Partition& nu, const Partition& rho);

/// All partitions of n in ascending lexicographic order of part lists.
std::vector<Partition> partitions_of(int n);
/// All l-partitions of n in ascending lexicographic order.
std::vector<MultiPartition> multipartitions_of(int n, std::size_t level);

/// l-partitions (l = weight.level()) with the given content.
std::vector<MultiPartition> enumerate_block(const DominantWeight& weight, const RootVector& beta);

}  // namespace klr
