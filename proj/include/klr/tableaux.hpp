#pragma once

// Standard tableaux, their residue sequences and degree statistics.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "klr/partitions.hpp"

namespace klr {

using ResidueSequence = std::vector<Residue>;

/// A standard tableau stored as the node list in entry order: nodes()[k-1]
/// holds entry k.  Construction validates standardness.
class StandardTableau {
public:
    StandardTableau(MultiPartition shape, std::vector<Node> nodes);

    const MultiPartition& shape() const { return shape_; }
    const std::vector<Node>& nodes() const { return nodes_; }
    int size() const { return static_cast<int>(nodes_.size()); }

    /// Entry at a node of the shape (1-based).
    int entry(const Node& node) const;

    /// rows()[m-1][r-1] lists the entries of row r of component m.
    std::vector<std::vector<std::vector<int>>> rows() const;

    /// Shape(t_{<=m}).
    MultiPartition prefix_shape(int m) const;

    friend bool operator==(const StandardTableau& a, const StandardTableau& b) {
        return a.shape_ == b.shape_ && a.nodes_ == b.nodes_;
    }

private:
    MultiPartition shape_;
    std::vector<Node> nodes_;
};

/// Builds a tableau from row lists (the inverse of rows()).
StandardTableau tableau_from_rows(const MultiPartition& shape,
                                  const std::vector<std::vector<std::vector<int>>>& rows);

StandardTableau initial_tableau(const MultiPartition& shape);
/// Fills down successive columns; level-one shapes only.
StandardTableau column_initial_tableau(const MultiPartition& shape);
inline StandardTableau initial_tableau(const Partition& shape) { return initial_tableau(MultiPartition{shape}); }
inline StandardTableau column_initial_tableau(const Partition& shape) {
    return column_initial_tableau(MultiPartition{shape});
}

ResidueSequence residue_sequence(const StandardTableau& t, const DominantWeight& weight);

/// Graded degree: sum over k of #{addable res(A_k)-nodes strictly below A_k}
/// minus #{removable res(A_k)-nodes strictly below A_k}, both taken in
/// Shape(t_{<=k}).
int degree(const StandardTableau& t, const DominantWeight& weight);

/// Exponent vector of y_t: position k counts the addable res(A_k)-nodes of
/// Shape(t_{<=k-1}) strictly below A_k.
std::vector<int> y_exponents(const StandardTableau& t, const DominantWeight& weight);

/// Residue filter for enumeration.
struct ResidueFilter {
    DominantWeight weight;
    ResidueSequence sequence;
};

/// Depth-first over entries 1..n, candidate nodes in reading order.  The
/// visitor returns false to stop early.  With a filter, branches whose
/// prefix residue disagrees with the filter are cut before descent.
void for_each_standard(const MultiPartition& shape, const std::optional<ResidueFilter>& filter,
                       const std::function<bool(const StandardTableau&)>& visit);

std::vector<StandardTableau> enumerate_standard(const MultiPartition& shape,
                                                const std::optional<ResidueFilter>& filter = std::nullopt);

/// |Std(shape)| (with optional filter) without materializing tableaux.
std::uint64_t count_standard(const MultiPartition& shape,
                             const std::optional<ResidueFilter>& filter = std::nullopt);

/// Std(i): standard tableaux of every level-l shape with residue sequence i.
std::vector<StandardTableau> tableaux_with_residues(const DominantWeight& weight, const ResidueSequence& seq);

/// Tableaux of nu whose first ht(omega) entries occupy a diagram of content omega.
std::vector<StandardTableau> factorizable_tableaux(const MultiPartition& nu, const DominantWeight& weight,
                                                   const RootVector& omega);
std::uint64_t count_factorizable(const MultiPartition& nu, const DominantWeight& weight, const RootVector& omega);

/// Word (i_1, ..., i_r) with w^t = s_{i_1} ... s_{i_r} reduced and
/// w^t t^shape = t.
std::vector<int> permutation_word(const StandardTableau& t);

/// w^t as a one-line permutation: perm[j-1] = t(node holding j in t^shape).
std::vector<int> tableau_permutation(const StandardTableau& t);

/// Applies s_{i_1} ... s_{i_r} (rightmost first) to the entries of the
/// initial tableau of shape.  Returns the node list in entry order; the
/// result need not be standard.
std::vector<Node> apply_word_to_initial(const MultiPartition& shape, const std::vector<int>& word);

}  // namespace klr
