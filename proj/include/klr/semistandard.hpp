#pragma once

// Semistandard tableaux of shape rho + lambda that are constant on the
// rho-part and on the lambda-part of every row (the set SStd_+).
//
// Such a tableau is determined by one label per segment, where the segments
// are the rho-part of each row (rows 1..length(rho)) followed by the
// lambda-part of each non-empty lambda row.  The labels are a permutation of
// 1..l with l = length(rho) + length(lambda).

#include <vector>

#include "klr/partitions.hpp"
#include "klr/tableaux.hpp"

namespace klr {

class SemistandardTableauPlus {
public:
    /// Throws unless the labels give a semistandard filling.
    SemistandardTableauPlus(Partition rho, Partition lambda, std::vector<int> rho_labels,
                            std::vector<int> lambda_labels);

    const Partition& rho() const { return rho_; }
    const Partition& lambda() const { return lambda_; }
    Partition shape() const { return rect_add(rho_, lambda_); }
    int segment_count() const { return rho_.length() + lambda_.length(); }

    const std::vector<int>& rho_labels() const { return rho_labels_; }
    const std::vector<int>& lambda_labels() const { return lambda_labels_; }

    /// Label at a node of rho + lambda.
    int at(int row, int col) const;

    /// Nodes carrying label k, left to right.
    std::vector<Node> segment_nodes(int k) const;

    /// fill()[r-1][c-1] is the label at [r, c].
    std::vector<std::vector<int>> fill() const;

    /// s_k T: swaps labels k and k+1, or nullopt if the result is not
    /// semistandard.
    std::optional<SemistandardTableauPlus> swapped(int k) const;

    friend bool operator==(const SemistandardTableauPlus&, const SemistandardTableauPlus&) = default;

private:
    Partition rho_;
    Partition lambda_;
    std::vector<int> rho_labels_;
    std::vector<int> lambda_labels_;
};

/// Labels 1..l along successive rows (rho-part before lambda-part).
SemistandardTableauPlus row_initial_sstd(const Partition& rho, const Partition& lambda);
/// Labels 1..l down the rho rows, then down the lambda rows.
SemistandardTableauPlus column_initial_sstd(const Partition& rho, const Partition& lambda);

/// Every element of SStd_+(rho + lambda), in lexicographic order of the
/// (rho_labels, lambda_labels) pair.
std::vector<SemistandardTableauPlus> enumerate_sstd_plus(const Partition& rho, const Partition& lambda);

/// The order-preserving standard tableau phi(T).
StandardTableau standardize(const SemistandardTableauPlus& t);

struct SegmentData {
    int k = 0;
    std::vector<Residue> residues;
    int ydeg = 0;
};

/// Residues of T^{-1}(k) read left to right, and the sum of their
/// y-exponents in phi(T).
SegmentData segment_data(const SemistandardTableauPlus& t, int k, const DominantWeight& weight);

/// No residue of r1 equals or is adjacent to a residue of r2.
bool segments_well_separated(const std::vector<Residue>& r1, const std::vector<Residue>& r2);

}  // namespace klr
