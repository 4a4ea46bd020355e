#pragma once

// Mutable l-partition used by the depth-first walks.  Rows are kept as plain
// length vectors so that adding and removing a box is O(1).

#include <vector>

#include "klr/partitions.hpp"

namespace klr::detail {

class ShapeState {
public:
    explicit ShapeState(std::size_t level) : rows_(level) {}

    explicit ShapeState(const MultiPartition& mp) : rows_(mp.level()) {
        for (std::size_t m = 0; m < mp.level(); ++m) rows_[m] = mp.components()[m].parts();
    }

    int level() const { return static_cast<int>(rows_.size()); }

    int row_length(int m, int r) const {
        const auto& rs = rows_[m - 1];
        return (r >= 1 && r <= static_cast<int>(rs.size())) ? rs[r - 1] : 0;
    }

    int length(int m) const { return static_cast<int>(rows_[m - 1].size()); }

    bool is_addable(const Node& a) const {
        if (a.comp < 1 || a.comp > level() || a.row < 1) return false;
        if (row_length(a.comp, a.row) != a.col - 1) return false;
        return a.row == 1 || row_length(a.comp, a.row - 1) >= a.col;
    }

    bool is_removable(const Node& a) const {
        if (a.comp < 1 || a.comp > level() || a.row < 1) return false;
        return a.col >= 1 && row_length(a.comp, a.row) == a.col && row_length(a.comp, a.row + 1) < a.col;
    }

    void add(const Node& a) {
        auto& rs = rows_[a.comp - 1];
        if (a.row > static_cast<int>(rs.size())) rs.push_back(1);
        else ++rs[a.row - 1];
    }

    void remove(const Node& a) {
        auto& rs = rows_[a.comp - 1];
        if (--rs[a.row - 1] == 0) rs.pop_back();
    }

    /// Addable nodes in reading order.
    std::vector<Node> addable_nodes() const {
        std::vector<Node> out;
        for (int m = 1; m <= level(); ++m) {
            for (int r = 1; r <= length(m) + 1; ++r) {
                const Node a{r, row_length(m, r) + 1, m};
                if (is_addable(a)) out.push_back(a);
            }
        }
        return out;
    }

    /// Removable nodes in reading order.
    std::vector<Node> removable_nodes() const {
        std::vector<Node> out;
        for (int m = 1; m <= level(); ++m) {
            for (int r = 1; r <= length(m); ++r) {
                const Node a{r, row_length(m, r), m};
                if (is_removable(a)) out.push_back(a);
            }
        }
        return out;
    }

    int count_addable_below(const Node& ref, const DominantWeight& weight, Residue i) const {
        int n = 0;
        for (int m = ref.comp; m <= level(); ++m) {
            for (int r = (m == ref.comp ? ref.row + 1 : 1); r <= length(m) + 1; ++r) {
                const Node a{r, row_length(m, r) + 1, m};
                if (is_addable(a) && residue(weight, a) == i) ++n;
            }
        }
        return n;
    }

    int count_removable_below(const Node& ref, const DominantWeight& weight, Residue i) const {
        int n = 0;
        for (int m = ref.comp; m <= level(); ++m) {
            for (int r = (m == ref.comp ? ref.row + 1 : 1); r <= length(m); ++r) {
                const Node a{r, row_length(m, r), m};
                if (is_removable(a) && residue(weight, a) == i) ++n;
            }
        }
        return n;
    }

    MultiPartition to_multipartition() const {
        std::vector<Partition> comps;
        comps.reserve(rows_.size());
        for (const auto& rs : rows_) comps.emplace_back(rs);
        return MultiPartition(std::move(comps));
    }

private:
    std::vector<std::vector<int>> rows_;
};

}  // namespace klr::detail
