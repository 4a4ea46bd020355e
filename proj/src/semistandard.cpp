#include "klr/semistandard.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace klr {

namespace {

bool is_permutation_of_1_to(const std::vector<int>& a, const std::vector<int>& b, int l) {
    std::vector<int> all(a);
    all.insert(all.end(), b.begin(), b.end());
    std::sort(all.begin(), all.end());
    for (int k = 0; k < l; ++k) {
        if (static_cast<int>(all.size()) != l || all[k] != k + 1) return false;
    }
    return true;
}

}  // namespace

SemistandardTableauPlus::SemistandardTableauPlus(Partition rho, Partition lambda, std::vector<int> rho_labels,
                                                 std::vector<int> lambda_labels)
    : rho_(std::move(rho)),
      lambda_(std::move(lambda)),
      rho_labels_(std::move(rho_labels)),
      lambda_labels_(std::move(lambda_labels)) {
    if (rho_.empty() || !rho_.is_rectangle()) throw Error("SStd+: rho must be a non-empty rectangle");
    if (lambda_.length() > rho_.length()) throw Error("SStd+: length(lambda) exceeds length(rho)");
    if (static_cast<int>(rho_labels_.size()) != rho_.length() ||
        static_cast<int>(lambda_labels_.size()) != lambda_.length()) {
        throw Error("SStd+: one label per segment required");
    }
    if (!is_permutation_of_1_to(rho_labels_, lambda_labels_, segment_count())) {
        throw Error("SStd+: segment labels must be a permutation of 1..l");
    }
    // Columns of rho, columns of lambda, and weak increase along each row.
    for (int r = 1; r < rho_.length(); ++r) {
        if (rho_labels_[r - 1] >= rho_labels_[r]) throw Error("SStd+: columns of rho must strictly increase");
    }
    for (int r = 1; r < lambda_.length(); ++r) {
        if (lambda_labels_[r - 1] >= lambda_labels_[r]) throw Error("SStd+: columns of lambda must strictly increase");
    }
    for (int r = 1; r <= lambda_.length(); ++r) {
        if (rho_labels_[r - 1] > lambda_labels_[r - 1]) throw Error("SStd+: rows must weakly increase");
    }
}

int SemistandardTableauPlus::at(int row, int col) const {
    const int a = rho_.row(1);
    if (row < 1 || row > rho_.length() || col < 1) throw Error("SStd+: node outside the shape");
    if (col <= a) return rho_labels_[row - 1];
    if (col <= a + lambda_.row(row)) return lambda_labels_[row - 1];
    throw Error("SStd+: node outside the shape");
}

std::vector<Node> SemistandardTableauPlus::segment_nodes(int k) const {
    const int a = rho_.row(1);
    std::vector<Node> out;
    for (int r = 1; r <= rho_.length(); ++r) {
        if (rho_labels_[r - 1] == k) {
            for (int c = 1; c <= a; ++c) out.push_back({r, c, 1});
            return out;
        }
    }
    for (int r = 1; r <= lambda_.length(); ++r) {
        if (lambda_labels_[r - 1] == k) {
            for (int c = 1; c <= lambda_.row(r); ++c) out.push_back({r, a + c, 1});
            return out;
        }
    }
    throw Error("SStd+: no segment with label " + std::to_string(k));
}

std::vector<std::vector<int>> SemistandardTableauPlus::fill() const {
    const Partition nu = shape();
    std::vector<std::vector<int>> out(static_cast<std::size_t>(nu.length()));
    for (int r = 1; r <= nu.length(); ++r) {
        for (int c = 1; c <= nu.row(r); ++c) out[r - 1].push_back(at(r, c));
    }
    return out;
}

std::optional<SemistandardTableauPlus> SemistandardTableauPlus::swapped(int k) const {
    if (k < 1 || k >= segment_count()) return std::nullopt;
    auto flip = [k](int x) { return x == k ? k + 1 : (x == k + 1 ? k : x); };
    std::vector<int> rl(rho_labels_), ll(lambda_labels_);
    std::transform(rl.begin(), rl.end(), rl.begin(), flip);
    std::transform(ll.begin(), ll.end(), ll.begin(), flip);
    try {
        return SemistandardTableauPlus(rho_, lambda_, std::move(rl), std::move(ll));
    } catch (const Error&) {
        return std::nullopt;
    }
}

SemistandardTableauPlus row_initial_sstd(const Partition& rho, const Partition& lambda) {
    std::vector<int> rl, ll;
    int next = 1;
    for (int r = 1; r <= rho.length(); ++r) {
        rl.push_back(next++);
        if (r <= lambda.length()) ll.push_back(next++);
    }
    return SemistandardTableauPlus(rho, lambda, std::move(rl), std::move(ll));
}

SemistandardTableauPlus column_initial_sstd(const Partition& rho, const Partition& lambda) {
    std::vector<int> rl(static_cast<std::size_t>(rho.length()));
    std::vector<int> ll(static_cast<std::size_t>(lambda.length()));
    std::iota(rl.begin(), rl.end(), 1);
    std::iota(ll.begin(), ll.end(), rho.length() + 1);
    return SemistandardTableauPlus(rho, lambda, std::move(rl), std::move(ll));
}

std::vector<SemistandardTableauPlus> enumerate_sstd_plus(const Partition& rho, const Partition& lambda) {
    if (rho.empty() || !rho.is_rectangle()) throw Error("SStd+: rho must be a non-empty rectangle");
    if (lambda.length() > rho.length()) throw Error("SStd+: length(lambda) exceeds length(rho)");
    const int b = rho.length();
    const int l = b + lambda.length();
    std::vector<SemistandardTableauPlus> out;
    std::vector<int> rl(static_cast<std::size_t>(b)), ll(static_cast<std::size_t>(lambda.length()));
    // Hand out labels 1..l in order.  The next rho row is always available;
    // lambda row r needs rho row r labelled first and lambda rows labelled
    // top to bottom.
    auto rec = [&](auto&& self, int label, int rho_done, int lambda_done) -> void {
        if (label > l) {
            out.emplace_back(rho, lambda, rl, ll);
            return;
        }
        if (rho_done < b) {
            rl[rho_done] = label;
            self(self, label + 1, rho_done + 1, lambda_done);
        }
        if (lambda_done < lambda.length() && lambda_done < rho_done) {
            ll[lambda_done] = label;
            self(self, label + 1, rho_done, lambda_done + 1);
        }
    };
    rec(rec, 1, 0, 0);
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        return std::tie(x.rho_labels(), x.lambda_labels()) < std::tie(y.rho_labels(), y.lambda_labels());
    });
    return out;
}

StandardTableau standardize(const SemistandardTableauPlus& t) {
    std::vector<Node> nodes;
    for (int k = 1; k <= t.segment_count(); ++k) {
        for (const Node& a : t.segment_nodes(k)) nodes.push_back(a);
    }
    return StandardTableau(MultiPartition{t.shape()}, std::move(nodes));
}

SegmentData segment_data(const SemistandardTableauPlus& t, int k, const DominantWeight& weight) {
    if (k < 1 || k > t.segment_count()) throw Error("segment index out of range");
    const StandardTableau std_t = standardize(t);
    const std::vector<int> y = y_exponents(std_t, weight);
    SegmentData out;
    out.k = k;
    for (const Node& a : t.segment_nodes(k)) {
        out.residues.push_back(residue(weight, a));
        out.ydeg += y[std_t.entry(a) - 1];
    }
    return out;
}

bool segments_well_separated(const std::vector<Residue>& r1, const std::vector<Residue>& r2) {
    for (Residue x : r1) {
        for (Residue y : r2) {
            if (std::abs(x - y) <= 1) return false;
        }
    }
    return true;
}

}  // namespace klr
