#include "klr/partitions.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace klr {

// ---------------------------------------------------------------- Partition

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t k = 0; k < parts_.size(); ++k) {
        if (parts_[k] <= 0) throw Error("partition parts must be positive");
        if (k + 1 < parts_.size() && parts_[k] < parts_[k + 1]) {
            throw Error("partition parts must be weakly decreasing");
        }
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::rectangle(int width, int height) {
    if (width <= 0 || height <= 0) return {};
    return Partition(std::vector<int>(static_cast<std::size_t>(height), width));
}

bool Partition::contains(const Partition& other) const {
    if (other.length() > length()) return false;
    for (int r = 1; r <= other.length(); ++r) {
        if (other.row(r) > row(r)) return false;
    }
    return true;
}

bool Partition::is_rectangle() const {
    return parts_.empty() || parts_.front() == parts_.back();
}

Partition Partition::conjugate() const {
    std::vector<int> out(parts_.empty() ? 0 : static_cast<std::size_t>(parts_.front()), 0);
    for (int p : parts_) {
        for (int c = 0; c < p; ++c) ++out[c];
    }
    return Partition(std::move(out));
}

std::string Partition::to_string() const {
    if (parts_.empty()) return "-";
    std::ostringstream os;
    for (std::size_t k = 0; k < parts_.size(); ++k) {
        if (k) os << ',';
        os << parts_[k];
    }
    return os.str();
}

// ----------------------------------------------------------- MultiPartition

MultiPartition::MultiPartition(std::vector<Partition> comps) : comps_(std::move(comps)) {}
MultiPartition::MultiPartition(std::initializer_list<Partition> comps) : comps_(comps) {}

MultiPartition MultiPartition::empty_of_level(std::size_t level) {
    return MultiPartition(std::vector<Partition>(level));
}

int MultiPartition::size() const {
    int n = 0;
    for (const auto& p : comps_) n += p.size();
    return n;
}

bool MultiPartition::contains(const Node& node) const {
    if (node.comp < 1 || node.comp > static_cast<int>(level()) || node.row < 1 || node.col < 1) {
        return false;
    }
    return node.col <= component(node.comp).row(node.row);
}

bool MultiPartition::is_addable(const Node& node) const {
    if (node.comp < 1 || node.comp > static_cast<int>(level()) || node.row < 1 || node.col < 1) {
        return false;
    }
    const Partition& p = component(node.comp);
    if (p.row(node.row) != node.col - 1) return false;
    return node.row == 1 || p.row(node.row - 1) >= node.col;
}

bool MultiPartition::is_removable(const Node& node) const {
    if (!contains(node)) return false;
    const Partition& p = component(node.comp);
    return p.row(node.row) == node.col && p.row(node.row + 1) < node.col;
}

MultiPartition MultiPartition::with_node(const Node& node) const {
    if (!is_addable(node)) throw Error("node is not addable");
    auto comps = comps_;
    auto parts = comps[node.comp - 1].parts();
    if (node.row > static_cast<int>(parts.size())) parts.push_back(1);
    else ++parts[node.row - 1];
    comps[node.comp - 1] = Partition(std::move(parts));
    return MultiPartition(std::move(comps));
}

MultiPartition MultiPartition::without_node(const Node& node) const {
    if (!is_removable(node)) throw Error("node is not removable");
    auto comps = comps_;
    auto parts = comps[node.comp - 1].parts();
    --parts[node.row - 1];
    comps[node.comp - 1] = Partition(std::move(parts));
    return MultiPartition(std::move(comps));
}

std::vector<Node> MultiPartition::nodes() const {
    std::vector<Node> out;
    for (int m = 1; m <= static_cast<int>(level()); ++m) {
        const Partition& p = component(m);
        for (int r = 1; r <= p.length(); ++r) {
            for (int c = 1; c <= p.row(r); ++c) out.push_back({r, c, m});
        }
    }
    return out;
}

std::vector<Node> MultiPartition::addable_nodes() const {
    std::vector<Node> out;
    for (int m = 1; m <= static_cast<int>(level()); ++m) {
        const Partition& p = component(m);
        for (int r = 1; r <= p.length() + 1; ++r) {
            Node a{r, p.row(r) + 1, m};
            if (is_addable(a)) out.push_back(a);
        }
    }
    return out;
}

std::vector<Node> MultiPartition::removable_nodes() const {
    std::vector<Node> out;
    for (int m = 1; m <= static_cast<int>(level()); ++m) {
        const Partition& p = component(m);
        for (int r = 1; r <= p.length(); ++r) {
            Node a{r, p.row(r), m};
            if (is_removable(a)) out.push_back(a);
        }
    }
    return out;
}

std::string MultiPartition::to_string() const {
    std::string out;
    for (std::size_t m = 0; m < comps_.size(); ++m) {
        if (m) out += '/';
        out += comps_[m].to_string();
    }
    return out;
}

// ------------------------------------------------------------------ parsing

Partition parse_partition(const std::string& s) {
    if (s.empty() || s == "-" || s == "∅") return {};
    std::vector<int> parts;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw Error("empty part in partition '" + s + "'");
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw Error("bad part '" + tok + "' in partition '" + s + "'");
        }
        if (used != tok.size()) throw Error("bad part '" + tok + "' in partition '" + s + "'");
        parts.push_back(v);
    }
    return Partition(std::move(parts));
}

MultiPartition parse_multipartition(const std::string& s) {
    std::vector<Partition> comps;
    std::size_t start = 0;
    while (true) {
        auto slash = s.find('/', start);
        comps.push_back(parse_partition(s.substr(start, slash - start)));
        if (slash == std::string::npos) break;
        start = slash + 1;
    }
    return MultiPartition(std::move(comps));
}

// ---------------------------------------------------------------- residues

Residue residue(const DominantWeight& weight, const Node& node) {
    if (node.comp < 1 || node.comp > static_cast<int>(weight.level())) {
        throw Error("node component exceeds the level of the charge");
    }
    const int x = weight.charge[node.comp - 1] + node.col - node.row;
    return weight.type.kind == CartanKind::A ? x : std::abs(x);
}

RootVector content(const DominantWeight& weight, const MultiPartition& mp) {
    RootVector out;
    for (const Node& a : mp.nodes()) out.add(residue(weight, a));
    return out;
}

std::vector<Node> addable_nodes(const MultiPartition& mp, const DominantWeight& weight, Residue i) {
    std::vector<Node> out;
    for (const Node& a : mp.addable_nodes()) {
        if (residue(weight, a) == i) out.push_back(a);
    }
    return out;
}

std::vector<Node> removable_nodes(const MultiPartition& mp, const DominantWeight& weight, Residue i) {
    std::vector<Node> out;
    for (const Node& a : mp.removable_nodes()) {
        if (residue(weight, a) == i) out.push_back(a);
    }
    return out;
}

// --------------------------------------------------------------- dominance

bool dominates(const MultiPartition& a, const MultiPartition& b) {
    if (a.level() != b.level()) throw Error("dominance: level mismatch");
    if (a.size() != b.size()) throw Error("dominance: size mismatch");
    int before_a = 0;
    int before_b = 0;
    for (int m = 1; m <= static_cast<int>(a.level()); ++m) {
        const Partition& pa = a.component(m);
        const Partition& pb = b.component(m);
        int sa = before_a;
        int sb = before_b;
        const int rows = std::max(pa.length(), pb.length());
        for (int r = 1; r <= rows; ++r) {
            sa += pa.row(r);
            sb += pb.row(r);
            if (sa < sb) return false;
        }
        // r = 0 is covered by the previous component's final row.
        if (rows == 0 && sa < sb) return false;
        before_a += pa.size();
        before_b += pb.size();
    }
    return true;
}

// ------------------------------------------------------- rectangle addition

namespace {

void require_rectangle(const Partition& rho) {
    if (rho.empty() || !rho.is_rectangle()) throw Error("rho must be a non-empty rectangle");
}

}  // namespace

Partition rect_add(const Partition& rho, const Partition& lambda) {
    require_rectangle(rho);
    if (lambda.length() > rho.length()) throw Error("rect_add: length(lambda) exceeds length(rho)");
    std::vector<int> parts(rho.parts());
    for (int r = 1; r <= lambda.length(); ++r) parts[r - 1] += lambda.row(r);
    return Partition(std::move(parts));
}

Partition rect_add(const Partition& rho, const Partition& lambda, const Partition& mu) {
    Partition top = rect_add(rho, lambda);
    if (mu.row(1) > rho.row(1)) {
        throw Error("rect_add: first part of mu exceeds the width of rho");
    }
    std::vector<int> parts(top.parts());
    parts.insert(parts.end(), mu.parts().begin(), mu.parts().end());
    return Partition(std::move(parts));
}

std::pair<Partition, Partition> rect_split(const Partition& nu, const Partition& rho) {
    require_rectangle(rho);
    if (!nu.contains(rho)) throw Error("rect_split: rho is not contained in nu");
    const int a = rho.row(1);
    const int b = rho.length();
    if (nu.row(b + 1) > a) throw Error("rect_split: nu is not in the rho-block shape");
    std::vector<int> top;
    for (int r = 1; r <= b; ++r) top.push_back(nu.row(r) - a);
    std::vector<int> below(nu.parts().begin() + b, nu.parts().end());
    return {Partition(std::move(top)), Partition(std::move(below)).conjugate()};
}

// -------------------------------------------------------------- enumeration

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    if (n < 0) return out;
    std::vector<int> cur;
    partitions_rec(n, n, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<MultiPartition> multipartitions_of(int n, std::size_t level) {
    std::vector<MultiPartition> out;
    if (level == 0) {
        if (n == 0) out.emplace_back();
        return out;
    }
    std::vector<std::vector<Partition>> by_size(static_cast<std::size_t>(std::max(n, 0)) + 1);
    for (int k = 0; k <= n; ++k) by_size[k] = partitions_of(k);

    std::vector<Partition> cur;
    auto rec = [&](auto&& self, std::size_t m, int remaining) -> void {
        if (m + 1 == level) {
            for (const auto& p : by_size[remaining]) {
                cur.push_back(p);
                out.emplace_back(cur);
                cur.pop_back();
            }
            return;
        }
        for (int k = 0; k <= remaining; ++k) {
            for (const auto& p : by_size[k]) {
                cur.push_back(p);
                self(self, m + 1, remaining - k);
                cur.pop_back();
            }
        }
    };
    rec(rec, 0, n);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<MultiPartition> enumerate_block(const DominantWeight& weight, const RootVector& beta) {
    std::vector<MultiPartition> out;
    for (auto& mp : multipartitions_of(beta.height(), weight.level())) {
        if (content(weight, mp) == beta) out.push_back(std::move(mp));
    }
    return out;
}

}  // namespace klr
