#include "klr/cartan.hpp"

#include <cstdlib>
#include <sstream>

namespace klr {

void CartanType::require_label(Residue i) const {
    if (!valid_label(i)) {
        throw Error("invalid residue label " + std::to_string(i) + " for type " + name());
    }
}

CartanType parse_cartan_type(const std::string& s) {
    if (s == "a" || s == "A") return CartanType::a();
    if (s == "c" || s == "C") return CartanType::c();
    throw Error("unknown Cartan type '" + s + "' (expected a or c)");
}

RootVector::RootVector(const std::map<Residue, int>& entries) {
    for (auto [i, m] : entries) {
        if (m < 0) throw Error("negative multiplicity in root vector");
        add(i, m);
    }
}

RootVector RootVector::simple(Residue i, int mult) {
    RootVector r;
    r.add(i, mult);
    return r;
}

int RootVector::operator[](Residue i) const {
    auto it = entries_.find(i);
    return it == entries_.end() ? 0 : it->second;
}

void RootVector::add(Residue i, int mult) {
    if (mult == 0) return;
    int& slot = entries_[i];
    slot += mult;
    height_ += mult;
    if (slot < 0) throw Error("not a subroot");
    if (slot == 0) entries_.erase(i);
}

bool RootVector::le(const RootVector& other) const {
    for (auto [i, m] : entries_) {
        if (other[i] < m) return false;
    }
    return true;
}

RootVector RootVector::operator+(const RootVector& other) const {
    RootVector out = *this;
    for (auto [i, m] : other.entries_) out.add(i, m);
    return out;
}

RootVector RootVector::operator-(const RootVector& other) const {
    if (!other.le(*this)) throw Error("not a subroot: " + other.to_string() + " > " + to_string());
    RootVector out = *this;
    for (auto [i, m] : other.entries_) out.add(i, -m);
    return out;
}

std::string RootVector::to_string() const {
    if (entries_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto [i, m] : entries_) {
        if (!first) os << '+';
        first = false;
        if (m != 1) os << m;
        os << 'a' << i;
    }
    return os.str();
}

DominantWeight::DominantWeight(CartanType t, std::vector<Residue> kappa)
    : type(t), charge(std::move(kappa)) {
    for (Residue k : charge) {
        if (!type.valid_label(k)) {
            throw Error("type C charges must be non-negative (got " + std::to_string(k) + ")");
        }
    }
}

int bilinear_form(CartanType type, Residue i, Residue j) {
    type.require_label(i);
    type.require_label(j);
    const int d_i = (type.kind == CartanKind::C && i == 0) ? 2 : 1;
    const int d_j = (type.kind == CartanKind::C && j == 0) ? 2 : 1;
    if (i == j) return 2 * d_i;
    if (std::abs(i - j) != 1) return 0;
    // Off-diagonal Cartan entries: a_{10} = -2 in C-infinity, otherwise -1.
    // d_i a_ij is symmetric, so the larger symmetrizer decides.
    return -std::max(d_i, d_j);
}

int cartan_pairing(Residue i, const DominantWeight& weight) {
    int n = 0;
    for (Residue k : weight.charge) n += (k == i);
    return n;
}

int generator_degree(CartanType type, Generator gen, std::span<const Residue> local_residues) {
    switch (gen) {
        case Generator::Idempotent:
            return 0;
        case Generator::Dot:
            if (local_residues.empty()) throw Error("dot degree needs one residue");
            return bilinear_form(type, local_residues[0], local_residues[0]);
        case Generator::Crossing:
            if (local_residues.size() < 2) throw Error("crossing degree needs two residues");
            return bilinear_form(type, local_residues[0], local_residues[1]);
    }
    return 0;
}

}  // namespace klr
