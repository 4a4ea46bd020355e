#pragma once

// Root data for the Lie types A-infinity and C-infinity.
//
// Residue labels are plain signed integers in both types.  Type C only
// admits the non-negative labels, and the check is done where a label or a
// charge enters the system, so type-A and type-C code share all arithmetic.

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace klr {

using Residue = int;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class CartanKind { A, C };

struct CartanType {
    CartanKind kind = CartanKind::A;

    static constexpr CartanType a() { return {CartanKind::A}; }
    static constexpr CartanType c() { return {CartanKind::C}; }

    bool valid_label(Residue i) const { return kind == CartanKind::A || i >= 0; }
    void require_label(Residue i) const;
    std::string name() const { return kind == CartanKind::A ? "A" : "C"; }

    friend bool operator==(CartanType, CartanType) = default;
};

/// Parses "a"/"A"/"c"/"C".
CartanType parse_cartan_type(const std::string& s);

/// Finitely supported element of the positive root cone, stored sparsely.
/// Zero multiplicities are never stored.
class RootVector {
public:
    RootVector() = default;
    explicit RootVector(const std::map<Residue, int>& entries);

    static RootVector simple(Residue i, int mult = 1);

    int operator[](Residue i) const;
    int height() const { return height_; }
    bool empty() const { return entries_.empty(); }
    const std::map<Residue, int>& entries() const { return entries_; }

    void add(Residue i, int mult = 1);

    /// Entrywise comparison (the root-cone partial order).
    bool le(const RootVector& other) const;

    RootVector operator+(const RootVector& other) const;
    /// Throws klr::Error("not a subroot") when other is not entrywise <= *this.
    RootVector operator-(const RootVector& other) const;

    friend bool operator==(const RootVector&, const RootVector&) = default;
    friend auto operator<=>(const RootVector& a, const RootVector& b) {
        return a.entries_ <=> b.entries_;
    }

    /// e.g. "a0+2a1"; the zero vector is "0".
    std::string to_string() const;

private:
    std::map<Residue, int> entries_;
    int height_ = 0;
};

/// A dominant weight Lambda_kappa together with the type whose residue rule
/// it drives.  The level is the length of the charge.
struct DominantWeight {
    CartanType type;
    std::vector<Residue> charge;

    DominantWeight() = default;
    DominantWeight(CartanType t, std::vector<Residue> kappa);

    std::size_t level() const { return charge.size(); }
    friend bool operator==(const DominantWeight&, const DominantWeight&) = default;
};

/// (alpha_i, alpha_j) with symmetrizer d = (1,1,...) in type A and
/// d = (2,1,1,...) in type C.
int bilinear_form(CartanType type, Residue i, Residue j);

/// <alpha_i^vee, Lambda>: the number of charge entries equal to i.
int cartan_pairing(Residue i, const DominantWeight& weight);

enum class Generator { Idempotent, Dot, Crossing };

/// Degree of e(i), y_r e(i) or psi_r e(i).  local_residues holds i_r for a
/// dot and (i_r, i_{r+1}) for a crossing; it is ignored for idempotents.
int generator_degree(CartanType type, Generator gen, std::span<const Residue> local_residues);

}  // namespace klr
