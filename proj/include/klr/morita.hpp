#pragma once

// The bridge between a level-one type-C block and a level-two type-A block:
// (lambda, mu) <-> rho + (lambda, mu'), the induced tableau correspondence,
// and a battery of combinatorial checks for the resulting equivalence.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "klr/graded.hpp"
#include "klr/partitions.hpp"
#include "klr/tableaux.hpp"

namespace klr {

struct BlockBridge {
    Residue kappa_c = 0;
    RootVector beta;   // type-C block
    int a0 = 0;        // multiplicity of alpha_0 in beta
    Partition rho;     // a0^(kappa_c + a0)
    RootVector omega;  // content of rho
    Residue kappa1 = 0;
    Residue kappa2 = 0;

    DominantWeight c_weight() const { return {CartanType::c(), {kappa_c}}; }
    DominantWeight a_weight() const { return {CartanType::a(), {kappa1, kappa2}}; }
    RootVector a_beta() const { return beta - omega; }
};

/// Throws klr::Error when beta has no alpha_0, or when omega is not below beta.
BlockBridge make_bridge(Residue kappa_c, const RootVector& beta);

/// (lambda, mu) -> rho + (lambda, mu').  Throws unless bp lies in the A-block.
Partition to_type_c(const MultiPartition& bp, const BlockBridge& bridge);
/// Inverse of to_type_c.  Throws unless nu lies in the C-block.
MultiPartition from_type_c(const Partition& nu, const BlockBridge& bridge);

/// The factorizable nu-tableau built from s on rho and u on (lambda, mu):
/// entries of s first, then u's entries placed at [r, a0 + c] for a
/// component-1 node [r, c] and at [length(rho) + c, r] for a component-2
/// node [r, c].
StandardTableau tableau_to_type_c(const StandardTableau& s, const StandardTableau& u, const BlockBridge& bridge);
/// Inverse of tableau_to_type_c on factorizable tableaux.
std::pair<StandardTableau, StandardTableau> tableau_from_type_c(const StandardTableau& t, const BlockBridge& bridge);

struct CheckSet {
    bool count = false;
    bool graded = false;
    bool dominance = false;
    bool kleshchev = false;
    bool goodpath = false;

    static CheckSet all() { return {true, true, true, true, true}; }
    /// Comma-separated subset of count,graded,dominance,kleshchev,goodpath.
    static CheckSet parse(const std::string& csv);
};

struct ShapePair {
    Partition nu;
    MultiPartition bp;
};

struct CountShape {
    ShapePair shapes;
    std::uint64_t factorizable = 0;
    std::uint64_t rho_tableaux = 0;
    std::uint64_t bp_tableaux = 0;
    bool pass = false;
};

struct CountCheck {
    bool pass = false;
    std::uint64_t lhs = 0;  // sum over nu of |Std_{omega,beta-omega}(nu)|^2
    std::uint64_t rhs = 0;  // |Std(rho)|^2 * sum over (lambda,mu) of |Std(lambda,mu)|^2
    bool bijective = false;
    std::vector<CountShape> per_shape;
    std::optional<std::string> witness;
};

struct GradedShape {
    ShapePair shapes;
    LaurentPoly factorizable;
    LaurentPoly rho;
    LaurentPoly bp;
    std::optional<int> shift;
};

struct GradedCheck {
    bool pass = false;
    /// Common shift across the block, when one exists.
    std::optional<int> shift;
    std::vector<GradedShape> per_shape;
    std::optional<std::string> witness;
};

struct DominanceCheck {
    /// to_type_c is an order-isomorphism of the two dominance posets.
    bool pass = false;
    /// A-dominance implies C-dominance for every pair (order-preserving).
    bool monotone = false;
    std::uint64_t pairs = 0;
    std::optional<std::string> witness;
};

struct KleshchevCheck {
    bool pass = false;
    std::vector<MultiPartition> a_kleshchev;
    std::vector<Partition> c_kleshchev;
    std::optional<std::string> witness;
};

struct GoodPathEntry {
    Partition nu;
    std::optional<ResidueSequence> word;
    bool replayed = false;
};

struct GoodPathCheck {
    bool pass = false;
    std::vector<GoodPathEntry> entries;
    std::optional<std::string> witness;
};

struct BridgeReport {
    BlockBridge bridge;
    std::vector<Partition> c_block;
    std::vector<MultiPartition> a_block;
    std::optional<CountCheck> count;
    std::optional<GradedCheck> graded;
    std::optional<DominanceCheck> dominance;
    std::optional<KleshchevCheck> kleshchev;
    std::optional<GoodPathCheck> goodpath;

    bool pass() const;
};

BridgeReport verify_bridge(const BlockBridge& bridge, const CheckSet& checks);

/// Type-C blocks beta with a0 >= 1 and 1 <= ht(beta) <= max_n, ordered by
/// height and then by the root vector.
std::vector<RootVector> c_blocks_with_zero(Residue kappa_c, int max_n);

/// verify_bridge over c_blocks_with_zero, fanned out over `threads`
/// workers; the result keeps the canonical block order.
std::vector<BridgeReport> verify_range(Residue kappa_c, int max_n, const CheckSet& checks, unsigned threads = 1);

}  // namespace klr
