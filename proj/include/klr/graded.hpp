#pragma once

// Integer Laurent polynomials in q and graded dimensions of Specht modules,
// their weight spaces, and (truncated) cellular blocks.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "klr/partitions.hpp"
#include "klr/tableaux.hpp"

namespace klr {

class LaurentPoly {
public:
    using Coeff = std::int64_t;

    LaurentPoly() = default;
    explicit LaurentPoly(const std::map<int, Coeff>& coeffs);

    static LaurentPoly constant(Coeff c) { return monomial(0, c); }
    static LaurentPoly monomial(int exponent, Coeff c = 1);
    /// q + q^{-1}
    static LaurentPoly quantum_two() { return monomial(1) + monomial(-1); }

    const std::map<int, Coeff>& coeffs() const { return coeffs_; }
    Coeff coeff(int exponent) const;
    bool is_zero() const { return coeffs_.empty(); }
    std::optional<int> min_exponent() const;
    std::optional<int> max_exponent() const;

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly pow(unsigned k) const;
    /// q -> q^{-1}
    LaurentPoly bar() const;
    /// Multiplication by q^c.
    LaurentPoly shifted(int c) const;
    Coeff eval_at_1() const;

    /// "q^-1 + q", "0", "2q^2 - 1", ...
    std::string to_string() const;
    /// [[exponent, coefficient], ...] sorted by exponent.
    std::vector<std::pair<int, Coeff>> terms() const;

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

private:
    void add_term(int exponent, Coeff c);
    std::map<int, Coeff> coeffs_;
};

/// The c with lhs == q^c * rhs, if one exists.  Two zero polynomials give 0.
std::optional<int> monomial_shift(const LaurentPoly& lhs, const LaurentPoly& rhs);

/// Sum of q^deg(t) over standard tableaux of shape with residue sequence seq.
LaurentPoly gdim_specht_weight(const MultiPartition& shape, const DominantWeight& weight,
                               const ResidueSequence& seq);

/// Sum of q^deg(t) over all standard tableaux of shape.
LaurentPoly gdim_specht(const MultiPartition& shape, const DominantWeight& weight);

/// Sum of q^deg(t) over the tableaux of shape whose first ht(omega) entries
/// have content omega.
LaurentPoly gdim_factorizable(const MultiPartition& shape, const DominantWeight& weight, const RootVector& omega);

/// Graded dimension of the cellular algebra of block beta, optionally
/// truncated by the idempotent cutting the first ht(omega) entries to omega
/// (type C only).
LaurentPoly gdim_block(const DominantWeight& weight, const RootVector& beta,
                       const std::optional<RootVector>& omega = std::nullopt);

}  // namespace klr
