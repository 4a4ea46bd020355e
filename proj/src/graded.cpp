#include "klr/graded.hpp"

#include <sstream>

namespace klr {

LaurentPoly::LaurentPoly(const std::map<int, Coeff>& coeffs) {
    for (auto [e, c] : coeffs) add_term(e, c);
}

LaurentPoly LaurentPoly::monomial(int exponent, Coeff c) {
    LaurentPoly p;
    p.add_term(exponent, c);
    return p;
}

void LaurentPoly::add_term(int exponent, Coeff c) {
    if (c == 0) return;
    Coeff& slot = coeffs_[exponent];
    slot += c;
    if (slot == 0) coeffs_.erase(exponent);
}

LaurentPoly::Coeff LaurentPoly::coeff(int exponent) const {
    auto it = coeffs_.find(exponent);
    return it == coeffs_.end() ? 0 : it->second;
}

std::optional<int> LaurentPoly::min_exponent() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.begin()->first;
}

std::optional<int> LaurentPoly::max_exponent() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.rbegin()->first;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly out = *this;
    out += o;
    return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (auto [e, c] : o.coeffs_) add_term(e, c);
    return *this;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly out = *this;
    for (auto [e, c] : o.coeffs_) out.add_term(e, -c);
    return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly out;
    for (auto [e1, c1] : coeffs_) {
        for (auto [e2, c2] : o.coeffs_) out.add_term(e1 + e2, c1 * c2);
    }
    return out;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
    LaurentPoly out = constant(1);
    for (unsigned j = 0; j < k; ++j) out = out * *this;
    return out;
}

LaurentPoly LaurentPoly::bar() const {
    LaurentPoly out;
    for (auto [e, c] : coeffs_) out.add_term(-e, c);
    return out;
}

LaurentPoly LaurentPoly::shifted(int c) const {
    LaurentPoly out;
    for (auto [e, v] : coeffs_) out.add_term(e + c, v);
    return out;
}

LaurentPoly::Coeff LaurentPoly::eval_at_1() const {
    Coeff s = 0;
    for (auto [e, c] : coeffs_) s += c;
    return s;
}

std::string LaurentPoly::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto [e, c] : coeffs_) {
        Coeff mag = c < 0 ? -c : c;
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (e == 0) {
            os << mag;
            continue;
        }
        if (mag != 1) os << mag;
        os << 'q';
        if (e != 1) os << '^' << e;
    }
    return os.str();
}

std::vector<std::pair<int, LaurentPoly::Coeff>> LaurentPoly::terms() const {
    return {coeffs_.begin(), coeffs_.end()};
}

std::optional<int> monomial_shift(const LaurentPoly& lhs, const LaurentPoly& rhs) {
    if (lhs.is_zero() && rhs.is_zero()) return 0;
    if (lhs.is_zero() || rhs.is_zero()) return std::nullopt;
    const int c = *lhs.min_exponent() - *rhs.min_exponent();
    if (rhs.shifted(c) == lhs) return c;
    return std::nullopt;
}

// ------------------------------------------------------- graded dimensions

LaurentPoly gdim_specht_weight(const MultiPartition& shape, const DominantWeight& weight,
                               const ResidueSequence& seq) {
    LaurentPoly out;
    for_each_standard(shape, ResidueFilter{weight, seq}, [&](const StandardTableau& t) {
        out += LaurentPoly::monomial(degree(t, weight));
        return true;
    });
    return out;
}

LaurentPoly gdim_specht(const MultiPartition& shape, const DominantWeight& weight) {
    LaurentPoly out;
    for_each_standard(shape, std::nullopt, [&](const StandardTableau& t) {
        out += LaurentPoly::monomial(degree(t, weight));
        return true;
    });
    return out;
}

LaurentPoly gdim_factorizable(const MultiPartition& shape, const DominantWeight& weight, const RootVector& omega) {
    LaurentPoly out;
    for (const auto& t : factorizable_tableaux(shape, weight, omega)) out += LaurentPoly::monomial(degree(t, weight));
    return out;
}

LaurentPoly gdim_block(const DominantWeight& weight, const RootVector& beta, const std::optional<RootVector>& omega) {
    if (omega && weight.type.kind != CartanKind::C) throw Error("truncated block dimension is defined in type C");
    LaurentPoly out;
    for (const auto& shape : enumerate_block(weight, beta)) {
        const LaurentPoly cell = omega ? gdim_factorizable(shape, weight, *omega) : gdim_specht(shape, weight);
        out += cell * cell;
    }
    return out;
}

}  // namespace klr
