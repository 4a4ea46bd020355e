#include <doctest.h>

#include <map>

#include "klr/graded.hpp"
#include "oracles.hpp"

using namespace klr;

namespace {
const DominantWeight C0{CartanType::c(), {0}};
const DominantWeight A11{CartanType::a(), {1, 1}};
const LaurentPoly q2 = LaurentPoly::quantum_two();
}  // namespace

TEST_CASE("Laurent polynomial arithmetic") {
    CHECK(q2 * q2 == LaurentPoly(std::map<int, LaurentPoly::Coeff>{{-2, 1}, {0, 2}, {2, 1}}));
    CHECK(LaurentPoly::monomial(3).bar() == LaurentPoly::monomial(-3));
    CHECK(q2.pow(3).eval_at_1() == 8);
    CHECK(q2.pow(0) == LaurentPoly::constant(1));
    CHECK((q2 - q2).is_zero());
    CHECK(LaurentPoly(std::map<int, LaurentPoly::Coeff>{{1, 0}}).is_zero());
    CHECK(q2.to_string() == "q^-1 + q");
    CHECK(LaurentPoly(std::map<int, LaurentPoly::Coeff>{{2, 2}, {0, -1}}).to_string() == "-1 + 2q^2");
    CHECK(LaurentPoly().to_string() == "0");
    const LaurentPoly p({{-1, 3}, {4, -2}, {0, 1}});
    CHECK(p.bar().bar() == p);
    CHECK(p.shifted(2).shifted(-2) == p);
    CHECK((p * q2).bar() == p.bar() * q2);
    CHECK(p * (q2 + p) == p * q2 + p * p);
}

TEST_CASE("monomial shifts") {
    CHECK(monomial_shift(q2.shifted(3), q2) == 3);
    CHECK(monomial_shift(q2, q2) == 0);
    CHECK(monomial_shift(LaurentPoly(), LaurentPoly()) == 0);
    CHECK_FALSE(monomial_shift(q2, LaurentPoly::monomial(1)).has_value());
    CHECK_FALSE(monomial_shift(LaurentPoly(), q2).has_value());
}

TEST_CASE("weight-space graded dimensions") {
    const MultiPartition r22{Partition::rectangle(2, 2)};
    CHECK(gdim_specht_weight(r22, C0, {0, 1, 1, 0}) == q2);
    const MultiPartition r66{Partition::rectangle(6, 6)};
    CHECK(gdim_specht_weight(r66, C0, residue_sequence(initial_tableau(r66), C0)) == q2.pow(3));
    CHECK(gdim_specht_weight(MultiPartition{Partition({1})}, C0, {1}).is_zero());
}

TEST_CASE("Specht graded dimensions") {
    CHECK(gdim_specht(MultiPartition{Partition({1}), Partition({1})}, A11) == q2);
    CHECK(gdim_specht(MultiPartition{Partition({2, 1})}, C0) == q2);
    CHECK(gdim_specht(MultiPartition{Partition()}, C0) == LaurentPoly::constant(1));
}

TEST_CASE("closed form on rectangles") {
    for (int kc = 0; kc <= 2; ++kc) {
        const DominantWeight w{CartanType::c(), {kc}};
        for (int a0 = 1; a0 <= 6; ++a0) {
            const MultiPartition rho{Partition::rectangle(a0, kc + a0)};
            const auto g = gdim_specht_weight(rho, w, residue_sequence(initial_tableau(rho), w));
            CHECK(g == q2.pow(static_cast<unsigned>(a0 / 2)));
            CHECK(g.bar() == g);
        }
    }
}

TEST_CASE("weight spaces sum to the Specht module") {
    for (const auto& w : {C0, DominantWeight(CartanType::c(), {1})}) {
        for (int n = 0; n <= 9; ++n) {
            for (const auto& p : partitions_of(n)) {
                const MultiPartition shape{p};
                std::map<ResidueSequence, int> seqs;
                for (const auto& t : enumerate_standard(shape)) seqs[residue_sequence(t, w)] = 1;
                LaurentPoly sum;
                for (const auto& [seq, unused] : seqs) sum += gdim_specht_weight(shape, w, seq);
                REQUIRE(sum == gdim_specht(shape, w));
            }
        }
    }
    for (int n = 0; n <= 5; ++n) {
        for (const auto& shape : multipartitions_of(n, 2)) {
            std::map<ResidueSequence, int> seqs;
            for (const auto& t : enumerate_standard(shape)) seqs[residue_sequence(t, A11)] = 1;
            LaurentPoly sum;
            for (const auto& [seq, unused] : seqs) sum += gdim_specht_weight(shape, A11, seq);
            REQUIRE(sum == gdim_specht(shape, A11));
        }
    }
}

TEST_CASE("block graded dimensions") {
    const RootVector b({{0, 1}, {1, 2}});
    CHECK(gdim_block(C0, b, RootVector::simple(0)) == q2 * q2);
    CHECK(gdim_block(A11, RootVector::simple(1, 2)) == q2 * q2);
    CHECK(gdim_block(C0, RootVector::simple(1, 2)).is_zero());
    CHECK_THROWS_AS(gdim_block(A11, RootVector::simple(1, 2), RootVector::simple(1)), Error);
}

TEST_CASE("block dimensions at q = 1 count pairs of tableaux") {
    for (int kc = 0; kc <= 1; ++kc) {
        const DominantWeight w{CartanType::c(), {kc}};
        std::map<RootVector, std::vector<Partition>> blocks;
        for (int n = 1; n <= 8; ++n)
            for (const auto& p : partitions_of(n)) blocks[content(w, MultiPartition{p})].push_back(p);
        for (const auto& [beta, shapes] : blocks) {
            std::uint64_t expect = 0;
            for (const auto& p : shapes) expect += oracle::hook_count(p) * oracle::hook_count(p);
            const auto g = gdim_block(w, beta);
            REQUIRE(g.eval_at_1() == static_cast<LaurentPoly::Coeff>(expect));
        }
    }
}
