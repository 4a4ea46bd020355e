#include <doctest.h>

#include "klr/json_io.hpp"

using namespace klr;

TEST_CASE("encodings") {
    CHECK(json::encode(RootVector({{0, 2}, {1, 2}})).dump() == R"({"0":2,"1":2})");
    CHECK(json::encode(Partition({7, 6, 5, 4})).dump() == "[7,6,5,4]");
    CHECK(json::encode(MultiPartition{Partition({3, 2, 1}), Partition()}).dump() == "[[3,2,1],[]]");
    CHECK(json::encode(MultiPartition{Partition({2})}).dump() == "[2]");
    CHECK(json::encode(Node{2, 1, 1}).dump() == "[2,1,1]");
    CHECK(json::encode(LaurentPoly::quantum_two()).dump() == "[[-1,1],[1,1]]");
    CHECK(json::encode(initial_tableau(Partition({2, 1}))).dump() == R"({"rows":[[1,2],[3]],"shape":[2,1]})");
    CHECK(json::encode(SegmentData{1, {0, 1}, 0}).dump() == R"({"k":1,"residues":[0,1],"ydeg":0})");
}

TEST_CASE("decoders invert encoders") {
    const RootVector v({{0, 1}, {3, 4}});
    CHECK(json::decode_root_vector(json::encode(v)) == v);
    const MultiPartition bp{Partition({2, 1}), Partition({1})};
    CHECK(json::decode_multipartition(json::encode(bp)) == bp);
    CHECK(json::decode_multipartition(nlohmann::json::parse("[]")) == MultiPartition{Partition()});
    for (const auto& shape : multipartitions_of(4, 2))
        for (const auto& t : enumerate_standard(shape)) CHECK(json::decode_tableau(json::encode(t)) == t);
    const LaurentPoly p({{-2, 1}, {3, -4}});
    CHECK(json::decode_laurent(json::encode(p)) == p);
    CHECK_THROWS_AS(json::decode_root_vector(nlohmann::json::parse(R"({"x":1})")), std::exception);
    CHECK_THROWS_AS(json::decode_root_vector(nlohmann::json::parse(R"({"0":-1})")), Error);
    CHECK_THROWS_AS(json::decode_partition(nlohmann::json::parse("[1,2]")), Error);
}

TEST_CASE("report shape") {
    const auto r = verify_bridge(make_bridge(0, RootVector({{0, 1}, {1, 2}})), CheckSet::all());
    const auto j = json::encode(r);
    CHECK(j.at("pass") == true);
    CHECK(j.at("bridge").at("rho") == nlohmann::json::parse("[1]"));
    CHECK(j.at("checks").at("count").at("lhs") == 4);
    CHECK(j.at("checks").at("graded").at("shift") == 0);
    CHECK(j.at("checks").at("kleshchev").at("c_kleshchev") == nlohmann::json::parse("[[2,1]]"));
    CHECK(j.at("checks").at("dominance").at("monotone") == true);
}
