#include "doctest.h"

#include "qtg/errors.hpp"
#include "qtg/io.hpp"
#include "qtg/toric.hpp"

using namespace qtg;

namespace {

Facet facet(IntVector normal, long long offset) {
    return Facet{std::move(normal), Rat(offset)};
}

PolytopeData data_for(const char* name) {
    InputDocument doc = generate_example(name);
    return analyze(HPolytope(doc.dim, doc.facets));
}

} // namespace

TEST_CASE("inward normals become the characteristic columns") {
    PolytopeData simplex = data_for("simplex-2");
    CharMatrix lambda = lambda_from_normals(simplex);
    CHECK(lambda.column(0) == IntVector{-1, -1});
    CHECK(lambda.column(1) == IntVector{1, 0});
    CHECK(lambda.column(2) == IntVector{0, 1});

    PolytopeData square = data_for("cube-2");
    CharMatrix sq = lambda_from_normals(square);
    CHECK(sq.column(0) == IntVector{1, 0});
    CHECK(sq.column(1) == IntVector{0, 1});
    CHECK(sq.column(2) == IntVector{-1, 0});
    CHECK(sq.column(3) == IntVector{0, -1});
}

TEST_CASE("dilation does not change the characteristic matrix") {
    PolytopeData doubled = analyze(
        HPolytope(2, {facet({-1, -1}, 2), facet({1, 0}, 0), facet({0, 1}, 0)}));
    CharMatrix lambda = lambda_from_normals(doubled);
    CHECK(lambda.column(0) == IntVector{-1, -1});
    CHECK(lambda.column(1) == IntVector{1, 0});
    CHECK(lambda.column(2) == IntVector{0, 1});
}

TEST_CASE("non-primitive normals are scaled down") {
    PolytopeData data = analyze(
        HPolytope(2, {facet({-2, -2}, 2), facet({3, 0}, 0), facet({0, 1}, 0)}));
    CharMatrix lambda = lambda_from_normals(data);
    CHECK(lambda.column(0) == IntVector{-1, -1});
    CHECK(lambda.column(1) == IntVector{1, 0});
}

TEST_CASE("a singular toric vertex is rejected") {
    // triangle (0,0), (1,0), (0,2): normals at (1,0) span index 2
    PolytopeData data = analyze(
        HPolytope(2, {facet({-2, -1}, 2), facet({1, 0}, 0), facet({0, 1}, 0)}));
    CHECK_THROWS_AS(lambda_from_normals(data), NonSmoothToricError);
    CHECK_THROWS_AS(toric_report(data), NonSmoothToricError);
}

TEST_CASE("non-integral vertices are rejected in toric mode") {
    PolytopeData data = analyze(
        HPolytope(2, {facet({-2, -1}, 1), facet({1, 0}, 0), facet({0, 1}, 0)}));
    CHECK_THROWS_AS(require_integral(data), NonIntegralPolytopeError);
    CHECK_THROWS_AS(toric_report(data), NonIntegralPolytopeError);
}

TEST_CASE("toric report of the projective plane") {
    ToricReport report = toric_report(data_for("simplex-2"));
    CHECK(report.genus.chi == YPolynomial({Int(1), Int(-1), Int(1)}));
    CHECK(report.genus.todd == 1);
    CHECK(report.genus.signature == 1);
    CHECK(report.morse_counts == std::vector<long long>{1, 1, 1});
}

TEST_CASE("toric report of products of projective lines") {
    ToricReport square = toric_report(data_for("cube-2"));
    CHECK(square.genus.todd == 1);
    CHECK(square.genus.signature == 0);
    CHECK(square.morse_counts == std::vector<long long>{1, 2, 1});

    ToricReport cube = toric_report(data_for("cube-3"));
    CHECK(cube.genus.todd == 1);
    CHECK(cube.genus.signature == 0);
    CHECK(cube.morse_counts == std::vector<long long>{1, 3, 3, 1});
}

TEST_CASE("toric report of the projective line") {
    ToricReport report = toric_report(data_for("simplex-1"));
    CHECK(report.genus.chi == YPolynomial({Int(1), Int(-1)}));
    CHECK(report.genus.signature == 0);
    CHECK(report.genus.todd == 1);
    CHECK(report.morse_counts == std::vector<long long>{1, 1});
}

TEST_CASE("toric identities across simplices and cubes") {
    for (const char* name : {"simplex-1", "simplex-2", "simplex-3", "simplex-4",
                             "cube-1", "cube-2", "cube-3"}) {
        PolytopeData data = data_for(name);
        ToricReport report = toric_report(data);
        CHECK(report.genus.todd == 1);
        CHECK(report.morse_counts[0] == 1);
        REQUIRE(report.morse_counts.size() == data.h.size());
        for (std::size_t k = 0; k < data.h.size(); ++k)
            CHECK(report.morse_counts[k] == data.h[k]);
        Int alternating = 0;
        for (std::size_t k = 0; k < data.h.size(); ++k)
            alternating += (k % 2 == 0) ? Int(data.h[k]) : Int(-data.h[k]);
        CHECK(report.genus.signature == alternating);
    }
}

TEST_CASE("a supplied generic direction is honored") {
    ToricReport report = toric_report(data_for("simplex-2"), NuVector{1, 2});
    CHECK(report.genus.nu_used == NuVector{1, 2});
    CHECK_THROWS_AS(toric_report(data_for("simplex-2"), NuVector{1, 1}), NonGenericNuError);
}
