#include "doctest.h"

#include "qtg/equivariant.hpp"
#include "qtg/errors.hpp"
#include "qtg/io.hpp"
#include "qtg/toric.hpp"

using namespace qtg;

namespace {

std::vector<LocalFrame> frames_for(const char* name) {
    InputDocument doc = generate_example(name);
    PolytopeData data = analyze(HPolytope(doc.dim, doc.facets));
    CharMatrix lambda = doc.lambda ? CharMatrix(doc.dim, *doc.lambda)
                                   : lambda_from_normals(data);
    return build_frames(data, lambda, doc.orientation);
}

std::vector<Rat> standard_samples() {
    return {Rat(1, 2), Rat(2), Rat(-1, 3), Rat(3), Rat(5, 7)};
}

NuVector nu12() { return NuVector{1, 2}; }

} // namespace

TEST_CASE("the fixed-point sum collapses to the combinatorial polynomial") {
    std::vector<LocalFrame> fig1 = frames_for("cp2");
    QYPolynomial value = equivariant_chi_y_at(fig1, nu12(), Rat(1, 2));
    REQUIRE(value.size() == 3);
    CHECK(value[0] == Rat(1));
    CHECK(value[1] == Rat(-1));
    CHECK(value[2] == Rat(1));
    CHECK(value.equals(chi_y(fig1, nu12())));

    std::vector<LocalFrame> fig3 = frames_for("cp2-eta");
    CHECK(equivariant_chi_y_at(fig3, nu12(), Rat(2)).equals(YPolynomial({Int(0), Int(1), Int(0)})));
}

TEST_CASE("each summand is a genuine rational function before the sum") {
    // the single vertex at the origin contributes non-integer coefficients
    std::vector<LocalFrame> fig1 = frames_for("cp2");
    std::vector<LocalFrame> origin_only{fig1.front()};
    QYPolynomial value = equivariant_chi_y_at(origin_only, nu12(), Rat(1, 2));
    CHECK(value[0] == Rat(8, 3));
    CHECK(value[1] == Rat(2));
    CHECK(value[2] == Rat(1, 3));
}

TEST_CASE("excluded circle parameters raise PoleAtQ") {
    std::vector<LocalFrame> fig1 = frames_for("cp2");
    CHECK_THROWS_AS(equivariant_chi_y_at(fig1, nu12(), Rat(1)), PoleAtQError);
    CHECK_THROWS_AS(equivariant_chi_y_at(fig1, nu12(), Rat(-1)), PoleAtQError);
    CHECK_THROWS_AS(equivariant_chi_y_at(fig1, nu12(), Rat(0)), PoleAtQError);
}

TEST_CASE("rigidity across the standard sample points") {
    RigidityReport r1 = rigidity_check(frames_for("cp2"), nu12(), standard_samples());
    CHECK(r1.ok);
    CHECK(r1.samples.size() == 5);
    for (const RigiditySample& s : r1.samples) CHECK(s.matches);

    RigidityReport r2 = rigidity_check(frames_for("cp2-bar"), nu12(), standard_samples());
    CHECK(r2.ok);
    CHECK(r2.expected == YPolynomial({Int(-1), Int(1), Int(-1)}));

    RigidityReport r3 = rigidity_check(frames_for("cp2-eta"), nu12(), standard_samples());
    CHECK(r3.ok);
}

TEST_CASE("rigidity on toric fixtures and products") {
    for (const char* name : {"simplex-1", "simplex-3", "cube-3", "cp2xsimplex-1"}) {
        std::vector<LocalFrame> frames = frames_for(name);
        NuVector nu = find_generic_nu(frames);
        CHECK(rigidity_check(frames, nu, standard_samples()).ok);
    }
}

TEST_CASE("an empty sample list passes vacuously") {
    RigidityReport report = rigidity_check(frames_for("cp2"), nu12(), {});
    CHECK(report.ok);
    CHECK(report.samples.empty());
}

TEST_CASE("the sum stays constant as q approaches zero") {
    std::vector<LocalFrame> fig1 = frames_for("cp2");
    YPolynomial expected = chi_y(fig1, nu12());
    for (long k = 2; k <= 40; k += 7)
        CHECK(equivariant_chi_y_at(fig1, nu12(), Rat(1, k)).equals(expected));
}
