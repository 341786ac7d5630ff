#include "doctest.h"

#include "qtg/char_pair.hpp"
#include "qtg/errors.hpp"
#include "qtg/io.hpp"
#include "qtg/toric.hpp"

#include <random>
#include <string>

using namespace qtg;

namespace {

PolytopeData simplex_data() {
    InputDocument doc = generate_example("cp2");
    return analyze(HPolytope(doc.dim, doc.facets));
}

CharMatrix lambda_fig(const char* name) {
    return CharMatrix(2, *generate_example(name).lambda);
}

int frame_for(const std::vector<LocalFrame>& frames, const PolytopeData& data,
              std::initializer_list<long long> coords) {
    QVector p;
    for (long long x : coords) p.emplace_back(x);
    for (std::size_t i = 0; i < frames.size(); ++i)
        if (data.vertices[frames[i].vertex].coords == p) return static_cast<int>(i);
    return -1;
}

NuVector nu12() { return NuVector{1, 2}; }

} // namespace

TEST_CASE("the cp2 characteristic matrix validates") {
    PolytopeData data = simplex_data();
    CHECK(validate_characteristic(data, lambda_fig("cp2")).ok());
    CHECK(validate_characteristic(data, lambda_fig("cp2-bar")).ok());
    CHECK(validate_characteristic(data, lambda_fig("cp2-eta")).ok());
}

TEST_CASE("a non-unimodular minor is reported with its vertex and determinant") {
    PolytopeData data = simplex_data();
    CharMatrix lambda(2, {{-2, -1}, {1, 0}, {0, 1}});
    ValidationReport report = validate_characteristic(data, lambda);
    CHECK(report.non_primitive_columns.empty());
    // Only the minor at (1, 0) degenerates: det((-2,-1),(0,1)) = -2, while
    // det((-2,-1),(1,0)) = 1 keeps (0, 1) unimodular.
    REQUIRE(report.non_unimodular_vertices.size() == 1);
    CHECK(data.vertices[report.non_unimodular_vertices[0].first].coords ==
          QVector{Rat(1), Rat(0)});
    CHECK(report.non_unimodular_vertices[0].second == -2);
    CHECK_THROWS_AS(require_valid(data, report), NonUnimodularAtVertexError);
    try {
        require_valid(data, report);
    } catch (const NonUnimodularAtVertexError& e) {
        CHECK(std::string(e.what()).find("(1, 0)") != std::string::npos);
    }
}

TEST_CASE("several vertices can fail unimodularity at once") {
    PolytopeData data = simplex_data();
    CharMatrix lambda(2, {{-2, -3}, {1, 0}, {0, 1}});
    ValidationReport report = validate_characteristic(data, lambda);
    CHECK(report.non_unimodular_vertices.size() == 2);
}

TEST_CASE("non-primitive columns are rejected") {
    PolytopeData data = simplex_data();
    CharMatrix lambda(2, {{2, 2}, {1, 0}, {0, 1}});
    ValidationReport report = validate_characteristic(data, lambda);
    REQUIRE(report.non_primitive_columns == std::vector<int>{0});
    CHECK_THROWS_AS(require_valid(data, report), NonPrimitiveColumnError);
}

TEST_CASE("column count must match the facet count") {
    PolytopeData data = simplex_data();
    CharMatrix lambda(2, {{1, 0}, {0, 1}});
    CHECK_THROWS_AS(validate_characteristic(data, lambda), DimensionMismatchError);
}

TEST_CASE("local frame at the origin of cp2") {
    PolytopeData data = simplex_data();
    std::vector<LocalFrame> frames = build_frames(data, lambda_fig("cp2"), +1);
    int i = frame_for(frames, data, {0, 0});
    REQUIRE(i >= 0);
    const LocalFrame& frame = frames[i];
    CHECK(frame.ordered_facets == std::vector<int>{1, 2});
    CHECK(frame.lambda_minor == IntMatrix::identity(2));
    CHECK(frame.mu_matrix == IntMatrix::identity(2));
    CHECK(frame.sigma == 1);
}

TEST_CASE("vertex signs of the three cp2 structures") {
    PolytopeData data = simplex_data();

    std::vector<LocalFrame> fig1 = build_frames(data, lambda_fig("cp2"), +1);
    for (const LocalFrame& f : fig1) CHECK(f.sigma == 1);

    std::vector<LocalFrame> fig2 = build_frames(data, lambda_fig("cp2-bar"), +1);
    for (const LocalFrame& f : fig2) CHECK(f.sigma == -1);

    std::vector<LocalFrame> fig3 = build_frames(data, lambda_fig("cp2-eta"), +1);
    CHECK(fig3[frame_for(fig3, data, {0, 0})].sigma == 1);
    CHECK(fig3[frame_for(fig3, data, {1, 0})].sigma == -1);
    CHECK(fig3[frame_for(fig3, data, {0, 1})].sigma == -1);
}

TEST_CASE("edge vectors pair to the identity with the facet vectors") {
    PolytopeData data = simplex_data();
    for (const char* name : {"cp2", "cp2-bar", "cp2-eta"})
        for (int orientation : {+1, -1})
            for (const LocalFrame& f : build_frames(data, lambda_fig(name), orientation)) {
                CHECK(f.mu_matrix.transposed() * f.lambda_minor ==
                      IntMatrix::identity(2));
                CHECK(det(f.mu_matrix) == det(f.lambda_minor));
            }
}

TEST_CASE("indices of the cp2 structures at nu = (1, 2)") {
    PolytopeData data = simplex_data();

    std::vector<LocalFrame> fig1 = build_frames(data, lambda_fig("cp2"), +1);
    CHECK(index_mu(fig1[frame_for(fig1, data, {0, 0})], nu12()) == 0);
    CHECK(index_mu(fig1[frame_for(fig1, data, {1, 0})], nu12()) == 1);
    CHECK(index_mu(fig1[frame_for(fig1, data, {0, 1})], nu12()) == 2);

    std::vector<LocalFrame> fig3 = build_frames(data, lambda_fig("cp2-eta"), +1);
    CHECK(index_mu(fig3[frame_for(fig3, data, {0, 0})], nu12()) == 0);
    CHECK(index_mu(fig3[frame_for(fig3, data, {1, 0})], nu12()) == 0);
    CHECK(index_mu(fig3[frame_for(fig3, data, {0, 1})], nu12()) == 1);

    // the expansion route gives the same values
    CHECK(index_lambda(fig1[frame_for(fig1, data, {1, 0})], nu12()) == 1);
    CHECK(index_lambda(fig1[frame_for(fig1, data, {0, 0})], nu12()) == 0);
}

TEST_CASE("both index definitions agree on random generic directions") {
    for (const char* name : {"cp2", "cp2-bar", "cp2-eta", "simplex-3", "cube-2", "cube-3"}) {
        InputDocument doc = generate_example(name);
        PolytopeData data = analyze(HPolytope(doc.dim, doc.facets));
        CharMatrix lambda = doc.lambda ? CharMatrix(doc.dim, *doc.lambda)
                                       : lambda_from_normals(data);
        std::vector<LocalFrame> frames = build_frames(data, lambda, doc.orientation);

        std::mt19937 rng(23u);
        int tested = 0;
        while (tested < 100) {
            NuVector nu(doc.dim);
            for (int k = 0; k < doc.dim; ++k)
                nu[k] = static_cast<long long>(rng() % 21) - 10;
            if (is_zero_vector(nu) || !is_generic(frames, nu)) continue;
            nu = make_primitive(nu);
            for (const LocalFrame& frame : frames)
                CHECK(index_mu(frame, nu) == index_lambda(frame, nu));
            ++tested;
        }
    }
}

TEST_CASE("zero pairings raise NonGenericNu") {
    PolytopeData data = simplex_data();
    std::vector<LocalFrame> frames = build_frames(data, lambda_fig("cp2"), +1);
    NuVector bad{0, 1};
    CHECK_THROWS_AS(weights(frames[0], bad), NonGenericNuError);
    CHECK_THROWS_AS(index_mu(frames[0], bad), NonGenericNuError);
    CHECK_THROWS_AS(index_lambda(frames[0], bad), NonGenericNuError);
    CHECK_FALSE(is_generic(frames, bad));
    try {
        require_generic(frames, bad);
        CHECK(false);
    } catch (const NonGenericNuError& e) {
        CHECK(std::string(e.what()).find("facet") != std::string::npos);
    }
}

TEST_CASE("the deterministic nu search lands on the textbook direction") {
    PolytopeData data = simplex_data();
    std::vector<LocalFrame> frames = build_frames(data, lambda_fig("cp2"), +1);
    NuVector nu = find_generic_nu(frames);
    CHECK(nu == nu12());
    CHECK(find_generic_nu(frames) == nu);
    CHECK(is_generic(frames, nu));
}

TEST_CASE("negating one column flips the paired weights and keeps validity") {
    PolytopeData data = simplex_data();
    std::vector<LocalFrame> before = build_frames(data, lambda_fig("cp2"), +1);

    CharMatrix flipped(2, {{-1, -1}, {-1, 0}, {0, 1}}); // column 1 negated
    CHECK(validate_characteristic(data, flipped).ok());
    std::vector<LocalFrame> after = build_frames(data, flipped, +1);

    for (std::size_t i = 0; i < before.size(); ++i) {
        std::vector<Int> wb = weights(before[i], nu12());
        std::vector<Int> wa = weights(after[i], nu12());
        for (std::size_t k = 0; k < before[i].ordered_facets.size(); ++k) {
            std::size_t ka = 0;
            while (after[i].ordered_facets[ka] != before[i].ordered_facets[k]) ++ka;
            if (before[i].ordered_facets[k] == 1)
                CHECK(wa[ka] == -wb[k]);
            else
                CHECK(wa[ka] == wb[k]);
        }
    }
}

TEST_CASE("reversing the orientation negates every vertex sign") {
    PolytopeData data = simplex_data();
    for (const char* name : {"cp2", "cp2-bar", "cp2-eta"}) {
        std::vector<LocalFrame> plus = build_frames(data, lambda_fig(name), +1);
        std::vector<LocalFrame> minus = build_frames(data, lambda_fig(name), -1);
        for (std::size_t i = 0; i < plus.size(); ++i) {
            CHECK(minus[i].sigma == -plus[i].sigma);
            CHECK(index_mu(minus[i], nu12()) == index_mu(plus[i], nu12()));
        }
    }
}
