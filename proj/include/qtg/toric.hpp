#ifndef QTG_TORIC_HPP
#define QTG_TORIC_HPP

#include "qtg/char_pair.hpp"
#include "qtg/genera.hpp"
#include "qtg/polytope.hpp"

#include <optional>
#include <vector>

namespace qtg {

/// Throws NonIntegralPolytope unless every vertex has integer coordinates.
void require_integral(const PolytopeData& data);

/// Characteristic matrix of the projective toric variety of an integral
/// simple polytope: column i is the primitive inward facet normal. Throws
/// NonSmoothToric (naming the vertices) when some vertex minor is not
/// unimodular.
CharMatrix lambda_from_normals(const PolytopeData& data);

struct ToricReport {
    GenusReport genus;
    /// morse_counts[k] = number of vertices of index k; equals the h-vector.
    std::vector<long long> morse_counts;
};

/// Full genus report in toric mode, with the smooth-toric identities
/// (every sigma = 1, a unique bottom vertex, Todd genus 1, morse counts
/// matching the h-vector) verified before returning.
ToricReport toric_report(const PolytopeData& data,
                         const std::optional<NuVector>& nu = std::nullopt);

} // namespace qtg

#endif
