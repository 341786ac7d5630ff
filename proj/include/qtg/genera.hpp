#ifndef QTG_GENERA_HPP
#define QTG_GENERA_HPP

#include "qtg/char_pair.hpp"
#include "qtg/polytope.hpp"
#include "qtg/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qtg {

/// Polynomial in the formal variable y with exact integer coefficients
/// c_0..c_n (trailing zeros kept, so size is always n+1).
class YPolynomial {
public:
    explicit YPolynomial(std::vector<Int> coeffs);

    const std::vector<Int>& coefficients() const { return coeffs_; }
    std::size_t size() const { return coeffs_.size(); }
    const Int& operator[](std::size_t k) const { return coeffs_[k]; }

    Int evaluate(const Int& y) const;
    YPolynomial negated() const;

    /// Rendering like "1 - y + y^2"; the zero polynomial prints as "0".
    std::string str() const;

    bool operator==(const YPolynomial&) const = default;

private:
    std::vector<Int> coeffs_;
};

/// chi_y = sum over vertices of (-y)^{index(p)} * sigma(p).
YPolynomial chi_y(const std::vector<LocalFrame>& frames, const NuVector& nu);

/// Signature: sum of (-1)^{index(p)} sigma(p); equals chi_y at y = 1.
Int signature(const std::vector<LocalFrame>& frames, const NuVector& nu);

/// Signature through the orientation-only route: flip each edge vector to
/// pair positively with nu and sum the determinants of the corrected frames.
/// Independent of the characteristic-column signs; must agree with
/// signature() on every input.
Int signature_oriented(const std::vector<LocalFrame>& frames, const NuVector& nu);

/// Todd genus: sum of sigma(p) over the vertices of index 0.
Int todd(const std::vector<LocalFrame>& frames, const NuVector& nu);

/// Top Chern number: sum of sigma(p) over all vertices (no nu involved);
/// equals chi_y at y = -1.
Int top_chern(const std::vector<LocalFrame>& frames);

/// Euler number: the number of vertices.
long long euler(const std::vector<LocalFrame>& frames);

struct NuInvarianceReport {
    bool ok = true;
    int trials_requested = 0;
    int trials_completed = 0;
    YPolynomial expected{std::vector<Int>{}};
    std::optional<NuVector> first_mismatch_nu;
    std::optional<YPolynomial> first_mismatch_value;
};

/// Recomputes chi_y for `trials` distinct generic directions drawn from a
/// deterministic generator and reports the first disagreement, if any. In
/// ambient dimension 1 only two primitive directions exist, so fewer trials
/// may complete than requested.
NuInvarianceReport nu_invariance_check(const std::vector<LocalFrame>& frames, int trials);

struct GenusReport {
    YPolynomial chi{std::vector<Int>{}};
    Int signature = 0;
    Int todd = 0;
    Int top_chern = 0;
    long long euler = 0;
    FVector f_vector;
    HVector h_vector;
    NuVector nu_used;

    bool operator==(const GenusReport&) const = default;
};

/// Single pass over the frames computing every genus; nu is searched
/// deterministically when not supplied. Cross-checks the specialization
/// identities and the two signature routes before returning.
GenusReport genus_report(const PolytopeData& data, const std::vector<LocalFrame>& frames,
                         const std::optional<NuVector>& nu = std::nullopt);

} // namespace qtg

#endif
