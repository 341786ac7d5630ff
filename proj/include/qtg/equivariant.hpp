#ifndef QTG_EQUIVARIANT_HPP
#define QTG_EQUIVARIANT_HPP

#include "qtg/char_pair.hpp"
#include "qtg/genera.hpp"
#include "qtg/rational.hpp"

#include <string>
#include <vector>

namespace qtg {

/// Polynomial in y with exact rational coefficients, as produced by the
/// fixed-point sum below before rigidity forces the coefficients integral.
class QYPolynomial {
public:
    explicit QYPolynomial(std::vector<Rat> coeffs);

    const std::vector<Rat>& coefficients() const { return coeffs_; }
    std::size_t size() const { return coeffs_.size(); }
    const Rat& operator[](std::size_t k) const { return coeffs_[k]; }

    bool equals(const YPolynomial& p) const;
    std::string str() const;

    bool operator==(const QYPolynomial&) const = default;

private:
    std::vector<Rat> coeffs_;
};

/// Fixed-point evaluation of the equivariant chi_y-genus at a rational
/// circle parameter q: the sum over vertices of
///   sigma(p) * prod_k (1 + y q^{w_k}) / (1 - q^{w_k}),
/// with w_k the circle-action weights at the vertex. Exact in q; negative
/// weights invert q exactly. Requires q != 0 and |q| != 1 so that no
/// denominator 1 - q^w can vanish (PoleAtQ otherwise).
QYPolynomial equivariant_chi_y_at(const std::vector<LocalFrame>& frames, const NuVector& nu,
                                  const Rat& q);

struct RigiditySample {
    Rat q;
    QYPolynomial value{std::vector<Rat>{}};
    bool matches = false;
};

struct RigidityReport {
    bool ok = true;
    YPolynomial expected{std::vector<Int>{}};
    std::vector<RigiditySample> samples;
};

/// Evaluates the equivariant sum at each sample point and checks that it
/// reproduces the combinatorial chi_y exactly, coefficient by coefficient
/// (in particular the y = 0 coefficient equals the Todd genus at every
/// sample). An empty sample list passes vacuously.
RigidityReport rigidity_check(const std::vector<LocalFrame>& frames, const NuVector& nu,
                              const std::vector<Rat>& samples);

} // namespace qtg

#endif
