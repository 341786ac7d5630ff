#include "qtg/equivariant.hpp"

#include "qtg/errors.hpp"

#include <stdexcept>

namespace qtg {

QYPolynomial::QYPolynomial(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {}

bool QYPolynomial::equals(const YPolynomial& p) const {
    if (coeffs_.size() != p.size()) return false;
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        if (coeffs_[k] != Rat(p[k])) return false;
    return true;
}

std::string QYPolynomial::str() const {
    std::string out = "[";
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (k) out += ", ";
        out += to_string(coeffs_[k]);
    }
    return out + "]";
}

QYPolynomial equivariant_chi_y_at(const std::vector<LocalFrame>& frames, const NuVector& nu,
                                  const Rat& q) {
    if (frames.empty())
        throw std::logic_error("equivariant_chi_y_at: no frames");
    if (q == 0 || q == 1 || q == -1)
        throw PoleAtQError("q = " + to_string(q) +
                           " is excluded: some denominator 1 - q^w vanishes");
    const std::size_t n = frames.front().mu_matrix.rows();

    std::vector<Rat> total(n + 1, Rat(0));
    for (const LocalFrame& frame : frames) {
        std::vector<Int> w = weights(frame, nu);

        // numerator prod_k (1 + y q^{w_k}) expanded in y, denominator
        // prod_k (1 - q^{w_k}) collected as a scalar
        std::vector<Rat> num{Rat(1)};
        Rat den(1);
        for (const Int& wk : w) {
            Rat qw = rat_pow(q, static_cast<long>(wk));
            if (qw == 1)
                throw PoleAtQError("denominator vanishes at weight " + wk.str());
            den *= Rat(1) - qw;
            std::vector<Rat> next(num.size() + 1, Rat(0));
            for (std::size_t k = 0; k < num.size(); ++k) {
                next[k] += num[k];
                next[k + 1] += num[k] * qw;
            }
            num = std::move(next);
        }
        for (std::size_t k = 0; k <= n; ++k)
            total[k] += Rat(frame.sigma) * num[k] / den;
    }
    return QYPolynomial(std::move(total));
}

RigidityReport rigidity_check(const std::vector<LocalFrame>& frames, const NuVector& nu,
                              const std::vector<Rat>& samples) {
    RigidityReport report;
    report.expected = chi_y(frames, nu);
    const Int todd_value = todd(frames, nu);
    for (const Rat& q : samples) {
        RigiditySample sample;
        sample.q = q;
        sample.value = equivariant_chi_y_at(frames, nu, q);
        sample.matches = sample.value.equals(report.expected) &&
                         sample.value[0] == Rat(todd_value);
        if (!sample.matches) report.ok = false;
        report.samples.push_back(std::move(sample));
    }
    return report;
}

} // namespace qtg
