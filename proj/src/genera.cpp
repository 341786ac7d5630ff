#include "qtg/genera.hpp"

#include "qtg/errors.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace qtg {

YPolynomial::YPolynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {}

Int YPolynomial::evaluate(const Int& y) const {
    Int value = 0;
    for (std::size_t k = coeffs_.size(); k-- > 0;) value = value * y + coeffs_[k];
    return value;
}

YPolynomial YPolynomial::negated() const {
    std::vector<Int> out(coeffs_.size());
    for (std::size_t k = 0; k < coeffs_.size(); ++k) out[k] = -coeffs_[k];
    return YPolynomial(std::move(out));
}

std::string YPolynomial::str() const {
    std::string out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const Int& c = coeffs_[k];
        if (c == 0) continue;
        Int mag = boost::multiprecision::abs(c);
        if (out.empty())
            out += (c < 0) ? "-" : "";
        else
            out += (c < 0) ? " - " : " + ";
        if (k == 0 || mag != 1) out += mag.str();
        if (k >= 1) out += (k == 1) ? "y" : "y^" + std::to_string(k);
    }
    return out.empty() ? "0" : out;
}

YPolynomial chi_y(const std::vector<LocalFrame>& frames, const NuVector& nu) {
    if (frames.empty())
        throw std::logic_error("chi_y: no frames");
    const std::size_t n = frames.front().mu_matrix.rows();
    std::vector<Int> coeffs(n + 1, Int(0));
    for (const LocalFrame& frame : frames) {
        int idx = index_mu(frame, nu);
        coeffs[idx] += (idx % 2 == 0) ? frame.sigma : -frame.sigma;
    }
    return YPolynomial(std::move(coeffs));
}

Int signature(const std::vector<LocalFrame>& frames, const NuVector& nu) {
    Int s = 0;
    for (const LocalFrame& frame : frames) {
        int idx = index_mu(frame, nu);
        s += (idx % 2 == 0) ? frame.sigma : -frame.sigma;
    }
    return s;
}

Int signature_oriented(const std::vector<LocalFrame>& frames, const NuVector& nu) {
    Int s = 0;
    for (const LocalFrame& frame : frames) {
        std::vector<Int> w = weights(frame, nu);
        IntMatrix corrected = frame.mu_matrix;
        for (std::size_t k = 0; k < w.size(); ++k)
            if (w[k] < 0)
                for (std::size_t i = 0; i < corrected.rows(); ++i)
                    corrected.at(i, k) = -corrected.at(i, k);
        s += frame.geom_sign * det(corrected);
    }
    return s;
}

Int todd(const std::vector<LocalFrame>& frames, const NuVector& nu) {
    Int s = 0;
    for (const LocalFrame& frame : frames)
        if (index_mu(frame, nu) == 0) s += frame.sigma;
    return s;
}

Int top_chern(const std::vector<LocalFrame>& frames) {
    Int s = 0;
    for (const LocalFrame& frame : frames) s += frame.sigma;
    return s;
}

long long euler(const std::vector<LocalFrame>& frames) {
    return static_cast<long long>(frames.size());
}

NuInvarianceReport nu_invariance_check(const std::vector<LocalFrame>& frames, int trials) {
    if (trials < 1)
        throw std::logic_error("nu_invariance_check: trials must be >= 1");
    const std::size_t n = frames.front().mu_matrix.rows();

    NuInvarianceReport report;
    report.trials_requested = trials;
    report.expected = chi_y(frames, find_generic_nu(frames));

    // mt19937 output is reduced by hand so the draw sequence does not depend
    // on the standard library's distribution implementation.
    std::mt19937 rng(20240915u);
    long long bound = 4;
    std::set<NuVector> seen;
    long long stale = 0;
    while (report.trials_completed < trials) {
        NuVector nu(n);
        for (std::size_t k = 0; k < n; ++k)
            nu[k] = static_cast<long long>(rng() % (2 * bound + 1)) - bound;
        if (is_zero_vector(nu)) continue;
        nu = make_primitive(nu);
        if (!is_generic(frames, nu) || !seen.insert(nu).second) {
            // Widen the range once fresh candidates become rare; dimension 1
            // has only two primitive directions in total.
            if (++stale > 64 * bound) {
                if (n == 1) break;
                bound *= 2;
                stale = 0;
            }
            continue;
        }
        stale = 0;
        YPolynomial value = chi_y(frames, nu);
        ++report.trials_completed;
        if (!(value == report.expected)) {
            report.ok = false;
            report.first_mismatch_nu = nu;
            report.first_mismatch_value = value;
            break;
        }
    }
    return report;
}

GenusReport genus_report(const PolytopeData& data, const std::vector<LocalFrame>& frames,
                         const std::optional<NuVector>& nu) {
    NuVector used = nu ? *nu : find_generic_nu(frames);
    if (nu) {
        if (gcd_of(used) != 1)
            throw NonGenericNuError("nu must be a primitive integer vector");
        require_generic(frames, used);
    }

    GenusReport report;
    report.chi = chi_y(frames, used);
    report.signature = signature(frames, used);
    report.todd = todd(frames, used);
    report.top_chern = top_chern(frames);
    report.euler = euler(frames);
    report.f_vector = data.f;
    report.h_vector = data.h;
    report.nu_used = used;

    if (report.chi.evaluate(1) != report.signature ||
        report.chi.evaluate(0) != report.todd ||
        report.chi.evaluate(-1) != report.top_chern ||
        signature_oriented(frames, used) != report.signature)
        throw std::logic_error("genus specialization identities failed");
    return report;
}

} // namespace qtg
