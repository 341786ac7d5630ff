#include "qtg/rational.hpp"

#include "qtg/errors.hpp"

#include <cctype>
#include <cstdlib>
#include <stdexcept>

namespace qtg {

namespace {

bool valid_integer_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

} // namespace

Rat parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!valid_integer_token(text))
            throw SyntaxError("invalid rational literal: \"" + text + "\"");
        return Rat(Int(text));
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (!valid_integer_token(num) || !valid_integer_token(den))
        throw SyntaxError("invalid rational literal: \"" + text + "\"");
    Int n(num);
    Int d(den);
    if (d == 0)
        throw SyntaxError("zero denominator in rational literal: \"" + text + "\"");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    return Rat(n, d);
}

std::string to_string(const Rat& x) {
    std::string out = numerator(x).str();
    if (denominator(x) != 1) {
        out += '/';
        out += denominator(x).str();
    }
    return out;
}

Rat rat_pow(const Rat& q, long exponent) {
    if (exponent == 0) return Rat(1);
    Rat base = q;
    unsigned long e;
    if (exponent < 0) {
        if (q == 0) throw PoleAtQError("cannot invert q = 0");
        base = Rat(1) / q;
        e = static_cast<unsigned long>(-(exponent + 1)) + 1;
    } else {
        e = static_cast<unsigned long>(exponent);
    }
    Rat result(1);
    while (e > 0) {
        if (e & 1u) result *= base;
        base *= base;
        e >>= 1u;
    }
    return result;
}

Int gcd_of(const IntVector& v) {
    Int g = 0;
    for (const Int& x : v) g = boost::multiprecision::gcd(g, x);
    return boost::multiprecision::abs(g);
}

IntVector make_primitive(const IntVector& v) {
    Int g = gcd_of(v);
    if (g <= 1) return v;
    IntVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
    return out;
}

bool is_zero_vector(const IntVector& v) {
    for (const Int& x : v)
        if (x != 0) return false;
    return true;
}

Int dot(const IntVector& a, const IntVector& b) {
    if (a.size() != b.size())
        throw std::logic_error("dot: length mismatch");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rat dot(const IntVector& a, const QVector& b) {
    if (a.size() != b.size())
        throw std::logic_error("dot: length mismatch");
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
    return s;
}

} // namespace qtg
