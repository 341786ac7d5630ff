#ifndef QTG_RATIONAL_HPP
#define QTG_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace qtg {

/// Arbitrary-precision integer. All core arithmetic is exact; no floating
/// point appears anywhere in the computation pipeline.
using Int = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, kept in canonical form (reduced,
/// denominator positive) by the backend.
using Rat = boost::multiprecision::cpp_rational;

using IntVector = std::vector<Int>;
using QVector = std::vector<Rat>;

inline int sign_of(const Int& x) { return x.sign(); }
inline int sign_of(const Rat& x) { return x.sign(); }

inline bool is_integer(const Rat& x) { return denominator(x) == 1; }

/// Parses "p", "-p" or "p/q" (q > 0 after normalization). Throws SyntaxError
/// on anything else, including a zero denominator.
Rat parse_rational(const std::string& text);

/// Canonical text form: "p" when the value is integral, "p/q" otherwise.
std::string to_string(const Rat& x);

/// Exact q^e for any integer exponent; q must be nonzero when e < 0.
Rat rat_pow(const Rat& q, long exponent);

/// gcd of absolute values; zero for the all-zero vector.
Int gcd_of(const IntVector& v);

/// Divides the vector by the gcd of its entries, preserving signs.
/// The zero vector is returned unchanged.
IntVector make_primitive(const IntVector& v);

bool is_zero_vector(const IntVector& v);

Int dot(const IntVector& a, const IntVector& b);
Rat dot(const IntVector& a, const QVector& b);

} // namespace qtg

#endif
