#pragma once

#include <gmpxx.h>
#include <string>

namespace sqz {

/// Exact rational number, always reduced with positive denominator.
using Rational = mpq_class;

inline Rational make_rational(long long numerator, long long denominator) {
    Rational q(static_cast<long>(numerator), static_cast<long>(denominator));
    q.canonicalize();
    return q;
}

/// "p/q" with the denominator always written, e.g. "0/1", "4/19".
inline std::string rational_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

} // namespace sqz
