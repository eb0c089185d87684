#ifndef QPRIME_RAT_HPP
#define QPRIME_RAT_HPP

#include <gmpxx.h>

namespace qprime {

// Arbitrary-precision rational scalar. Everything downstream assumes exact
// arithmetic; there is no floating point anywhere in this library.
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

} // namespace qprime

#endif
