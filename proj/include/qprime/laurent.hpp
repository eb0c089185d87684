#ifndef QPRIME_LAURENT_HPP
#define QPRIME_LAURENT_HPP

#include <map>
#include <string>

#include "qprime/qpoly.hpp"
#include "qprime/rat.hpp"

namespace qprime {

// Laurent polynomial in q over the rationals: finite map exponent -> coefficient.
// Zero coefficients are never stored.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(const Rat& c);
    explicit LaurentPoly(long c);
    static LaurentPoly q_power(long k); // q^k, any integer k

    const std::map<long, Rat>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool is_one() const;
    long min_exp() const; // 0 on zero
    long max_exp() const;

    void add_term(long e, const Rat& c);

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    bool operator==(const LaurentPoly& o) const { return t_ == o.t_; }
    bool operator!=(const LaurentPoly& o) const { return t_ != o.t_; }

    Rat eval_at_one() const;

    // numerator with all negative powers cleared: *this = poly / q^shift
    QPoly cleared(long& shift) const;
    static LaurentPoly from_poly(const QPoly& p, long shift = 0);

    std::string str() const; // e.g. "q^2 + 1 + q^-2"

private:
    std::map<long, Rat> t_;
};

// exact division; throws std::domain_error when b does not divide a
LaurentPoly laurent_div_exact(const LaurentPoly& a, const LaurentPoly& b);

// symmetric quantum integer [n]_{q^d} = (q^{dn} - q^{-dn})/(q^d - q^{-d})
LaurentPoly qint(long n, long d = 1);
// [n]_{q^d}!
LaurentPoly qfactorial(long n, long d = 1);
// Gaussian binomial [n choose k]_{q^d}; requires 0 <= k <= n
LaurentPoly gauss_binom(long n, long k, long d = 1);

} // namespace qprime

#endif
