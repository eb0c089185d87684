#ifndef QPRIME_QPOLY_HPP
#define QPRIME_QPOLY_HPP

#include <string>
#include <vector>

#include "qprime/rat.hpp"

namespace qprime {

// Dense univariate polynomial in q over the rationals. Coefficient of q^i is
// stored at index i; the vector never carries trailing zeros, so the zero
// polynomial has an empty coefficient vector and degree() == -1.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(const Rat& c);
    explicit QPoly(long c);
    QPoly(std::vector<Rat> coeffs);

    static QPoly q_power(long k); // q^k, k >= 0

    bool is_zero() const { return c_.empty(); }
    bool is_one() const;
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const Rat& coeff(long i) const;
    const Rat& leading_coeff() const;
    // exponent of the lowest nonzero term (0 for the zero polynomial)
    long valuation() const;
    bool is_monomial() const;
    bool is_monic() const;

    QPoly operator+(const QPoly& o) const;
    QPoly operator-(const QPoly& o) const;
    QPoly operator*(const QPoly& o) const;
    QPoly operator-() const;
    bool operator==(const QPoly& o) const { return c_ == o.c_; }
    bool operator!=(const QPoly& o) const { return c_ != o.c_; }

    QPoly scaled(const Rat& c) const;
    QPoly shifted(long k) const; // multiply by q^k, k >= 0
    QPoly monic() const;

    // division with remainder; divisor must be nonzero
    static void divrem(const QPoly& a, const QPoly& b, QPoly& quot, QPoly& rem);
    // monic gcd; gcd(0,0) = 0
    static QPoly gcd(const QPoly& a, const QPoly& b);

    Rat eval(const Rat& x) const;
    Rat eval_at_one() const;

    std::string str() const; // e.g. "q^2 - 1"

private:
    std::vector<Rat> c_;
    void trim();
};

} // namespace qprime

#endif
