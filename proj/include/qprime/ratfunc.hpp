#ifndef QPRIME_RATFUNC_HPP
#define QPRIME_RATFUNC_HPP

#include <optional>
#include <string>

#include "qprime/laurent.hpp"
#include "qprime/qpoly.hpp"

namespace qprime {

// Element of Q(q) as a reduced fraction of polynomials: the denominator is
// monic, nonzero and coprime to the numerator, so equality is plain
// structural comparison. Negative q-powers live in the denominator.
class RatFunc {
public:
    RatFunc() : den_(QPoly(1L)) {}
    RatFunc(long c) : num_(QPoly(c)), den_(QPoly(1L)) {}
    explicit RatFunc(const Rat& c) : num_(QPoly(c)), den_(QPoly(1L)) {}
    explicit RatFunc(const LaurentPoly& p);
    RatFunc(QPoly num, QPoly den);

    static RatFunc q_power(long k);
    static RatFunc q() { return q_power(1); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }

    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc operator-() const;
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    RatFunc inv() const; // domain_error on zero

    // substitute q = 1; domain_error if the denominator vanishes there
    Rat eval_at_one() const;

    // exactly q^k for an integer k (coefficient 1)
    std::optional<long> as_q_power() const;
    // defined whenever the denominator is a power of q
    std::optional<LaurentPoly> as_laurent() const;

    std::string str() const;

private:
    QPoly num_;
    QPoly den_;
    void normalize();
};

} // namespace qprime

#endif
