#include "qprime/ratfunc.hpp"

#include <sstream>
#include <stdexcept>

namespace qprime {

RatFunc::RatFunc(const LaurentPoly& p) {
    long shift = 0;
    num_ = p.cleared(shift);
    den_ = QPoly::q_power(shift);
    // already reduced: the numerator has valuation 0 whenever shift > 0
}

RatFunc::RatFunc(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
    normalize();
}

RatFunc RatFunc::q_power(long k) {
    RatFunc r;
    if (k >= 0) {
        r.num_ = QPoly::q_power(k);
        r.den_ = QPoly(1L);
    } else {
        r.num_ = QPoly(1L);
        r.den_ = QPoly::q_power(-k);
    }
    return r;
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = QPoly(1L);
        return;
    }
    QPoly g = QPoly::gcd(num_, den_);
    if (!g.is_one()) {
        QPoly quot, rem;
        QPoly::divrem(num_, g, quot, rem);
        num_ = quot;
        QPoly::divrem(den_, g, quot, rem);
        den_ = quot;
    }
    if (!den_.is_monic()) {
        Rat lc = den_.leading_coeff();
        num_ = num_.scaled(1 / lc);
        den_ = den_.scaled(1 / lc);
    }
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    RatFunc r;
    if (den_ == o.den_) {
        r.num_ = num_ + o.num_;
        r.den_ = den_;
    } else {
        QPoly g = QPoly::gcd(den_, o.den_);
        QPoly db, dd, rem;
        QPoly::divrem(den_, g, db, rem);
        QPoly::divrem(o.den_, g, dd, rem);
        r.num_ = num_ * dd + o.num_ * db;
        r.den_ = den_ * dd;
    }
    r.normalize();
    return r;
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
    if (is_zero() || o.is_zero()) return RatFunc();
    QPoly g1 = QPoly::gcd(num_, o.den_);
    QPoly g2 = QPoly::gcd(o.num_, den_);
    QPoly a = num_, b = den_, c = o.num_, d = o.den_, rem;
    if (!g1.is_one()) {
        QPoly::divrem(num_, g1, a, rem);
        QPoly::divrem(o.den_, g1, d, rem);
    }
    if (!g2.is_one()) {
        QPoly::divrem(o.num_, g2, c, rem);
        QPoly::divrem(den_, g2, b, rem);
    }
    RatFunc r;
    r.num_ = a * c;
    r.den_ = b * d;
    if (!r.den_.is_monic()) {
        Rat lc = r.den_.leading_coeff();
        r.num_ = r.num_.scaled(1 / lc);
        r.den_ = r.den_.scaled(1 / lc);
    }
    return r;
}

RatFunc RatFunc::operator/(const RatFunc& o) const { return *this * o.inv(); }

RatFunc RatFunc::operator-() const {
    RatFunc r(*this);
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::inv() const {
    if (is_zero()) throw std::domain_error("RatFunc::inv: division by zero");
    RatFunc r;
    r.num_ = den_;
    r.den_ = num_;
    Rat lc = r.den_.leading_coeff();
    if (lc != 1) {
        r.num_ = r.num_.scaled(1 / lc);
        r.den_ = r.den_.scaled(1 / lc);
    }
    return r;
}

Rat RatFunc::eval_at_one() const {
    Rat d = den_.eval_at_one();
    if (d == 0) throw std::domain_error("RatFunc::eval_at_one: pole at q = 1");
    return num_.eval_at_one() / d;
}

std::optional<long> RatFunc::as_q_power() const {
    if (!num_.is_monomial() || !den_.is_monomial()) return std::nullopt;
    if (num_.leading_coeff() != 1) return std::nullopt;
    return num_.degree() - den_.degree();
}

std::optional<LaurentPoly> RatFunc::as_laurent() const {
    if (is_zero()) return LaurentPoly();
    if (!den_.is_monomial() || den_.leading_coeff() != 1) return std::nullopt;
    return LaurentPoly::from_poly(num_, den_.degree());
}

std::string RatFunc::str() const {
    auto l = as_laurent();
    if (l) return l->str();
    std::ostringstream os;
    os << "(" << num_.str() << ")/(" << den_.str() << ")";
    return os.str();
}

} // namespace qprime
