#include "qprime/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace qprime {

LaurentPoly::LaurentPoly(const Rat& c) {
    if (c != 0) t_[0] = c;
}

LaurentPoly::LaurentPoly(long c) {
    if (c != 0) t_[0] = Rat(c);
}

LaurentPoly LaurentPoly::q_power(long k) {
    LaurentPoly p;
    p.t_[k] = 1;
    return p;
}

bool LaurentPoly::is_one() const {
    return t_.size() == 1 && t_.begin()->first == 0 && t_.begin()->second == 1;
}

long LaurentPoly::min_exp() const { return t_.empty() ? 0 : t_.begin()->first; }
long LaurentPoly::max_exp() const { return t_.empty() ? 0 : t_.rbegin()->first; }

void LaurentPoly::add_term(long e, const Rat& c) {
    if (c == 0) return;
    auto it = t_.find(e);
    if (it == t_.end()) {
        t_[e] = c;
    } else {
        it->second += c;
        if (it->second == 0) t_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r(*this);
    for (const auto& [e, c] : o.t_) r.add_term(e, c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r(*this);
    for (const auto& [e, c] : o.t_) r.add_term(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [e1, c1] : t_)
        for (const auto& [e2, c2] : o.t_) r.add_term(e1 + e2, c1 * c2);
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : t_) r.t_[e] = -c;
    return r;
}

Rat LaurentPoly::eval_at_one() const {
    Rat acc = 0;
    for (const auto& [e, c] : t_) acc += c;
    return acc;
}

QPoly LaurentPoly::cleared(long& shift) const {
    shift = min_exp() < 0 ? -min_exp() : 0;
    std::vector<Rat> coeffs(static_cast<size_t>(max_exp() + shift) + 1, Rat(0));
    for (const auto& [e, c] : t_) coeffs[static_cast<size_t>(e + shift)] = c;
    if (t_.empty()) coeffs.clear();
    return QPoly(std::move(coeffs));
}

LaurentPoly LaurentPoly::from_poly(const QPoly& p, long shift) {
    LaurentPoly r;
    for (long i = 0; i <= p.degree(); ++i) r.add_term(i - shift, p.coeff(i));
    return r;
}

std::string LaurentPoly::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        long e = it->first;
        const Rat& c = it->second;
        Rat abs = c < 0 ? Rat(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (e == 0) {
            os << abs.get_str();
        } else {
            if (abs != 1) os << abs.get_str() << " ";
            os << "q";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

LaurentPoly laurent_div_exact(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw std::domain_error("laurent_div_exact: division by zero");
    if (a.is_zero()) return LaurentPoly();
    long sa = 0, sb = 0;
    QPoly pa = a.cleared(sa), pb = b.cleared(sb);
    QPoly quot, rem;
    QPoly::divrem(pa, pb, quot, rem);
    if (!rem.is_zero()) throw std::domain_error("laurent_div_exact: not divisible");
    return LaurentPoly::from_poly(quot, sa - sb);
}

LaurentPoly qint(long n, long d) {
    // [n] = q^{d(n-1)} + q^{d(n-3)} + ... + q^{-d(n-1)}
    LaurentPoly r;
    for (long e = n - 1; e >= -(n - 1); e -= 2) r.add_term(d * e, Rat(1));
    return r;
}

LaurentPoly qfactorial(long n, long d) {
    LaurentPoly r = LaurentPoly(1L);
    for (long i = 2; i <= n; ++i) r = r * qint(i, d);
    return r;
}

LaurentPoly gauss_binom(long n, long k, long d) {
    if (k < 0 || k > n) throw std::domain_error("gauss_binom: k out of range");
    // stepwise exact division: prod_{i=1..k} [n-k+i]/[i] stays a Laurent
    // polynomial at every step (it equals the binomial [n-k+i choose i])
    LaurentPoly r = LaurentPoly(1L);
    for (long i = 1; i <= k; ++i) {
        r = r * qint(n - k + i, d);
        r = laurent_div_exact(r, qint(i, d));
    }
    return r;
}

} // namespace qprime
