#include "qprime/qpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace qprime {

namespace {
const Rat kZero = 0;
}

QPoly::QPoly(const Rat& c) {
    if (c != 0) c_.push_back(c);
}

QPoly::QPoly(long c) {
    if (c != 0) c_.push_back(Rat(c));
}

QPoly::QPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

QPoly QPoly::q_power(long k) {
    if (k < 0) throw std::invalid_argument("QPoly::q_power: negative exponent");
    QPoly p;
    p.c_.assign(static_cast<size_t>(k) + 1, Rat(0));
    p.c_.back() = 1;
    return p;
}

void QPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

bool QPoly::is_one() const { return c_.size() == 1 && c_[0] == 1; }

const Rat& QPoly::coeff(long i) const {
    if (i < 0 || i >= static_cast<long>(c_.size())) return kZero;
    return c_[static_cast<size_t>(i)];
}

const Rat& QPoly::leading_coeff() const {
    if (is_zero()) return kZero;
    return c_.back();
}

long QPoly::valuation() const {
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) return static_cast<long>(i);
    return 0;
}

bool QPoly::is_monomial() const {
    if (is_zero()) return false;
    for (size_t i = 0; i + 1 < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

bool QPoly::is_monic() const { return !is_zero() && c_.back() == 1; }

QPoly QPoly::operator+(const QPoly& o) const {
    QPoly r;
    r.c_.resize(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] += o.c_[i];
    r.trim();
    return r;
}

QPoly QPoly::operator-(const QPoly& o) const {
    QPoly r;
    r.c_.resize(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] -= o.c_[i];
    r.trim();
    return r;
}

QPoly QPoly::operator*(const QPoly& o) const {
    if (is_zero() || o.is_zero()) return QPoly();
    QPoly r;
    r.c_.assign(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j] == 0) continue;
            r.c_[i + j] += c_[i] * o.c_[j];
        }
    }
    r.trim();
    return r;
}

QPoly QPoly::operator-() const {
    QPoly r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

QPoly QPoly::scaled(const Rat& c) const {
    if (c == 0) return QPoly();
    QPoly r(*this);
    for (auto& x : r.c_) x *= c;
    return r;
}

QPoly QPoly::shifted(long k) const {
    if (k < 0) throw std::invalid_argument("QPoly::shifted: negative shift");
    if (is_zero() || k == 0) return k == 0 ? *this : QPoly();
    QPoly r;
    r.c_.assign(static_cast<size_t>(k), Rat(0));
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
}

QPoly QPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(1 / leading_coeff());
}

void QPoly::divrem(const QPoly& a, const QPoly& b, QPoly& quot, QPoly& rem) {
    if (b.is_zero()) throw std::domain_error("QPoly::divrem: division by zero");
    rem = a;
    quot = QPoly();
    if (a.degree() < b.degree()) return;
    quot.c_.assign(static_cast<size_t>(a.degree() - b.degree()) + 1, Rat(0));
    const Rat& lc = b.leading_coeff();
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        long k = rem.degree() - b.degree();
        Rat f = rem.leading_coeff() / lc;
        quot.c_[static_cast<size_t>(k)] = f;
        // rem -= f * q^k * b
        for (size_t i = 0; i < b.c_.size(); ++i)
            rem.c_[static_cast<size_t>(k) + i] -= f * b.c_[i];
        rem.trim();
    }
    quot.trim();
}

QPoly QPoly::gcd(const QPoly& a, const QPoly& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    // monomials and constants are the common cases in coefficient arithmetic
    if (a.is_monomial() || b.is_monomial()) {
        long v = std::min(a.valuation(), b.valuation());
        return QPoly::q_power(v);
    }
    QPoly f = a.monic(), g = b.monic();
    while (!g.is_zero()) {
        QPoly quot, rem;
        divrem(f, g, quot, rem);
        f = g;
        g = rem.is_zero() ? rem : rem.monic();
    }
    return f;
}

Rat QPoly::eval(const Rat& x) const {
    Rat acc = 0;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

Rat QPoly::eval_at_one() const {
    Rat acc = 0;
    for (const auto& c : c_) acc += c;
    return acc;
}

std::string QPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        const Rat& c = c_[i];
        if (c == 0) continue;
        Rat abs = c < 0 ? Rat(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (i == 0) {
            os << abs.get_str();
        } else {
            if (abs != 1) os << abs.get_str() << " ";
            os << "q";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

} // namespace qprime
