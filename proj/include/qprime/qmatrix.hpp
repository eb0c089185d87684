#ifndef QPRIME_QMATRIX_HPP
#define QPRIME_QMATRIX_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qprime/lattice.hpp"
#include "qprime/ratfunc.hpp"

namespace qprime {

// Exponent vector of a PBW monomial in R_q[M_{m,n}]; variables are indexed
// row-major: x_{11}, ..., x_{1n}, x_{21}, ..., x_{mn}.
using Mono = std::vector<uint8_t>;

long mono_degree(const Mono& a);
bool mono_divides(const Mono& a, const Mono& b); // a | b componentwise
Mono mono_lcm(const Mono& a, const Mono& b);
Mono mono_sub(const Mono& a, const Mono& b); // a - b, requires b | a
Mono mono_add(const Mono& a, const Mono& b);

// Monomial order: total degree first, then exponents compared from the
// largest variable x_{mn} down to x_{11}. Admissible, and it makes the
// quadratic correction term of the diagonal relation strictly smaller than
// the monomial it replaces.
int mono_cmp(const Mono& a, const Mono& b); // -1 / 0 / +1

struct MonoGreater {
    bool operator()(const Mono& a, const Mono& b) const { return mono_cmp(a, b) > 0; }
};

struct InhomogeneityReport {
    std::string term_a;
    std::string term_b;
};

// Element of R_q[M_{m,n}] in PBW normal form: map exponent vector -> Q(q)
// coefficient, leading term first. Immutable value semantics.
class QMElement {
public:
    QMElement(int m, int n) : m_(m), n_(n) {}
    static QMElement zero(int m, int n) { return QMElement(m, n); }
    static QMElement unit(int m, int n);
    static QMElement generator(int m, int n, int i, int j);
    static QMElement monomial(int m, int n, const Mono& mono, const RatFunc& c);

    int rows() const { return m_; }
    int cols() const { return n_; }
    int nvars() const { return m_ * n_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<Mono, RatFunc, MonoGreater>& terms() const { return terms_; }
    long degree() const; // max total degree, -1 on zero

    const Mono& leading_mono() const;
    const RatFunc& leading_coeff() const;
    RatFunc coeff(const Mono& mono) const;

    QMElement operator+(const QMElement& o) const;
    QMElement operator-(const QMElement& o) const;
    QMElement operator-() const;
    QMElement operator*(const QMElement& o) const; // PBW normal form of the product
    bool operator==(const QMElement& o) const;
    bool operator!=(const QMElement& o) const { return !(*this == o); }

    QMElement scaled(const RatFunc& c) const;
    QMElement monic() const;

    // torus weight under (t_1..t_{m+n}) . x_{ij} = t_i t_{m+j}^{-1} x_{ij};
    // inhomogeneity is reported as a value, not an error
    std::variant<std::vector<long>, InhomogeneityReport> torus_weight() const;
    // Q-degree: sum of deg_x over the exponent vector, when all terms agree
    std::variant<RootElt, InhomogeneityReport> q_degree() const;

    std::string str() const;

    void add_term(const Mono& mono, const RatFunc& c); // merges, drops zeros

private:
    int m_, n_;
    std::map<Mono, RatFunc, MonoGreater> terms_;
};

// x^a * f with x^a = x11^{a11} ... in PBW order
QMElement mono_mul_left(const Mono& a, const QMElement& f);
QMElement mono_mul_right(const QMElement& f, const Mono& a);

// quantum minor Delta^q_{rows,cols}; the two variants are the two defining
// signed sums and must agree after normalization
enum class MinorVariant { First, Second };
QMElement quantum_minor(int m, int n, const std::vector<int>& rows,
                        const std::vector<int>& cols,
                        MinorVariant variant = MinorVariant::First);

// asserts, for every generator pair, that the straightening rewrite replaces
// a monomial by strictly smaller ones; throws std::logic_error otherwise
void assert_order_admissible(int m, int n);

std::string var_name(int m, int n, int v);

} // namespace qprime

#endif
