#ifndef QPRIME_GROEBNER_HPP
#define QPRIME_GROEBNER_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "qprime/qmatrix.hpp"

namespace qprime {

enum class IdealKind { Left, TwoSided };

struct GBOptions {
    // 0 picks the default guard 2*(m+n); remainders above the guard degree
    // abort completion with the partial state attached
    int degree_guard = 0;
};

struct GBMeta {
    long pairs_processed = 0;
    long max_degree = 0;
    bool truncated = false;
};

class GroebnerBasis;

class GuardExceeded : public std::runtime_error {
public:
    GuardExceeded(std::string what, std::vector<QMElement> partial, GBMeta meta)
        : std::runtime_error(std::move(what)), partial_elements(std::move(partial)), meta(meta) {}
    std::vector<QMElement> partial_elements;
    GBMeta meta;
};

// Inter-reduced monic Groebner basis of a left or two-sided ideal of
// R_q[M_{m,n}] under the fixed deg-then-msb-lex order. Construction is
// deterministic: normal pair selection (smallest lcm, ties by insertion
// order), so bases are byte-for-byte reproducible.
class GroebnerBasis {
public:
    static GroebnerBasis left(int m, int n, const std::vector<QMElement>& gens,
                              const GBOptions& opts = {});
    static GroebnerBasis two_sided(int m, int n, const std::vector<QMElement>& gens,
                                   const GBOptions& opts = {});
    // completes an existing two-sided basis with extra generators; used for
    // the staged ideals of polynormal verification
    GroebnerBasis extended_with(const std::vector<QMElement>& more_gens) const;

    int rows() const { return m_; }
    int cols() const { return n_; }
    IdealKind kind() const { return kind_; }
    const std::vector<QMElement>& elements() const { return elems_; }
    const GBMeta& meta() const { return meta_; }
    static std::string order_tag() { return "deg-then-msb-lex"; }

    // remainder with no monomial divisible by a leading monomial of the basis
    QMElement normal_form(const QMElement& u) const;
    bool contains(const QMElement& u) const;

    // growth degree of the standard monomials: the largest variable subset
    // that supports no leading monomial of the basis
    int gk_dim_quotient() const;

    std::string to_json() const;

private:
    GroebnerBasis(int m, int n, IdealKind kind, GBOptions opts)
        : m_(m), n_(n), kind_(kind), opts_(opts) {}
    int m_, n_;
    IdealKind kind_;
    GBOptions opts_;
    std::vector<QMElement> elems_;
    GBMeta meta_;

    int guard() const { return opts_.degree_guard > 0 ? opts_.degree_guard : 2 * (m_ + n_); }
    // the first `trusted` generators are known to be an inter-reduced
    // completed basis of this kind: pairs among them and (for two-sided)
    // their right products are skipped
    void complete(std::vector<QMElement> gens, size_t trusted = 0);
    void interreduce();
};

// full reduction of u modulo the (monic) list basis; independent of
// GroebnerBasis so tests can drive it directly
QMElement reduce_full(const QMElement& u, const std::vector<QMElement>& basis);

} // namespace qprime

#endif
