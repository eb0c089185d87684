#ifndef QPRIME_EXTERIOR_HPP
#define QPRIME_EXTERIOR_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "qprime/certificate.hpp"
#include "qprime/permutation.hpp"
#include "qprime/ratfunc.hpp"

namespace qprime {

// Vector in one graded component of the quantum exterior algebra
// Lambda_q(K^N). Basis vectors v_J are indexed by subsets of [1,N] stored as
// bitmasks (bit t-1 <-> index t); all subsets in one vector share the same
// cardinality.
class ExtVector {
public:
    explicit ExtVector(int N) : N_(N) {}
    static ExtVector basis(int N, uint32_t mask);
    static ExtVector basis(int N, const std::vector<int>& subset);

    int dim_ambient() const { return N_; }
    bool is_zero() const { return t_.empty(); }
    const std::map<uint32_t, RatFunc, std::greater<uint32_t>>& terms() const { return t_; }
    RatFunc coeff(uint32_t mask) const;
    int grade() const; // -1 on zero

    void add_term(uint32_t mask, const RatFunc& c);
    ExtVector operator+(const ExtVector& o) const;
    ExtVector operator-(const ExtVector& o) const;
    ExtVector scaled(const RatFunc& c) const;
    bool operator==(const ExtVector& o) const { return N_ == o.N_ && t_ == o.t_; }
    bool operator!=(const ExtVector& o) const { return !(*this == o); }

    std::string str() const;

private:
    int N_;
    std::map<uint32_t, RatFunc, std::greater<uint32_t>> t_;
};

uint32_t mask_of(const std::vector<int>& subset);
std::vector<int> subset_of(uint32_t mask);

// normal form of a word v_{w_1} ... v_{w_l}: zero on repeats, otherwise a
// (-q)-power times the sorted wedge monomial
ExtVector ext_normal_form(int N, const std::vector<int>& word);

enum class GenKind { XPlus, XMinus, K, KInv };

// U_q(sl_N) generator action extended to wedge monomials through the
// coproduct rule along v_J = v_{j_1} (rest)
ExtVector act_generator(GenKind g, int i, const ExtVector& v);

// T_i v = sum (-1)^m q^{m-ln} (X+)^{(l)} (X-)^{(m)} (X+)^{(n)} v over
// -l+m-n = <mu, alpha_i^vee>, truncated at nilpotency
ExtVector braid_T(int i, const ExtVector& v);
// composition along a reduced word, rightmost letter acting first
ExtVector braid_Tw(int N, const std::vector<int>& word, const ExtVector& v);
ExtVector braid_Tw(const Permutation& w, const ExtVector& v);

// Sparse operator on the grade-k component.
class LinOperator {
public:
    LinOperator(int N, int k) : N_(N), k_(k) {}
    static LinOperator identity(int N, int k);
    static LinOperator generator(int N, int k, GenKind g, int i);

    int grade() const { return k_; }
    ExtVector apply(const ExtVector& v) const;
    ExtVector column(uint32_t mask) const;
    LinOperator compose(const LinOperator& rhs) const; // this after rhs
    LinOperator operator+(const LinOperator& o) const;
    LinOperator scaled(const RatFunc& c) const;
    bool operator==(const LinOperator& o) const;

    std::string to_json() const; // dense matrix dump for debugging

private:
    int N_, k_;
    std::map<uint32_t, ExtVector> col_;
    friend LinOperator tau_rootvector(int N, int k, int i, int j);
};

// operator of tau(Y_{ij}) on the grade-k component; base case
// tau(Y_{i,i+1}) = X_i^+, recursion reverses the composition order of
// Y_{ij} = Y_{i,j-1} Y_{j-1,j} - q^{-1} Y_{j-1,j} Y_{i,j-1}
LinOperator tau_rootvector(int N, int k, int i, int j);

// support of U_+ T_w v_{[1,k]}; equals { J : J <= w([1,k]) }
std::vector<std::vector<int>> demazure_span(const Permutation& w, int k);

struct PerpResult {
    bool lhs = false; // eta_J annihilates V_w(omega_k) cap U_- T_y v_{[1,k]}
    bool rhs = false; // J >= y([1,k]) fails
};

// both sides of the orthogonality criterion, the left one by exact linear
// algebra over Q(q)
PerpResult perp_test(const std::vector<int>& J, const Permutation& y, const Permutation& w, int k);

// verification suites
Certificate ext_ac_suite(int N);
Certificate ext_uq_relations_suite(int N);
Certificate ext_braid_basics_suite();
Certificate ext_extreme_demazure_suite(int N);
Certificate ext_inter_suite(int m, int n);

} // namespace qprime

#endif
