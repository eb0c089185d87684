#ifndef QPRIME_MINORS_HPP
#define QPRIME_MINORS_HPP

#include <vector>

#include "qprime/permutation.hpp"
#include "qprime/qmatrix.hpp"

namespace qprime {

// Index datum of the minor Delta^q(J): the subset J of [1, m+n] together with
// the derived row/column sets. Both derived sets are empty exactly when
// J = c^m([1,k]).
struct MinorIndex {
    std::vector<int> J;
    int k = 0;
    std::vector<int> rows; // subset of [1,m]
    std::vector<int> cols; // subset of [1,n]
};

// componentwise order on equal-size sorted subsets
bool subset_leq(const std::vector<int>& A, const std::vector<int>& B);

// all J with 1 <= |J| = k <= m+n-1, J <= c^m([1,k]) and NOT J >= y([1,k]),
// sorted by (k, lexicographic)
std::vector<std::vector<int>> upsilon(const Permutation& y, int m, int n);

// row/column sets of Delta^q(J); precondition J <= c^m([1,|J|])
MinorIndex delta_index(const std::vector<int>& J, int m, int n);

// materialized quantum minor of an index (throws on the empty minor)
QMElement delta_minor(const MinorIndex& idx, int m, int n);

// the ordered generating sequence of Theorem-style minors for I_{m,n}(y);
// order is (|J|, lex), which refines the componentwise subset order
std::vector<std::pair<MinorIndex, QMElement>> generating_sequence(const Permutation& y, int m,
                                                                  int n, bool dedup = false);

// exponent of q in the predicted normality scalar of Delta^q(J) against the
// generator x_{ab}: < Wt(eta_J) - c^m(omega_{|J|}), deg x_{ab} >
long predicted_scalar(const std::vector<int>& J, int a, int b, int m, int n);

} // namespace qprime

#endif
