#ifndef QPRIME_VERIFY_HPP
#define QPRIME_VERIFY_HPP

#include <optional>
#include <vector>

#include "qprime/certificate.hpp"
#include "qprime/groebner.hpp"
#include "qprime/minors.hpp"
#include "qprime/permutation.hpp"

namespace qprime {

// Checks that the ordered minor sequence of I_{m,n}(y) is a P-polynormal
// generating sequence: each u_j is Q-homogeneous and
//   u_j x_{ab} - q^{pred} x_{ab} u_j reduces to zero
// modulo the two-sided ideal of its predecessors, where pred is the
// weight-formula exponent.
Certificate verify_polynormal(const Permutation& y, int m, int n, const GBOptions& opts = {});

// Ideal-inclusion incidence over all y <= c^m must equal Bruhat incidence.
Certificate verify_poset(int m, int n, const GBOptions& opts = {});

// gk_dim_quotient(I(y)) == mn - l(y) for all y <= c^m.
Certificate verify_heights(int m, int n, const GBOptions& opts = {});

struct SeparationResult {
    int k = 0;
    std::vector<int> J;
    QMElement minor;
    Certificate cert;
    SeparationResult(int m, int n) : minor(m, n) {}
};

// Separating element for y1 < y2: the minor Delta^q(y1([1,k])) at the first
// k where the prefix sets differ. Certifies membership in I(y2),
// non-membership in I(y1), and q-power normality modulo I(y1) with the
// empirical exponent compared against the weight prediction.
SeparationResult separating_minor(const Permutation& y1, const Permutation& y2, int m, int n,
                                  const GBOptions& opts = {});

// Runs separating_minor over every Bruhat cover pair below c^m.
Certificate verify_separation(int m, int n, const GBOptions& opts = {});

// staged two-sided bases G_0 subset G_1 subset ... for the sequence of y;
// exposed for reuse by the CLI and tests
std::vector<GroebnerBasis> staged_bases(const std::vector<QMElement>& sequence, int m, int n,
                                        const GBOptions& opts);

// DOT rendering of the Bruhat/T-prime poset: nodes y labelled with l(y) and
// |Upsilon(y)|, edges the cover relations
std::string poset_dot(int m, int n);

} // namespace qprime

#endif
