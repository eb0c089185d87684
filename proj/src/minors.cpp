#include "qprime/minors.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "qprime/lattice.hpp"

namespace qprime {

bool subset_leq(const std::vector<int>& A, const std::vector<int>& B) {
    if (A.size() != B.size()) throw std::invalid_argument("subset_leq: size mismatch");
    for (size_t l = 0; l < A.size(); ++l)
        if (A[l] > B[l]) return false;
    return true;
}

namespace {

// all k-subsets of [1,N] in lexicographic order
void k_subsets(int N, int k, const std::function<void(const std::vector<int>&)>& emit) {
    std::vector<int> cur(static_cast<size_t>(k));
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == k) {
            emit(cur);
            return;
        }
        for (int v = start; v <= N - (k - depth) + 1; ++v) {
            cur[static_cast<size_t>(depth)] = v;
            rec(v + 1, depth + 1);
        }
    };
    rec(1, 0);
}

} // namespace

std::vector<std::vector<int>> upsilon(const Permutation& y, int m, int n) {
    const int N = m + n;
    if (y.size() != N) throw std::invalid_argument("upsilon: permutation size must be m+n");
    auto [cm, word] = coxeter_cm(m, n);
    if (!bruhat_leq(y, cm)) throw std::invalid_argument("upsilon: y is not below c^m in Bruhat order");
    std::vector<std::vector<int>> out;
    for (int k = 1; k <= N - 1; ++k) {
        std::vector<int> top = prefix_set(cm, k);
        std::vector<int> bottom = prefix_set(y, k);
        k_subsets(N, k, [&](const std::vector<int>& J) {
            if (!subset_leq(J, top)) return;
            if (subset_leq(bottom, J)) return; // J >= y([1,k]) excluded
            out.push_back(J);
        });
    }
    return out;
}

MinorIndex delta_index(const std::vector<int>& J, int m, int n) {
    const int N = m + n;
    const int k = static_cast<int>(J.size());
    if (k < 1 || k > N) throw std::invalid_argument("delta_index: |J| out of range");
    std::vector<int> Js = J;
    std::sort(Js.begin(), Js.end());
    auto [cm, word] = coxeter_cm(m, n);
    std::vector<int> top = prefix_set(cm, k);
    if (!subset_leq(Js, top)) throw std::invalid_argument("delta_index: J <= c^m([1,k]) violated");

    std::vector<int> p1, p2; // J cap [1,m], J cap [m+1,m+n]
    for (int v : Js) (v <= m ? p1 : p2).push_back(v);

    MinorIndex idx;
    idx.J = Js;
    idx.k = k;

    // rows: w_m^o applied to p1(J) minus p1(c^m([1,k])) = [1, max(k-n,0)]
    const int cut = std::max(k - n, 0);
    for (int v : p1) {
        if (v <= cut) continue;
        idx.rows.push_back(m + 1 - v);
    }
    std::sort(idx.rows.begin(), idx.rows.end());

    // cols: (p2(c^m([1,k])) \ p2(J)) - m with p2(c^m([1,k])) = [m+1, m+min(k,n)]
    const int hi = m + std::min(k, n);
    for (int v = m + 1; v <= hi; ++v) {
        if (std::find(p2.begin(), p2.end(), v) != p2.end()) continue;
        idx.cols.push_back(v - m);
    }
    if (idx.rows.size() != idx.cols.size())
        throw std::logic_error("delta_index: row/column cardinality mismatch");
    return idx;
}

QMElement delta_minor(const MinorIndex& idx, int m, int n) {
    return quantum_minor(m, n, idx.rows, idx.cols);
}

std::vector<std::pair<MinorIndex, QMElement>> generating_sequence(const Permutation& y, int m,
                                                                  int n, bool dedup) {
    std::vector<std::pair<MinorIndex, QMElement>> out;
    std::vector<QMElement> seen;
    for (const auto& J : upsilon(y, m, n)) {
        MinorIndex idx = delta_index(J, m, n);
        QMElement minor = delta_minor(idx, m, n);
        if (dedup) {
            bool dup = false;
            for (const auto& s : seen)
                if (s == minor) {
                    dup = true;
                    break;
                }
            if (dup) continue;
            seen.push_back(minor);
        }
        out.emplace_back(std::move(idx), std::move(minor));
    }
    return out;
}

long predicted_scalar(const std::vector<int>& J, int a, int b, int m, int n) {
    const int r = m + n - 1;
    const int k = static_cast<int>(J.size());
    auto [cm, word] = coxeter_cm(m, n);
    Weight mu = wt_eta(J, m, n) - weyl_action(cm, Weight::fundamental(r, k));
    return pact_exponent(mu, deg_x(a, b, m, n));
}

} // namespace qprime
