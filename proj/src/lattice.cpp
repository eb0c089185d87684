#include "qprime/lattice.hpp"

#include <sstream>
#include <stdexcept>

namespace qprime {

namespace {
void check_rank(int a, int b, const char* where) {
    if (a != b) throw std::invalid_argument(std::string(where) + ": rank mismatch");
}
} // namespace

Weight Weight::fundamental(int rank, int i) {
    if (i < 1 || i > rank) throw std::invalid_argument("Weight::fundamental: index out of range");
    Weight w = zero(rank);
    w.c_[static_cast<size_t>(i - 1)] = 1;
    return w;
}

Weight Weight::operator+(const Weight& o) const {
    check_rank(rank(), o.rank(), "Weight::+");
    std::vector<long> r(c_);
    for (size_t i = 0; i < r.size(); ++i) r[i] += o.c_[i];
    return Weight(std::move(r));
}

Weight Weight::operator-(const Weight& o) const {
    check_rank(rank(), o.rank(), "Weight::-");
    std::vector<long> r(c_);
    for (size_t i = 0; i < r.size(); ++i) r[i] -= o.c_[i];
    return Weight(std::move(r));
}

Weight Weight::operator-() const {
    std::vector<long> r(c_);
    for (auto& x : r) x = -x;
    return Weight(std::move(r));
}

bool Weight::is_zero() const {
    for (long x : c_)
        if (x != 0) return false;
    return true;
}

std::string Weight::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ",";
        os << c_[i];
    }
    os << "]";
    return os.str();
}

RootElt RootElt::simple(int rank, int i) {
    if (i < 1 || i > rank) throw std::invalid_argument("RootElt::simple: index out of range");
    RootElt g = zero(rank);
    g.c_[static_cast<size_t>(i - 1)] = 1;
    return g;
}

RootElt RootElt::operator+(const RootElt& o) const {
    check_rank(rank(), o.rank(), "RootElt::+");
    std::vector<long> r(c_);
    for (size_t i = 0; i < r.size(); ++i) r[i] += o.c_[i];
    return RootElt(std::move(r));
}

RootElt RootElt::operator-(const RootElt& o) const {
    check_rank(rank(), o.rank(), "RootElt::-");
    std::vector<long> r(c_);
    for (size_t i = 0; i < r.size(); ++i) r[i] -= o.c_[i];
    return RootElt(std::move(r));
}

RootElt RootElt::operator-() const {
    std::vector<long> r(c_);
    for (auto& x : r) x = -x;
    return RootElt(std::move(r));
}

bool RootElt::is_zero() const {
    for (long x : c_)
        if (x != 0) return false;
    return true;
}

std::string RootElt::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ",";
        os << c_[i];
    }
    os << "]";
    return os.str();
}

Weight root_to_weight(const RootElt& g) {
    // alpha_j = -omega_{j-1} + 2 omega_j - omega_{j+1} (type-A Cartan columns)
    const int r = g.rank();
    std::vector<long> c(static_cast<size_t>(r), 0);
    for (int j = 1; j <= r; ++j) {
        long a = g.coord(j);
        if (a == 0) continue;
        c[static_cast<size_t>(j - 1)] += 2 * a;
        if (j > 1) c[static_cast<size_t>(j - 2)] -= a;
        if (j < r) c[static_cast<size_t>(j)] -= a;
    }
    return Weight(std::move(c));
}

long pairing(const Weight& lam, const RootElt& g) {
    check_rank(lam.rank(), g.rank(), "pairing");
    long acc = 0;
    for (int i = 1; i <= lam.rank(); ++i) acc += lam.coord(i) * g.coord(i);
    return acc;
}

Weight weyl_action(const Permutation& w, const Weight& lam) {
    check_rank(w.size(), lam.rank() + 1, "weyl_action");
    std::vector<long> c = lam.coords();
    const int r = lam.rank();
    auto reflect = [&](int i) {
        // s_i lam = lam - <lam, alpha_i^vee> alpha_i,  <lam, alpha_i^vee> = c_i
        long ci = c[static_cast<size_t>(i - 1)];
        c[static_cast<size_t>(i - 1)] = -ci;
        if (i > 1) c[static_cast<size_t>(i - 2)] += ci;
        if (i < r) c[static_cast<size_t>(i)] += ci;
    };
    std::vector<int> word = w.reduced_word();
    for (auto it = word.rbegin(); it != word.rend(); ++it) reflect(*it);
    return Weight(std::move(c));
}

Weight wt_eta(const std::vector<int>& J, int m, int n) {
    if (J.empty()) throw std::invalid_argument("wt_eta: empty index set");
    const int r = m + n - 1;
    const int k = static_cast<int>(J.size());
    if (k > r) throw std::invalid_argument("wt_eta: |J| exceeds m+n-1");
    std::vector<long> rc(static_cast<size_t>(r), 0);
    for (int i = 1; i <= k; ++i) {
        int ji = J[static_cast<size_t>(i - 1)];
        if (ji < 1 || ji > m + n) throw std::invalid_argument("wt_eta: index out of range");
        for (int t = i; t <= ji - 1; ++t) rc[static_cast<size_t>(t - 1)] += 1;
    }
    return -Weight::fundamental(r, k) + root_to_weight(RootElt(std::move(rc)));
}

RootElt deg_x(int i, int j, int m, int n) {
    if (i < 1 || i > m || j < 1 || j > n) throw std::invalid_argument("deg_x: index out of range");
    const int r = m + n - 1;
    std::vector<long> c(static_cast<size_t>(r), 0);
    for (int t = m - i + 1; t <= m + j - 1; ++t) c[static_cast<size_t>(t - 1)] = -1;
    return RootElt(std::move(c));
}

long pact_exponent(const Weight& mu, const RootElt& gamma) { return pairing(mu, gamma); }

} // namespace qprime
