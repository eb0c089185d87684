#ifndef QPRIME_LATTICE_HPP
#define QPRIME_LATTICE_HPP

#include <string>
#include <vector>

#include "qprime/permutation.hpp"

namespace qprime {

// Integral weight of sl_{r+1} in fundamental-weight coordinates.
class Weight {
public:
    explicit Weight(std::vector<long> coords) : c_(std::move(coords)) {}
    static Weight zero(int rank) { return Weight(std::vector<long>(static_cast<size_t>(rank), 0)); }
    static Weight fundamental(int rank, int i);

    int rank() const { return static_cast<int>(c_.size()); }
    long coord(int i) const { return c_[static_cast<size_t>(i - 1)]; } // coefficient of omega_i
    const std::vector<long>& coords() const { return c_; }

    Weight operator+(const Weight& o) const;
    Weight operator-(const Weight& o) const;
    Weight operator-() const;
    bool operator==(const Weight& o) const { return c_ == o.c_; }
    bool operator!=(const Weight& o) const { return c_ != o.c_; }

    bool is_zero() const;
    std::string str() const; // "[c1,...,cr]"

private:
    std::vector<long> c_;
};

// Element of the root lattice Q in simple-root coordinates.
class RootElt {
public:
    explicit RootElt(std::vector<long> coords) : c_(std::move(coords)) {}
    static RootElt zero(int rank) { return RootElt(std::vector<long>(static_cast<size_t>(rank), 0)); }
    static RootElt simple(int rank, int i);

    int rank() const { return static_cast<int>(c_.size()); }
    long coord(int i) const { return c_[static_cast<size_t>(i - 1)]; } // coefficient of alpha_i
    const std::vector<long>& coords() const { return c_; }

    RootElt operator+(const RootElt& o) const;
    RootElt operator-(const RootElt& o) const;
    RootElt operator-() const;
    bool operator==(const RootElt& o) const { return c_ == o.c_; }
    bool operator!=(const RootElt& o) const { return c_ != o.c_; }

    bool is_zero() const;
    std::string str() const;

private:
    std::vector<long> c_;
};

// embedding Q -> P through the type-A Cartan matrix (all d_i = 1)
Weight root_to_weight(const RootElt& g);

// <omega_i, alpha_j> = delta_ij in type A, extended bilinearly
long pairing(const Weight& lam, const RootElt& g);

// w(lambda) computed by simple reflections along a reduced word of w;
// w lives in S_{rank+1}
Weight weyl_action(const Permutation& w, const Weight& lam);

// weight of the dual Demazure basis vector eta_J:
// -omega_k + sum_{i=1}^{k} (alpha_i + ... + alpha_{j_i - 1}), J sorted, k = |J|
Weight wt_eta(const std::vector<int>& J, int m, int n);

// deg x_{ij} = -(alpha_{m-i+1} + ... + alpha_{m+j-1})
RootElt deg_x(int i, int j, int m, int n);

// exponent of q by which mu in P rescales a degree-gamma element
long pact_exponent(const Weight& mu, const RootElt& gamma);

} // namespace qprime

#endif
