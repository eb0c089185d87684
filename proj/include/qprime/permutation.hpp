#ifndef QPRIME_PERMUTATION_HPP
#define QPRIME_PERMUTATION_HPP

#include <string>
#include <utility>
#include <vector>

namespace qprime {

// Element of S_N in one-line notation, 1-indexed.
class Permutation {
public:
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int n);
    // product of simple reflections s_{word[0]} ... s_{word.back()}
    static Permutation from_word(int n, const std::vector<int>& word);
    static Permutation parse(const std::string& s); // "3,4,1,2"

    int size() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[static_cast<size_t>(i - 1)]; }
    const std::vector<int>& images() const { return img_; }
    bool is_identity() const;

    Permutation inverse() const;
    Permutation operator*(const Permutation& o) const; // (u*v)(i) = u(v(i))
    bool operator==(const Permutation& o) const { return img_ == o.img_; }
    bool operator!=(const Permutation& o) const { return img_ != o.img_; }
    bool operator<(const Permutation& o) const { return img_ < o.img_; } // lex

    long length() const; // inversion count
    std::vector<int> reduced_word() const;

    std::string str() const;

private:
    std::vector<int> img_;
};

// sorted {y(1), ..., y(k)}
std::vector<int> prefix_set(const Permutation& y, int k);

// Bruhat order via the Ehresmann tableau criterion
bool bruhat_leq(const Permutation& y, const Permutation& w);

// the permutation k |-> k+m (mod m+n) together with the reduced word
// (s_m ... s_1)(s_{m+1} ... s_2) ... (s_{m+n-1} ... s_n) of length mn
std::pair<Permutation, std::vector<int>> coxeter_cm(int m, int n);

// all y <= w, ordered by (length, lexicographic one-line notation)
std::vector<Permutation> bruhat_interval(const Permutation& w);

struct GradedIntervalCert {
    bool pass = false;
    long max_chain_length = 0;
    std::string detail;
};

// checks that W^{<=w} is graded by length: covers raise length by exactly one
// and any strict relation of length gap >= 2 has an intermediate element
GradedIntervalCert verify_graded_interval(const Permutation& w);

} // namespace qprime

#endif
