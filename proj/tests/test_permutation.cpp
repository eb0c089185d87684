#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "qprime/permutation.hpp"

using namespace qprime;

namespace {

// independent subword-property oracle: y <= w iff some subword of a fixed
// reduced word of w multiplies out to y with l(y) letters
bool bruhat_leq_subword_oracle(const Permutation& y, const Permutation& w) {
    std::vector<int> word = w.reduced_word();
    const int n = w.size();
    const size_t l = word.size();
    for (uint32_t mask = 0; mask < (1u << l); ++mask) {
        std::vector<int> sub;
        for (size_t t = 0; t < l; ++t)
            if (mask & (1u << t)) sub.push_back(word[t]);
        if (sub.size() != static_cast<size_t>(y.length())) continue;
        if (Permutation::from_word(n, sub) == y) return true;
    }
    return false;
}

Permutation longest(int n) {
    std::vector<int> img(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) img[static_cast<size_t>(i - 1)] = n + 1 - i;
    return Permutation(std::move(img));
}

std::vector<Permutation> symmetric_group(int n) { return bruhat_interval(longest(n)); }

} // namespace

TEST_CASE("length and reduced words") {
    CHECK(Permutation::identity(4).length() == 0);
    CHECK(Permutation::parse("3,4,1,2").length() == 4); // brute-force inversion count
    CHECK(longest(4).length() == 6);

    for (const auto& w : symmetric_group(4)) {
        std::vector<int> word = w.reduced_word();
        CHECK(static_cast<long>(word.size()) == w.length());
        CHECK(Permutation::from_word(4, word) == w);
    }
}

TEST_CASE("coxeter element powers") {
    auto [c1, w1] = coxeter_cm(1, 1);
    CHECK(c1 == Permutation::parse("2,1"));
    CHECK(w1 == std::vector<int>{1});

    auto [c2, w2] = coxeter_cm(2, 2);
    CHECK(c2 == Permutation::parse("3,4,1,2"));
    CHECK(w2 == std::vector<int>{2, 1, 3, 2});
    CHECK(c2.length() == 4);

    auto [c12, w12] = coxeter_cm(1, 2);
    CHECK(c12 == Permutation::parse("2,3,1"));
    CHECK(w12 == std::vector<int>{1, 2});

    // c^m really is the m-th power of the full cycle
    for (int m = 1; m <= 3; ++m) {
        for (int n = 1; n <= 3; ++n) {
            const int N = m + n;
            std::vector<int> cyc(static_cast<size_t>(N));
            for (int i = 1; i <= N; ++i) cyc[static_cast<size_t>(i - 1)] = i % N + 1;
            Permutation c{cyc};
            Permutation power = Permutation::identity(N);
            for (int t = 0; t < m; ++t) power = c * power;
            CHECK(coxeter_cm(m, n).first == power);
            CHECK(coxeter_cm(m, n).first.length() == static_cast<long>(m) * n);
        }
    }
}

TEST_CASE("bruhat order via tableau criterion") {
    Permutation w = Permutation::parse("3,4,1,2");
    CHECK(bruhat_leq(Permutation::identity(4), w));
    CHECK(bruhat_leq(Permutation::parse("1,3,2,4"), w));
    CHECK_FALSE(bruhat_leq(Permutation::parse("4,1,2,3"), w));

    // agreement with the subword-property oracle on all pairs of S_4 and a
    // sample of S_5
    for (const auto& y : symmetric_group(4))
        for (const auto& v : symmetric_group(4))
            CHECK(bruhat_leq(y, v) == bruhat_leq_subword_oracle(y, v));

    auto s5 = symmetric_group(5);
    for (size_t i = 0; i < s5.size(); i += 7)
        for (size_t j = 0; j < s5.size(); j += 11)
            CHECK(bruhat_leq(s5[i], s5[j]) == bruhat_leq_subword_oracle(s5[i], s5[j]));
}

TEST_CASE("prefix sets") {
    CHECK(prefix_set(Permutation::identity(4), 3) == std::vector<int>{1, 2, 3});
    CHECK(prefix_set(Permutation::parse("3,4,1,2"), 2) == std::vector<int>{3, 4});
    CHECK(prefix_set(Permutation::parse("3,4,1,2"), 3) == std::vector<int>{1, 3, 4});
    CHECK_THROWS_AS(prefix_set(Permutation::identity(3), 4), std::invalid_argument);

    // monotone in Bruhat order, componentwise
    for (const auto& y : symmetric_group(4))
        for (const auto& w : symmetric_group(4)) {
            if (!bruhat_leq(y, w)) continue;
            for (int k = 1; k <= 4; ++k) {
                auto py = prefix_set(y, k), pw = prefix_set(w, k);
                for (size_t t = 0; t < py.size(); ++t) CHECK(py[t] <= pw[t]);
            }
        }
}

TEST_CASE("bruhat intervals") {
    CHECK(bruhat_interval(Permutation::parse("2,1")).size() == 2);
    CHECK(bruhat_interval(Permutation::parse("3,4,1,2")).size() == 14);
    CHECK(bruhat_interval(longest(3)).size() == 6);

    // deterministic ordering by (length, lex)
    auto iv = bruhat_interval(Permutation::parse("3,4,1,2"));
    for (size_t i = 1; i < iv.size(); ++i) {
        bool ordered = iv[i - 1].length() < iv[i].length() ||
                       (iv[i - 1].length() == iv[i].length() && iv[i - 1] < iv[i]);
        CHECK(ordered);
    }

    // census agrees with the exponential subword closure
    std::set<std::vector<int>> closure;
    Permutation w = Permutation::parse("3,4,1,2");
    std::vector<int> word = w.reduced_word();
    for (uint32_t mask = 0; mask < (1u << word.size()); ++mask) {
        std::vector<int> sub;
        for (size_t t = 0; t < word.size(); ++t)
            if (mask & (1u << t)) sub.push_back(word[t]);
        closure.insert(Permutation::from_word(4, sub).images());
    }
    CHECK(closure.size() == 14);
}

TEST_CASE("graded interval certificates") {
    auto c1 = verify_graded_interval(Permutation::parse("2,1"));
    CHECK(c1.pass);
    CHECK(c1.max_chain_length == 1);

    auto c2 = verify_graded_interval(Permutation::parse("3,4,1,2"));
    CHECK(c2.pass);
    CHECK(c2.max_chain_length == 4);

    auto c3 = verify_graded_interval(longest(3));
    CHECK(c3.pass);
    CHECK(c3.max_chain_length == 3);

    // length strictly monotone along covers
    auto iv = bruhat_interval(Permutation::parse("3,4,1,2"));
    for (const auto& a : iv)
        for (const auto& b : iv)
            if (a != b && bruhat_leq(a, b)) CHECK(a.length() < b.length());
}
