#include "qprime/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qprime {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
    const int n = size();
    std::vector<bool> seen(static_cast<size_t>(n), false);
    for (int v : img_) {
        if (v < 1 || v > n || seen[static_cast<size_t>(v - 1)])
            throw std::invalid_argument("Permutation: not a bijection of [1,N]");
        seen[static_cast<size_t>(v - 1)] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> img(static_cast<size_t>(n));
    std::iota(img.begin(), img.end(), 1);
    return Permutation(std::move(img));
}

Permutation Permutation::from_word(int n, const std::vector<int>& word) {
    // s_{i_1} ... s_{i_l} applied to positions from the right:
    // (w s_i)(j) = w(s_i(j)), so build by swapping positions left to right
    std::vector<int> img(static_cast<size_t>(n));
    std::iota(img.begin(), img.end(), 1);
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        int i = *it;
        if (i < 1 || i >= n) throw std::invalid_argument("from_word: letter out of range");
        // left-multiply current by s_i: swap values i and i+1
        for (auto& v : img) {
            if (v == i) v = i + 1;
            else if (v == i + 1) v = i;
        }
    }
    return Permutation(std::move(img));
}

Permutation Permutation::parse(const std::string& s) {
    std::vector<int> img;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        size_t pos = 0;
        int v = std::stoi(tok, &pos);
        img.push_back(v);
    }
    if (img.empty()) throw std::invalid_argument("Permutation::parse: empty input");
    return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
    for (int i = 1; i <= size(); ++i)
        if ((*this)(i) != i) return false;
    return true;
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(img_.size());
    for (int i = 1; i <= size(); ++i) inv[static_cast<size_t>((*this)(i)-1)] = i;
    return Permutation(std::move(inv));
}

Permutation Permutation::operator*(const Permutation& o) const {
    if (size() != o.size()) throw std::invalid_argument("Permutation product: size mismatch");
    std::vector<int> img(img_.size());
    for (int i = 1; i <= size(); ++i) img[static_cast<size_t>(i - 1)] = (*this)(o(i));
    return Permutation(std::move(img));
}

long Permutation::length() const {
    long inv = 0;
    for (int i = 1; i <= size(); ++i)
        for (int j = i + 1; j <= size(); ++j)
            if ((*this)(i) > (*this)(j)) ++inv;
    return inv;
}

std::vector<int> Permutation::reduced_word() const {
    // peel descents on the right: w s_i shortens w iff w(i) > w(i+1)
    std::vector<int> collected;
    std::vector<int> img = img_;
    bool done = false;
    while (!done) {
        done = true;
        for (int i = 1; i < size(); ++i) {
            if (img[static_cast<size_t>(i - 1)] > img[static_cast<size_t>(i)]) {
                std::swap(img[static_cast<size_t>(i - 1)], img[static_cast<size_t>(i)]);
                collected.push_back(i);
                done = false;
                break;
            }
        }
    }
    // w * s_{c_1} * ... * s_{c_t} = e, hence w = s_{c_t} ... s_{c_1}
    std::reverse(collected.begin(), collected.end());
    return collected;
}

std::string Permutation::str() const {
    std::ostringstream os;
    for (int i = 1; i <= size(); ++i) {
        if (i > 1) os << ",";
        os << (*this)(i);
    }
    return os.str();
}

std::vector<int> prefix_set(const Permutation& y, int k) {
    if (k < 1 || k > y.size()) throw std::invalid_argument("prefix_set: k out of range");
    std::vector<int> s;
    s.reserve(static_cast<size_t>(k));
    for (int i = 1; i <= k; ++i) s.push_back(y(i));
    std::sort(s.begin(), s.end());
    return s;
}

bool bruhat_leq(const Permutation& y, const Permutation& w) {
    if (y.size() != w.size()) throw std::invalid_argument("bruhat_leq: size mismatch");
    const int n = y.size();
    for (int k = 1; k < n; ++k) {
        std::vector<int> py = prefix_set(y, k), pw = prefix_set(w, k);
        for (int l = 0; l < k; ++l)
            if (py[static_cast<size_t>(l)] > pw[static_cast<size_t>(l)]) return false;
    }
    return true;
}

std::pair<Permutation, std::vector<int>> coxeter_cm(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("coxeter_cm: m, n >= 1 required");
    const int N = m + n;
    std::vector<int> img(static_cast<size_t>(N));
    for (int i = 1; i <= N; ++i) img[static_cast<size_t>(i - 1)] = (i + m - 1) % N + 1;
    std::vector<int> word;
    word.reserve(static_cast<size_t>(m) * static_cast<size_t>(n));
    for (int j = 1; j <= n; ++j)
        for (int t = m + j - 1; t >= j; --t) word.push_back(t);
    Permutation cm{std::move(img)};
    // the stated word is reduced of length mn and multiplies out to c^m
    if (Permutation::from_word(N, word) != cm || cm.length() != static_cast<long>(word.size()))
        throw std::logic_error("coxeter_cm: inconsistent reduced word");
    return {cm, word};
}

std::vector<Permutation> bruhat_interval(const Permutation& w) {
    const int n = w.size();
    std::vector<Permutation> out;
    if (n <= 7) {
        std::vector<int> img(static_cast<size_t>(n));
        std::iota(img.begin(), img.end(), 1);
        do {
            Permutation y{img};
            if (bruhat_leq(y, w)) out.push_back(y);
        } while (std::next_permutation(img.begin(), img.end()));
    } else {
        // subword closure of a fixed reduced word of w
        std::set<std::vector<int>> seen;
        seen.insert(Permutation::identity(n).images());
        for (int i : w.reduced_word()) {
            std::set<std::vector<int>> next = seen;
            for (const auto& img : seen) {
                Permutation u{img};
                std::vector<int> prod = u.images();
                // u * s_i: swap positions i, i+1
                std::swap(prod[static_cast<size_t>(i - 1)], prod[static_cast<size_t>(i)]);
                next.insert(prod);
            }
            seen = std::move(next);
        }
        for (const auto& img : seen) out.push_back(Permutation{img});
    }
    std::sort(out.begin(), out.end(), [](const Permutation& a, const Permutation& b) {
        long la = a.length(), lb = b.length();
        if (la != lb) return la < lb;
        return a < b;
    });
    return out;
}

GradedIntervalCert verify_graded_interval(const Permutation& w) {
    GradedIntervalCert cert;
    std::vector<Permutation> iv = bruhat_interval(w);
    const size_t n = iv.size();
    std::vector<long> len(n);
    for (size_t i = 0; i < n; ++i) len[i] = iv[i].length();

    std::vector<std::vector<size_t>> below(n); // strict relations a < b
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b)
            if (a != b && len[a] < len[b] && bruhat_leq(iv[a], iv[b])) below[b].push_back(a);

    // every strict pair with length gap >= 2 must have an intermediate element
    for (size_t b = 0; b < n; ++b) {
        for (size_t a : below[b]) {
            if (len[b] - len[a] < 2) continue;
            bool found = false;
            for (size_t z : below[b]) {
                if (z == a || len[z] <= len[a] || len[z] >= len[b]) continue;
                if (bruhat_leq(iv[a], iv[z])) { found = true; break; }
            }
            if (!found) {
                cert.pass = false;
                cert.detail = "gap without intermediate: " + iv[a].str() + " < " + iv[b].str();
                return cert;
            }
        }
    }

    // longest chain from e, following covers (length gap exactly 1)
    std::vector<long> chain(n, 0);
    for (size_t b = 0; b < n; ++b)
        for (size_t a : below[b])
            if (len[b] - len[a] == 1) chain[b] = std::max(chain[b], chain[a] + 1);
    cert.max_chain_length = 0;
    for (size_t b = 0; b < n; ++b) {
        if (chain[b] != len[b]) {
            cert.pass = false;
            cert.detail = "chain length mismatch at " + iv[b].str();
            return cert;
        }
        cert.max_chain_length = std::max(cert.max_chain_length, chain[b]);
    }
    cert.pass = true;
    return cert;
}

} // namespace qprime
