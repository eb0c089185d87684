#include "qprime/qmatrix.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace qprime {

long mono_degree(const Mono& a) {
    long d = 0;
    for (uint8_t e : a) d += e;
    return d;
}

bool mono_divides(const Mono& a, const Mono& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Mono mono_lcm(const Mono& a, const Mono& b) {
    Mono r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

Mono mono_sub(const Mono& a, const Mono& b) {
    Mono r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = static_cast<uint8_t>(a[i] - b[i]);
    return r;
}

Mono mono_add(const Mono& a, const Mono& b) {
    Mono r(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        int s = a[i] + b[i];
        if (s > 255) throw std::overflow_error("mono_add: exponent exceeds 255");
        r[i] = static_cast<uint8_t>(s);
    }
    return r;
}

int mono_cmp(const Mono& a, const Mono& b) {
    long da = mono_degree(a), db = mono_degree(b);
    if (da != db) return da < db ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

namespace {

// word of variable indices (0-based, row-major); PBW normal order is ascending
using Word = std::vector<uint8_t>;

struct WordGreater {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() > b.size();
        return a > b; // lexicographic
    }
};

// One adjacent rewrite step x_a x_b with a > b (indices in the variable
// order). Returns the q-power on the swapped word and, for the diagonal
// relation, the correction pair with coefficient -(q - q^{-1}).
struct SwapRule {
    long q_exp;            // coefficient q^{q_exp} on the swapped word
    bool has_correction;   // diagonal case
    uint8_t corr_first;    // x_{ik}
    uint8_t corr_second;   // x_{lj}
};

struct RewriteTable {
    int n;
    std::vector<SwapRule> rules; // indexed a * nvars + b for a > b

    RewriteTable(int m, int n_) : n(n_), rules(static_cast<size_t>(m * n_) * static_cast<size_t>(m * n_)) {
        const int nv = m * n_;
        for (int a = 0; a < nv; ++a) {
            for (int b = 0; b < a; ++b) {
                int ra = a / n, ca = a % n, rb = b / n, cb = b % n;
                SwapRule rule{0, false, 0, 0};
                if (ra == rb || ca == cb) {
                    rule.q_exp = -1; // row/column q-commutation, inverted
                } else if (ca < cb) {
                    rule.q_exp = 0; // antidiagonal pair commutes
                } else {
                    rule.q_exp = 0; // diagonal pair
                    rule.has_correction = true;
                    rule.corr_first = static_cast<uint8_t>(rb * n + ca);
                    rule.corr_second = static_cast<uint8_t>(ra * n + cb);
                    // admissibility: the correction must be strictly smaller
                    // than the replaced monomial, or straightening would loop
                    Mono replaced(static_cast<size_t>(nv), 0), corr(static_cast<size_t>(nv), 0);
                    ++replaced[static_cast<size_t>(a)];
                    ++replaced[static_cast<size_t>(b)];
                    ++corr[rule.corr_first];
                    ++corr[rule.corr_second];
                    if (mono_cmp(corr, replaced) >= 0)
                        throw std::logic_error("monomial order not admissible for straightening");
                }
                rules[static_cast<size_t>(a) * static_cast<size_t>(nv) + static_cast<size_t>(b)] = rule;
            }
        }
    }
};

const RewriteTable& rewrite_table(int m, int n) {
    static std::map<std::pair<int, int>, RewriteTable> cache;
    auto it = cache.find({m, n});
    if (it == cache.end()) it = cache.emplace(std::make_pair(m, n), RewriteTable(m, n)).first;
    return it->second;
}

Mono word_to_mono(int nvars, const Word& w) {
    Mono mono(static_cast<size_t>(nvars), 0);
    for (uint8_t v : w) {
        if (mono[v] == 255) throw std::overflow_error("straighten: exponent exceeds 255");
        ++mono[v];
    }
    return mono;
}

Word mono_to_word(const Mono& mono) {
    Word w;
    for (size_t v = 0; v < mono.size(); ++v)
        for (uint8_t t = 0; t < mono[v]; ++t) w.push_back(static_cast<uint8_t>(v));
    return w;
}

// Normalizes a linear combination of words. Every rewrite output is
// lexicographically smaller than its input, so popping the largest word
// first visits each word at most once.
void straighten(int m, int n, std::map<Word, RatFunc, WordGreater>& work, QMElement& out) {
    const RewriteTable& table = rewrite_table(m, n);
    const int nv = m * n;
    const RatFunc minus_comm = RatFunc(LaurentPoly::q_power(-1) - LaurentPoly::q_power(1)); // -(q - q^-1)
    while (!work.empty()) {
        auto it = work.begin();
        Word w = it->first;
        RatFunc c = it->second;
        work.erase(it);
        if (c.is_zero()) continue;
        size_t pos = w.size();
        for (size_t t = 0; t + 1 < w.size(); ++t) {
            if (w[t] > w[t + 1]) {
                pos = t;
                break;
            }
        }
        if (pos == w.size()) {
            out.add_term(word_to_mono(nv, w), c);
            continue;
        }
        uint8_t a = w[pos], b = w[pos + 1];
        const SwapRule& rule = table.rules[static_cast<size_t>(a) * static_cast<size_t>(nv) + b];
        Word swapped = w;
        std::swap(swapped[pos], swapped[pos + 1]);
        RatFunc cs = rule.q_exp == 0 ? c : c * RatFunc::q_power(rule.q_exp);
        auto [sit, inserted] = work.emplace(std::move(swapped), cs);
        if (!inserted) {
            sit->second += cs;
            if (sit->second.is_zero()) work.erase(sit);
        }
        if (rule.has_correction) {
            Word corr = w;
            corr[pos] = rule.corr_first;
            corr[pos + 1] = rule.corr_second;
            RatFunc cc = c * minus_comm;
            auto [cit, ins2] = work.emplace(std::move(corr), cc);
            if (!ins2) {
                cit->second += cc;
                if (cit->second.is_zero()) work.erase(cit);
            }
        }
    }
}

} // namespace

QMElement QMElement::unit(int m, int n) {
    QMElement e(m, n);
    e.add_term(Mono(static_cast<size_t>(m * n), 0), RatFunc(1));
    return e;
}

QMElement QMElement::generator(int m, int n, int i, int j) {
    if (i < 1 || i > m || j < 1 || j > n)
        throw std::invalid_argument("QMElement::generator: index out of range");
    Mono mono(static_cast<size_t>(m * n), 0);
    mono[static_cast<size_t>((i - 1) * n + (j - 1))] = 1;
    return monomial(m, n, mono, RatFunc(1));
}

QMElement QMElement::monomial(int m, int n, const Mono& mono, const RatFunc& c) {
    if (static_cast<int>(mono.size()) != m * n)
        throw std::invalid_argument("QMElement::monomial: wrong exponent vector size");
    QMElement e(m, n);
    e.add_term(mono, c);
    return e;
}

long QMElement::degree() const {
    if (terms_.empty()) return -1;
    return mono_degree(terms_.begin()->first); // order is degree-first
}

const Mono& QMElement::leading_mono() const {
    if (terms_.empty()) throw std::logic_error("leading_mono of zero element");
    return terms_.begin()->first;
}

const RatFunc& QMElement::leading_coeff() const {
    if (terms_.empty()) throw std::logic_error("leading_coeff of zero element");
    return terms_.begin()->second;
}

RatFunc QMElement::coeff(const Mono& mono) const {
    auto it = terms_.find(mono);
    return it == terms_.end() ? RatFunc() : it->second;
}

void QMElement::add_term(const Mono& mono, const RatFunc& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(mono);
    if (it == terms_.end()) {
        terms_.emplace(mono, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

QMElement QMElement::operator+(const QMElement& o) const {
    if (m_ != o.m_ || n_ != o.n_) throw std::invalid_argument("QMElement::+: ambient mismatch");
    QMElement r(*this);
    for (const auto& [mono, c] : o.terms_) r.add_term(mono, c);
    return r;
}

QMElement QMElement::operator-(const QMElement& o) const {
    if (m_ != o.m_ || n_ != o.n_) throw std::invalid_argument("QMElement::-: ambient mismatch");
    QMElement r(*this);
    for (const auto& [mono, c] : o.terms_) r.add_term(mono, -c);
    return r;
}

QMElement QMElement::operator-() const {
    QMElement r(m_, n_);
    for (const auto& [mono, c] : terms_) r.terms_.emplace(mono, -c);
    return r;
}

QMElement QMElement::operator*(const QMElement& o) const {
    if (m_ != o.m_ || n_ != o.n_) throw std::invalid_argument("QMElement::*: ambient mismatch");
    QMElement out(m_, n_);
    std::map<Word, RatFunc, WordGreater> work;
    for (const auto& [ma, ca] : terms_) {
        Word wa = mono_to_word(ma);
        for (const auto& [mb, cb] : o.terms_) {
            Word w = wa;
            Word wb = mono_to_word(mb);
            w.insert(w.end(), wb.begin(), wb.end());
            RatFunc c = ca * cb;
            auto [it, inserted] = work.emplace(std::move(w), c);
            if (!inserted) {
                it->second += c;
                if (it->second.is_zero()) work.erase(it);
            }
        }
    }
    straighten(m_, n_, work, out);
    return out;
}

bool QMElement::operator==(const QMElement& o) const {
    return m_ == o.m_ && n_ == o.n_ && terms_ == o.terms_;
}

QMElement QMElement::scaled(const RatFunc& c) const {
    QMElement r(m_, n_);
    if (c.is_zero()) return r;
    for (const auto& [mono, x] : terms_) r.terms_.emplace(mono, x * c);
    return r;
}

QMElement QMElement::monic() const {
    if (is_zero()) return *this;
    return scaled(leading_coeff().inv());
}

std::variant<std::vector<long>, InhomogeneityReport> QMElement::torus_weight() const {
    std::vector<long> wt(static_cast<size_t>(m_ + n_), 0);
    bool have = false;
    Mono first;
    for (const auto& [mono, c] : terms_) {
        std::vector<long> cur(static_cast<size_t>(m_ + n_), 0);
        for (int v = 0; v < nvars(); ++v) {
            long e = mono[static_cast<size_t>(v)];
            if (e == 0) continue;
            cur[static_cast<size_t>(v / n_)] += e;              // row index i
            cur[static_cast<size_t>(m_ + v % n_)] -= e;         // column index m+j
        }
        if (!have) {
            wt = cur;
            first = mono;
            have = true;
        } else if (cur != wt) {
            return InhomogeneityReport{QMElement::monomial(m_, n_, first, RatFunc(1)).str(),
                                       QMElement::monomial(m_, n_, mono, RatFunc(1)).str()};
        }
    }
    return wt;
}

std::variant<RootElt, InhomogeneityReport> QMElement::q_degree() const {
    const int r = m_ + n_ - 1;
    RootElt deg = RootElt::zero(r);
    bool have = false;
    Mono first;
    for (const auto& [mono, c] : terms_) {
        RootElt cur = RootElt::zero(r);
        for (int v = 0; v < nvars(); ++v) {
            long e = mono[static_cast<size_t>(v)];
            if (e == 0) continue;
            RootElt d = deg_x(v / n_ + 1, v % n_ + 1, m_, n_);
            for (long t = 0; t < e; ++t) cur = cur + d;
        }
        if (!have) {
            deg = cur;
            first = mono;
            have = true;
        } else if (cur != deg) {
            return InhomogeneityReport{QMElement::monomial(m_, n_, first, RatFunc(1)).str(),
                                       QMElement::monomial(m_, n_, mono, RatFunc(1)).str()};
        }
    }
    return deg;
}

std::string var_name(int m, int n, int v) {
    int i = v / n + 1, j = v % n + 1;
    std::ostringstream os;
    if (m <= 9 && n <= 9)
        os << "x" << i << j;
    else
        os << "x(" << i << "," << j << ")";
    return os.str();
}

std::string QMElement::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mono, c] : terms_) {
        std::string cs = c.str();
        bool negated = false;
        if (!cs.empty() && cs[0] == '-' && cs.find(" + ") == std::string::npos &&
            cs.find(" - ") == std::string::npos) {
            negated = true;
            cs = cs.substr(1);
        }
        if (first) {
            if (negated) os << "-";
            first = false;
        } else {
            os << (negated ? " - " : " + ");
        }
        bool composite = cs.find(" + ") != std::string::npos || cs.find(" - ") != std::string::npos;
        std::string monostr;
        {
            std::ostringstream ms;
            bool any = false;
            for (int v = 0; v < nvars(); ++v) {
                uint8_t e = mono[static_cast<size_t>(v)];
                if (!e) continue;
                if (any) ms << " ";
                any = true;
                ms << var_name(m_, n_, v);
                if (e > 1) ms << "^" << static_cast<int>(e);
            }
            monostr = ms.str();
        }
        if (monostr.empty()) {
            os << (composite ? "(" + cs + ")" : cs);
        } else if (cs == "1") {
            os << monostr;
        } else {
            os << (composite ? "(" + cs + ")" : cs) << " " << monostr;
        }
    }
    return os.str();
}

QMElement mono_mul_left(const Mono& a, const QMElement& f) {
    QMElement am = QMElement::monomial(f.rows(), f.cols(), a, RatFunc(1));
    return am * f;
}

QMElement mono_mul_right(const QMElement& f, const Mono& a) {
    QMElement am = QMElement::monomial(f.rows(), f.cols(), a, RatFunc(1));
    return f * am;
}

namespace {
void permutations_rec(std::vector<int>& perm, std::vector<bool>& used, size_t depth,
                      const std::function<void(const std::vector<int>&)>& emit) {
    if (depth == perm.size()) {
        emit(perm);
        return;
    }
    for (size_t v = 0; v < perm.size(); ++v) {
        if (used[v]) continue;
        used[v] = true;
        perm[depth] = static_cast<int>(v);
        permutations_rec(perm, used, depth + 1, emit);
        used[v] = false;
    }
}

long perm_inversions(const std::vector<int>& p) {
    long inv = 0;
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inv;
    return inv;
}
} // namespace

QMElement quantum_minor(int m, int n, const std::vector<int>& rows,
                        const std::vector<int>& cols, MinorVariant variant) {
    if (rows.empty() || cols.empty())
        throw std::invalid_argument("quantum_minor: empty index sets");
    if (rows.size() != cols.size())
        throw std::invalid_argument("quantum_minor: |rows| != |cols|");
    std::vector<int> r = rows, c = cols;
    std::sort(r.begin(), r.end());
    std::sort(c.begin(), c.end());
    for (int i : r)
        if (i < 1 || i > m) throw std::invalid_argument("quantum_minor: row out of range");
    for (int j : c)
        if (j < 1 || j > n) throw std::invalid_argument("quantum_minor: col out of range");
    const size_t k = r.size();
    QMElement out(m, n);
    std::vector<int> perm(k);
    std::vector<bool> used(k, false);
    const LaurentPoly mq = LaurentPoly::q_power(1) * LaurentPoly(-1L); // -q
    permutations_rec(perm, used, 0, [&](const std::vector<int>& p) {
        long l = perm_inversions(p);
        QMElement prod = QMElement::unit(m, n);
        if (variant == MinorVariant::First) {
            // (-q)^{l(w)} x_{j_1 j'_{w(1)}} ... x_{j_k j'_{w(k)}}
            for (size_t t = 0; t < k; ++t)
                prod = prod * QMElement::generator(m, n, r[t], c[static_cast<size_t>(p[t])]);
            LaurentPoly coeff(1L);
            for (long s = 0; s < l; ++s) coeff = coeff * mq;
            out = out + prod.scaled(RatFunc(coeff));
        } else {
            // (-q)^{-l(w)} x_{j_{w(k)} j'_k} ... x_{j_{w(1)} j'_1}
            for (size_t t = k; t-- > 0;)
                prod = prod * QMElement::generator(m, n, r[static_cast<size_t>(p[t])], c[t]);
            RatFunc coeff(1);
            for (long s = 0; s < l; ++s) coeff = coeff * RatFunc(LaurentPoly::q_power(-1) * LaurentPoly(-1L));
            out = out + prod.scaled(coeff);
        }
    });
    return out;
}

void assert_order_admissible(int m, int n) {
    const int nv = m * n;
    const RewriteTable& table = rewrite_table(m, n);
    for (int a = 0; a < nv; ++a) {
        for (int b = 0; b < a; ++b) {
            Mono replaced(static_cast<size_t>(nv), 0);
            ++replaced[static_cast<size_t>(a)];
            ++replaced[static_cast<size_t>(b)];
            const SwapRule& rule = table.rules[static_cast<size_t>(a) * static_cast<size_t>(nv) + b];
            if (!rule.has_correction) continue;
            Mono corr(static_cast<size_t>(nv), 0);
            ++corr[rule.corr_first];
            ++corr[rule.corr_second];
            if (mono_cmp(corr, replaced) >= 0)
                throw std::logic_error("monomial order not admissible for straightening");
        }
    }
}

} // namespace qprime
