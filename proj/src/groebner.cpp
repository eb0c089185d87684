#include "qprime/groebner.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace qprime {

QMElement reduce_full(const QMElement& u, const std::vector<QMElement>& basis) {
    QMElement r = u;
    while (!r.is_zero()) {
        bool reduced = false;
        // largest reducible monomial first; the map iterates leading-first
        for (const auto& [mono, c] : r.terms()) {
            for (const auto& g : basis) {
                if (g.is_zero()) continue;
                if (!mono_divides(g.leading_mono(), mono)) continue;
                Mono shift = mono_sub(mono, g.leading_mono());
                QMElement t = mono_mul_left(shift, g);
                // t is monic up to a q-power: lm(x^s g) = s + lm(g)
                RatFunc factor = c / t.coeff(mono);
                r = r - t.scaled(factor);
                reduced = true;
                break;
            }
            if (reduced) break;
        }
        if (!reduced) break;
    }
    return r;
}

void GroebnerBasis::complete(std::vector<QMElement> gens, size_t trusted) {
    struct Pair {
        Mono lcm;
        size_t i, j;
        long seq;
    };
    auto pair_less = [](const Pair& a, const Pair& b) {
        int c = mono_cmp(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        return a.seq < b.seq;
    };

    std::vector<QMElement> G;
    std::vector<Pair> queue;
    long seq = 0;

    auto guard_check = [&](const QMElement& r) {
        if (r.degree() > guard()) {
            meta_.truncated = true;
            elems_ = G;
            throw GuardExceeded("degree guard " + std::to_string(guard()) +
                                    " exceeded by remainder of degree " + std::to_string(r.degree()),
                                G, meta_);
        }
    };

    size_t trusted_in_G = 0;
    auto push_element = [&](QMElement g, bool is_trusted) {
        g = g.monic();
        meta_.max_degree = std::max(meta_.max_degree, g.degree());
        // pairs inside the trusted prefix are known to reduce to zero
        for (size_t i = is_trusted ? G.size() : 0; i < G.size(); ++i)
            queue.push_back(Pair{mono_lcm(G[i].leading_mono(), g.leading_mono()), i, G.size(), seq++});
        if (is_trusted) ++trusted_in_G;
        G.push_back(std::move(g));
    };

    for (size_t gi = 0; gi < gens.size(); ++gi) {
        QMElement r = reduce_full(gens[gi], G);
        if (gi < trusted && r != gens[gi])
            throw std::logic_error("complete: trusted prefix is not inter-reduced");
        if (r.is_zero()) continue;
        guard_check(r);
        push_element(std::move(r), gi < trusted);
    }

    // Buchberger completion; no coprime-lcm shortcut (unsound in general
    // solvable rings), every S-pair is reduced.
    auto drain_pairs = [&]() {
        while (!queue.empty()) {
            auto it = std::min_element(queue.begin(), queue.end(), pair_less);
            Pair p = *it;
            queue.erase(it);
            ++meta_.pairs_processed;
            const QMElement &f = G[p.i], &g = G[p.j];
            Mono sf = mono_sub(p.lcm, f.leading_mono());
            Mono sg = mono_sub(p.lcm, g.leading_mono());
            QMElement uf = mono_mul_left(sf, f);
            QMElement vg = mono_mul_left(sg, g);
            QMElement spoly = uf.scaled(uf.coeff(p.lcm).inv()) - vg.scaled(vg.coeff(p.lcm).inv());
            QMElement r = reduce_full(spoly, G);
            if (r.is_zero()) continue;
            guard_check(r);
            push_element(std::move(r), false);
        }
    };

    drain_pairs();

    if (kind_ == IdealKind::TwoSided) {
        // interleave right-multiplication closure with completion until
        // stable; trusted elements generate a two-sided ideal already and
        // their right products stay inside it
        const int nv = m_ * n_;
        bool stable = false;
        while (!stable) {
            stable = true;
            for (size_t gi = trusted_in_G; gi < G.size(); ++gi) {
                for (int v = 0; v < nv; ++v) {
                    Mono xv(static_cast<size_t>(nv), 0);
                    xv[static_cast<size_t>(v)] = 1;
                    QMElement r = reduce_full(mono_mul_right(G[gi], xv), G);
                    if (r.is_zero()) continue;
                    guard_check(r);
                    push_element(std::move(r), false);
                    drain_pairs();
                    stable = false;
                }
            }
        }
    }

    elems_ = std::move(G);
    interreduce();
}

void GroebnerBasis::interreduce() {
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < elems_.size(); ++i) {
            std::vector<QMElement> others;
            others.reserve(elems_.size() - 1);
            for (size_t j = 0; j < elems_.size(); ++j)
                if (j != i) others.push_back(elems_[j]);
            QMElement r = reduce_full(elems_[i], others);
            if (r == elems_[i]) continue;
            changed = true;
            if (r.is_zero()) {
                elems_.erase(elems_.begin() + static_cast<long>(i));
                --i;
            } else {
                elems_[i] = r.monic();
            }
        }
    }
    std::sort(elems_.begin(), elems_.end(), [](const QMElement& a, const QMElement& b) {
        return mono_cmp(a.leading_mono(), b.leading_mono()) < 0;
    });
}

GroebnerBasis GroebnerBasis::left(int m, int n, const std::vector<QMElement>& gens,
                                  const GBOptions& opts) {
    GroebnerBasis b(m, n, IdealKind::Left, opts);
    b.complete(gens);
    return b;
}

GroebnerBasis GroebnerBasis::two_sided(int m, int n, const std::vector<QMElement>& gens,
                                       const GBOptions& opts) {
    GroebnerBasis b(m, n, IdealKind::TwoSided, opts);
    b.complete(gens);
    return b;
}

GroebnerBasis GroebnerBasis::extended_with(const std::vector<QMElement>& more_gens) const {
    GroebnerBasis b(m_, n_, kind_, opts_);
    size_t trusted = elems_.size();
    std::vector<QMElement> gens = elems_;
    gens.insert(gens.end(), more_gens.begin(), more_gens.end());
    b.complete(std::move(gens), trusted);
    return b;
}

QMElement GroebnerBasis::normal_form(const QMElement& u) const {
    if (u.rows() != m_ || u.cols() != n_)
        throw std::invalid_argument("normal_form: ambient mismatch");
    return reduce_full(u, elems_);
}

bool GroebnerBasis::contains(const QMElement& u) const { return normal_form(u).is_zero(); }

int GroebnerBasis::gk_dim_quotient() const {
    if (meta_.truncated) throw std::logic_error("gk_dim_quotient: basis truncated by degree guard");
    const int nv = m_ * n_;
    std::vector<uint32_t> supports;
    supports.reserve(elems_.size());
    for (const auto& g : elems_) {
        uint32_t s = 0;
        const Mono& lm = g.leading_mono();
        for (int v = 0; v < nv; ++v)
            if (lm[static_cast<size_t>(v)] > 0) s |= 1u << v;
        supports.push_back(s);
    }
    int best = 0;
    for (uint32_t mask = 0; mask < (1u << nv); ++mask) {
        bool ok = true;
        for (uint32_t s : supports) {
            if ((s & mask) == s) { // leading monomial supported inside mask
                ok = false;
                break;
            }
        }
        if (ok) best = std::max(best, __builtin_popcount(mask));
    }
    return best;
}

std::string GroebnerBasis::to_json() const {
    nlohmann::json j;
    j["kind"] = kind_ == IdealKind::Left ? "left" : "two-sided";
    j["order"] = order_tag();
    j["m"] = m_;
    j["n"] = n_;
    nlohmann::json elems = nlohmann::json::array();
    for (const auto& g : elems_) elems.push_back(g.str());
    j["elements"] = std::move(elems);
    j["meta"] = {{"pairs_processed", meta_.pairs_processed},
                 {"max_degree", meta_.max_degree},
                 {"truncated", meta_.truncated}};
    return j.dump();
}

} // namespace qprime
