// qprime: constructions and machine verification for the torus-invariant
// prime ideals of quantum matrix algebras.

#include <atomic>
#include <functional>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "qprime/exterior.hpp"
#include "qprime/groebner.hpp"
#include "qprime/minors.hpp"
#include "qprime/verify.hpp"

using namespace qprime;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitGuard = 2;
constexpr int kExitConfig = 3;

struct RunConfig {
    int m = 2, n = 2;
    std::string y; // one-line notation or "top"
    int degree_guard = 0;
    std::string format = "text";
    bool dedup = false;
    int jobs = 1;
    int cap = 16;
};

Permutation parse_y(const RunConfig& cfg) {
    if (cfg.y == "top") return coxeter_cm(cfg.m, cfg.n).first;
    return Permutation::parse(cfg.y);
}

int validate(const RunConfig& cfg) {
    if (cfg.m < 1 || cfg.n < 1 || cfg.m * cfg.n > cfg.cap) {
        std::cerr << "error: need m, n >= 1 and m*n <= " << cfg.cap << "\n";
        return kExitConfig;
    }
    if (cfg.degree_guard < 0 || cfg.degree_guard > 100) {
        std::cerr << "error: --degree-guard must lie in [0, 100]\n";
        return kExitConfig;
    }
    if (!cfg.y.empty() && cfg.y != "top") {
        Permutation y = Permutation::parse(cfg.y);
        if (y.size() != cfg.m + cfg.n) {
            std::cerr << "error: y must be a permutation of [1," << cfg.m + cfg.n << "]\n";
            return kExitConfig;
        }
        auto [cm, word] = coxeter_cm(cfg.m, cfg.n);
        if (!bruhat_leq(y, cm)) {
            // point at the first failing prefix of the tableau criterion
            for (int k = 1; k < y.size(); ++k) {
                auto py = prefix_set(y, k), pw = prefix_set(cm, k);
                for (size_t l = 0; l < py.size(); ++l) {
                    if (py[l] > pw[l]) {
                        std::cerr << "error: y is not below c^m: at k=" << k << " the sorted prefix "
                                  << "entry " << py[l] << " exceeds " << pw[l] << "\n";
                        return kExitConfig;
                    }
                }
            }
            return kExitConfig;
        }
    }
    return 0;
}

void emit(const Certificate& cert, const RunConfig& cfg) {
    if (cfg.format == "json") std::cout << cert.to_json() << "\n";
    else std::cout << cert.summary() << "\n";
}

// bounded pool over y values; certificates are printed in input order and
// exceptions from workers resurface on the caller after the join
std::vector<Certificate> run_pool(const std::vector<Permutation>& ys, int jobs,
                                  const std::function<Certificate(const Permutation&)>& fn) {
    std::vector<Certificate> out(ys.size());
    if (jobs <= 1) {
        for (size_t i = 0; i < ys.size(); ++i) out[i] = fn(ys[i]);
        return out;
    }
    std::atomic<size_t> next{0};
    std::vector<std::exception_ptr> errors(ys.size());
    std::vector<std::thread> workers;
    for (int t = 0; t < jobs; ++t) {
        workers.emplace_back([&] {
            while (true) {
                size_t i = next.fetch_add(1);
                if (i >= ys.size()) return;
                try {
                    out[i] = fn(ys[i]);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        });
    }
    for (auto& w : workers) w.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

int cmd_list_primes(const RunConfig& cfg) {
    auto [cm, word] = coxeter_cm(cfg.m, cfg.n);
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& y : bruhat_interval(cm)) {
        auto seq = generating_sequence(y, cfg.m, cfg.n, cfg.dedup);
        if (cfg.format == "json") {
            nlohmann::json r;
            r["y"] = y.str();
            r["length"] = y.length();
            r["upsilon_size"] = upsilon(y, cfg.m, cfg.n).size();
            nlohmann::json minors = nlohmann::json::array();
            for (const auto& [idx, u] : seq) {
                nlohmann::json mj;
                mj["J"] = idx.J;
                mj["rows"] = idx.rows;
                mj["cols"] = idx.cols;
                mj["element"] = u.str();
                minors.push_back(std::move(mj));
            }
            r["minors"] = std::move(minors);
            rows.push_back(std::move(r));
        } else {
            std::cout << "y=" << y.str() << "  l=" << y.length() << "  |Y|="
                      << upsilon(y, cfg.m, cfg.n).size();
            if (seq.empty()) {
                std::cout << "  (zero ideal)";
            } else {
                std::cout << "  minors:";
                for (const auto& [idx, u] : seq) {
                    std::cout << " D{";
                    for (size_t t = 0; t < idx.J.size(); ++t)
                        std::cout << (t ? "," : "") << idx.J[t];
                    std::cout << "}=" << u.str() << ";";
                }
            }
            std::cout << "\n";
        }
    }
    if (cfg.format == "json") std::cout << rows.dump() << "\n";
    return 0;
}

int cmd_generators(const RunConfig& cfg) {
    if (cfg.y.empty()) {
        std::cerr << "error: generators requires --y\n";
        return kExitConfig;
    }
    Permutation y = parse_y(cfg);
    auto seq = generating_sequence(y, cfg.m, cfg.n, cfg.dedup);
    if (cfg.format == "json") {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& [idx, u] : seq) {
            nlohmann::json r;
            r["J"] = idx.J;
            r["element"] = u.str();
            nlohmann::json sc = nlohmann::json::object();
            for (int a = 1; a <= cfg.m; ++a)
                for (int b = 1; b <= cfg.n; ++b)
                    sc[var_name(cfg.m, cfg.n, (a - 1) * cfg.n + (b - 1))] =
                        predicted_scalar(idx.J, a, b, cfg.m, cfg.n);
            r["predicted_scalars"] = std::move(sc);
            out.push_back(std::move(r));
        }
        std::cout << out.dump() << "\n";
        return 0;
    }
    if (seq.empty()) {
        std::cout << "empty sequence (zero ideal)\n";
        return 0;
    }
    for (size_t j = 0; j < seq.size(); ++j) {
        const auto& [idx, u] = seq[j];
        std::cout << (j + 1) << ". D{";
        for (size_t t = 0; t < idx.J.size(); ++t) std::cout << (t ? "," : "") << idx.J[t];
        std::cout << "} = " << u.str() << "\n   scalars:";
        for (int a = 1; a <= cfg.m; ++a)
            for (int b = 1; b <= cfg.n; ++b)
                std::cout << " " << var_name(cfg.m, cfg.n, (a - 1) * cfg.n + (b - 1)) << ":q^"
                          << predicted_scalar(idx.J, a, b, cfg.m, cfg.n);
        std::cout << "\n";
    }
    return 0;
}

int cmd_verify(const std::string& kind, const RunConfig& cfg) {
    GBOptions opts;
    opts.degree_guard = cfg.degree_guard;
    std::vector<Certificate> certs;
    try {
        if (kind == "polynormal" || kind == "all") {
            std::vector<Permutation> ys;
            if (!cfg.y.empty()) {
                ys.push_back(parse_y(cfg));
            } else {
                auto [cm, word] = coxeter_cm(cfg.m, cfg.n);
                ys = bruhat_interval(cm);
            }
            auto rs = run_pool(ys, cfg.jobs, [&](const Permutation& y) {
                return verify_polynormal(y, cfg.m, cfg.n, opts);
            });
            certs.insert(certs.end(), rs.begin(), rs.end());
        }
        if (kind == "poset" || kind == "all") certs.push_back(verify_poset(cfg.m, cfg.n, opts));
        if (kind == "heights" || kind == "all") certs.push_back(verify_heights(cfg.m, cfg.n, opts));
        if (kind == "separation" || kind == "all")
            certs.push_back(verify_separation(cfg.m, cfg.n, opts));
        if (kind == "exterior" || kind == "all") {
            const int N = cfg.m + cfg.n;
            certs.push_back(ext_ac_suite(N));
            certs.push_back(ext_uq_relations_suite(std::min(N, 4)));
            certs.push_back(ext_braid_basics_suite());
            certs.push_back(ext_extreme_demazure_suite(std::min(N, 4)));
            certs.push_back(ext_inter_suite(cfg.m, cfg.n));
        }
    } catch (const GuardExceeded& e) {
        std::cerr << "degree guard exhausted: " << e.what() << "\n";
        return kExitGuard;
    }
    bool all_pass = true;
    for (const auto& c : certs) {
        emit(c, cfg);
        all_pass = all_pass && c.pass;
    }
    return all_pass ? 0 : kExitFail;
}

int cmd_export_poset(const RunConfig& cfg) {
    std::cout << poset_dot(cfg.m, cfg.n);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"torus-invariant prime ideals of quantum matrices: constructions and verification"};
    app.require_subcommand(1);

    RunConfig cfg;
    auto add_common = [&](CLI::App* sub, bool with_y) {
        sub->add_option("--m", cfg.m, "number of rows")->capture_default_str();
        sub->add_option("--n", cfg.n, "number of columns")->capture_default_str();
        sub->add_option("--format", cfg.format, "text | json")->capture_default_str();
        sub->add_option("--cap", cfg.cap, "hard cap on m*n")->capture_default_str();
        sub->add_flag("--dedup", cfg.dedup, "drop exact duplicate minors after the first occurrence");
        if (with_y)
            sub->add_option("--y", cfg.y, "permutation in one-line notation, or 'top' for c^m");
    };

    CLI::App* list = app.add_subcommand("list-primes", "all T-primes below c^m");
    add_common(list, false);

    CLI::App* gens = app.add_subcommand("generators", "ordered generating sequence for I(y)");
    add_common(gens, true);

    CLI::App* verify = app.add_subcommand(
        "verify", "machine-verify {polynormal|poset|heights|separation|exterior|all}");
    std::string kind;
    verify->add_option("kind", kind, "claim to verify")
        ->required()
        ->check(CLI::IsMember({"polynormal", "poset", "heights", "separation", "exterior", "all"}));
    add_common(verify, true);
    verify->add_option("--degree-guard", cfg.degree_guard, "completion degree cap (0 = 2(m+n))");
    verify->add_option("--jobs", cfg.jobs, "parallel verifications across y values");

    CLI::App* expo = app.add_subcommand("export-poset", "DOT graph of the T-prime poset");
    add_common(expo, false);

    CLI11_PARSE(app, argc, argv);

    int rc = validate(cfg);
    if (rc != 0) return rc;

    try {
        if (list->parsed()) return cmd_list_primes(cfg);
        if (gens->parsed()) return cmd_generators(cfg);
        if (verify->parsed()) return cmd_verify(kind, cfg);
        if (expo->parsed()) return cmd_export_poset(cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
    return 0;
}
