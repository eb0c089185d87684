#include "qprime/certificate.hpp"

#include <sstream>

#include "json.hpp"

namespace qprime {

std::string Certificate::to_json() const {
    nlohmann::json j;
    j["claim"] = claim;
    j["m"] = m;
    j["n"] = n;
    if (y) j["y"] = *y;
    j["status"] = pass ? "pass" : "fail";
    j["witnesses"] = witnesses;
    nlohmann::json sc = nlohmann::json::array();
    for (const auto& s : scalars) {
        nlohmann::json e;
        e["generator"] = s.generator;
        e["predicted"] = s.predicted;
        if (s.observed) e["observed"] = *s.observed;
        else e["observed"] = nullptr;
        e["both_sides_zero"] = s.both_sides_zero;
        sc.push_back(std::move(e));
    }
    j["predicted_vs_observed_scalars"] = std::move(sc);
    j["elapsed_ms"] = elapsed_ms;
    return j.dump();
}

std::string Certificate::summary() const {
    std::ostringstream os;
    os << (pass ? "pass" : "FAIL") << "  " << claim << "  m=" << m << " n=" << n;
    if (y) os << " y=" << *y;
    os << "  (" << elapsed_ms << " ms)";
    if (!pass && !witnesses.empty()) os << "  [" << witnesses.front() << "]";
    return os.str();
}

} // namespace qprime
