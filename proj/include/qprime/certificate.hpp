#ifndef QPRIME_CERTIFICATE_HPP
#define QPRIME_CERTIFICATE_HPP

#include <optional>
#include <string>
#include <vector>

namespace qprime {

struct ScalarRecord {
    std::string generator;        // e.g. "x21"
    long predicted = 0;           // exponent of q from the weight formula
    std::optional<long> observed; // empirically extracted exponent, if determined
    bool both_sides_zero = false; // both normal forms vanished, any scalar works
};

// Machine-checkable verification record. A failing certificate always carries
// a concrete counterexample witness.
struct Certificate {
    std::string claim;
    int m = 0, n = 0;
    std::optional<std::string> y; // one-line notation when the claim is per-y
    bool pass = false;
    std::vector<std::string> witnesses;
    std::vector<ScalarRecord> scalars;
    long elapsed_ms = 0;

    std::string to_json() const;
    std::string summary() const; // one text line
};

} // namespace qprime

#endif
