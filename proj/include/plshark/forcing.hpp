#pragma once

#include "plshark/pl_map.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace plshark {

// Result of checking a computed period set for downward closure under the
// Sharkovsky order.  A violation (m, n) means period m was found, m -< n with
// n <= horizon, but period n is absent.  For a correct enumeration on a
// continuous map the list is always empty, which makes this the system's
// strongest self-test; violations are reported, not raised.
struct ForcingReport {
    std::vector<unsigned> periods_found;
    unsigned horizon = 0;
    std::vector<std::pair<unsigned, unsigned>> violations;
    std::optional<std::string> skipped;   // enumeration error, if any

    bool pass() const { return violations.empty() && !skipped; }
};

// Pure closure check on an arbitrary period set (also used to exercise the
// harness on doctored inputs).
std::vector<std::pair<unsigned, unsigned>> forcing_violations(
    const std::vector<unsigned>& periods, unsigned horizon);

ForcingReport verify_forcing_closure(const PLMap& f, unsigned horizon);

// Checks that f realizes exactly the Sharkovsky tail of n: exactly one
// least-period-n orbit, and period_set(f, horizon) equal to tail(n, horizon).
struct CounterexampleReport {
    unsigned n = 0;
    unsigned horizon = 0;
    std::size_t orbit_count = 0;          // least-period-n orbits found
    std::vector<unsigned> periods_found;
    std::vector<unsigned> missing;        // in the tail but absent
    std::vector<unsigned> extra;          // present but not in the tail
    std::optional<std::string> skipped;

    bool pass() const {
        return !skipped && orbit_count == 1 && missing.empty() && extra.empty();
    }
};

CounterexampleReport verify_counterexample(const PLMap& f, unsigned n, unsigned horizon);

std::string to_report(const ForcingReport& r);
std::string to_report(const CounterexampleReport& r);

// One-line machine-readable summaries for CI consumption.
std::string summary_line(const ForcingReport& r);
std::string summary_line(const CounterexampleReport& r);

} // namespace plshark
