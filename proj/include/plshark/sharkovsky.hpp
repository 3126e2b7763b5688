#pragma once

#include <cstdint>
#include <vector>

namespace plshark {

// n = 2^two_exponent * odd_part, the unique decomposition driving the order.
// odd_part == 1 exactly when n is a power of two.
struct SharkovskyKey {
    std::uint64_t n = 0;
    std::uint64_t odd_part = 0;
    unsigned two_exponent = 0;
};

SharkovskyKey decompose(std::uint64_t n);

// Strict Sharkovsky order m -< n:
//   3 -< 5 -< 7 -< ... -< 2*3 -< 2*5 -< ... -< 2^2*3 -< ... -< 2^3 -< 2^2 -< 2 -< 1.
// Numbers with odd part > 1 come first, ordered by exponent then odd part;
// powers of two come last, in descending order.
bool precedes(std::uint64_t m, std::uint64_t n);

bool precedes_or_equal(std::uint64_t m, std::uint64_t n);

// { n : 1 <= n <= horizon, n = m or m -< n }, sorted by the order itself so the
// strongest period comes first.
std::vector<std::uint64_t> sharkovsky_tail(std::uint64_t m, std::uint64_t horizon);

} // namespace plshark
