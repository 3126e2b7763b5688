#include "plshark/sharkovsky.hpp"

#include "plshark/errors.hpp"

#include <algorithm>

namespace plshark {

SharkovskyKey decompose(std::uint64_t n) {
    if (n == 0)
        throw DomainError("decompose: n must be positive");
    SharkovskyKey key{n, n, 0};
    while ((key.odd_part & 1) == 0) {
        key.odd_part >>= 1;
        ++key.two_exponent;
    }
    return key;
}

bool precedes(std::uint64_t m, std::uint64_t n) {
    const SharkovskyKey a = decompose(m);
    const SharkovskyKey b = decompose(n);
    const bool a_odd_type = a.odd_part > 1;
    const bool b_odd_type = b.odd_part > 1;
    if (a_odd_type && b_odd_type)
        return a.two_exponent < b.two_exponent ||
               (a.two_exponent == b.two_exponent && a.odd_part < b.odd_part);
    if (a_odd_type)
        return true;    // every 2^e * odd precedes every power of two
    if (b_odd_type)
        return false;
    return a.two_exponent > b.two_exponent;   // powers of two descend, 1 last
}

bool precedes_or_equal(std::uint64_t m, std::uint64_t n) {
    return m == n || precedes(m, n);
}

std::vector<std::uint64_t> sharkovsky_tail(std::uint64_t m, std::uint64_t horizon) {
    if (m == 0 || horizon == 0)
        throw DomainError("sharkovsky_tail: arguments must be positive");
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = 1; n <= horizon; ++n)
        if (precedes_or_equal(m, n))
            out.push_back(n);
    std::sort(out.begin(), out.end(),
              [](std::uint64_t x, std::uint64_t y) { return precedes(x, y); });
    return out;
}

} // namespace plshark
