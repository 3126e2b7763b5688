#include "plshark/rat.hpp"

namespace plshark {

Rat make_rat(long num, long den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Rat& q) {
    return q.get_str();
}

double to_double(const Rat& q) {
    return q.get_d();
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty())
        return false;
    for (char c : s)
        if (c < '0' || c > '9')
            return false;
    return true;
}

} // namespace

std::optional<Rat> parse_rat(std::string_view text) {
    std::string_view num = text;
    std::string_view den;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
        if (!all_digits(den))
            return std::nullopt;   // denominator must be bare digits (positive)
    }
    std::string_view mag = num;
    if (!mag.empty() && mag.front() == '-')
        mag.remove_prefix(1);
    if (!all_digits(mag))
        return std::nullopt;

    mpz_class n(std::string(num), 10);
    if (den.empty())
        return Rat(n);
    mpz_class d(std::string(den), 10);
    if (d == 0)
        return std::nullopt;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    if (g != 1)
        return std::nullopt;       // unreduced (this also rejects "0/5")
    return Rat(n, d);
}

} // namespace plshark
