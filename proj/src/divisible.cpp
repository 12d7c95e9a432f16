#include "divcodes/divisible.hpp"

namespace divcodes {

Int SqrExpansion::cross_sum() const {
    Int sigma = leading;
    for (int a : digits)
        sigma += a;
    return sigma;
}

Int SqrExpansion::reconstruct() const {
    Int total = leading * int_pow(q, r);
    for (int i = 0; i < r; ++i)
        total += digits[i] * s_number(r, i, q);
    return total;
}

Int DivisibleWitness::cardinality() const {
    Int total = 0;
    for (const auto& [i, count] : blocks)
        total += count * s_number(r, i, q);
    return total;
}

SqrExpansion expand(const Int& n, long long q, int r) {
    require_prime_power(q);
    if (r < 0)
        throw std::invalid_argument("expand: r must be non-negative");
    SqrExpansion e;
    e.q = q;
    e.r = r;
    e.n = n;
    Int m = n;
    for (int i = 0; i < r; ++i) {
        Int a = euclid_mod(m, q);
        e.digits.push_back(static_cast<int>(a));
        m = (m - a * gauss_binom(r - i + 1, 1, q)) / q;  // exact
    }
    e.leading = m;
    return e;
}

bool exists_divisible(const Int& n, long long q, int r) {
    return expand(n, q, r).leading >= 0;
}

Int frobenius(long long q, int r) {
    require_prime_power(q);
    if (r < 0)
        throw std::invalid_argument("frobenius: r must be non-negative");
    return r * int_pow(q, r + 1) - gauss_binom(r + 1, 1, q);
}

std::optional<DivisibleWitness> witness(const Int& n, long long q, int r) {
    if (n < 0)
        throw std::invalid_argument("witness: n must be non-negative");
    SqrExpansion e = expand(n, q, r);
    if (e.leading < 0)
        return std::nullopt;
    DivisibleWitness w;
    w.q = q;
    w.r = r;
    for (int i = 0; i < r; ++i)
        if (e.digits[i] > 0)
            w.blocks.emplace_back(i, e.digits[i]);
    if (e.leading > 0)
        w.blocks.emplace_back(r, e.leading);
    return w;
}

std::optional<Int> max_weight_bound(const Int& n, long long q, int r) {
    if (n < 1)
        throw std::invalid_argument("max_weight_bound: n must be >= 1");
    SqrExpansion e = expand(n, q, r);
    if (e.leading < 0)
        return std::nullopt;
    return e.cross_sum() * int_pow(q, r);
}

long long delta_max(const Int& rem, long long q, int k) {
    require_prime_power(q);
    if (k < 1)
        throw std::invalid_argument("delta_max: k must be >= 1");
    Int g = gauss_binom(k, 1, q);
    if (rem < 0 || rem >= g)
        throw std::invalid_argument("delta_max: rem out of range [0, [k]_q - 1]");
    // Every cardinality above the Frobenius number is realizable, so search
    // downward from the smallest delta with rem + delta*g > F. Realizable
    // cardinalities are not upward-closed below F, hence top-down.
    Int f = frobenius(q, k - 1);
    Int top = -floor_div(-(f - rem), g);  // ceil((F - rem) / g)
    for (Int d = top; d >= 0; --d) {
        if (!exists_divisible(rem + d * g, q, k - 1))
            return static_cast<long long>(d);
    }
    return -1;  // m(-1) < 0 is never realizable
}

}  // namespace divcodes
