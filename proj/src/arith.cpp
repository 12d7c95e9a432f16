#include "divcodes/arith.hpp"

namespace divcodes {

Int int_pow(long long q, long long e) {
    if (e < 0)
        throw std::invalid_argument("int_pow: negative exponent");
    Int result = 1;
    Int base = q;
    while (e > 0) {
        if (e & 1)
            result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

Int floor_div(const Int& a, const Int& b) {
    if (b <= 0)
        throw std::invalid_argument("floor_div: divisor must be positive");
    Int q = a / b;  // truncates towards zero
    if (q * b > a)
        --q;
    return q;
}

Int euclid_mod(const Int& a, const Int& b) {
    return a - floor_div(a, b) * b;
}

std::optional<std::pair<long long, int>> prime_power_decompose(long long q) {
    if (q < 2 || q > (1LL << 20))
        return std::nullopt;
    // smallest prime factor
    long long p = 0;
    for (long long d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0)
        return std::make_pair(q, 1);  // q itself is prime
    long long m = q;
    int e = 0;
    while (m % p == 0) {
        m /= p;
        ++e;
    }
    if (m != 1)
        return std::nullopt;
    return std::make_pair(p, e);
}

bool is_prime_power(long long q) {
    return prime_power_decompose(q).has_value();
}

void require_prime_power(long long q) {
    if (!is_prime_power(q))
        throw std::invalid_argument("q must be a prime power >= 2");
}

Int gauss_binom(long long v, long long k, long long q) {
    if (v < 0)
        throw std::invalid_argument("gauss_binom: v must be non-negative");
    require_prime_power(q);
    if (k < 0 || k > v)
        return 0;
    if (k > v - k)
        k = v - k;
    // numerator (q^v-1)...(q^{v-k+1}-1), denominator (q^k-1)...(q-1);
    // the quotient is integral, so a single exact division suffices.
    Int num = 1, den = 1;
    for (long long i = 0; i < k; ++i) {
        num *= int_pow(q, v - i) - 1;
        den *= int_pow(q, k - i) - 1;
    }
    return num / den;
}

Int s_number(int r, int i, long long q) {
    require_prime_power(q);
    if (r < 0 || i < 0 || i > r)
        throw std::invalid_argument("s_number: need 0 <= i <= r");
    return int_pow(q, i) * gauss_binom(r - i + 1, 1, q);
}

Int isqrt(const Int& n) {
    if (n < 0)
        throw std::invalid_argument("isqrt: negative input");
    return boost::multiprecision::sqrt(n);
}

Int binom(long long n, long long k) {
    if (k < 0 || k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    Int result = 1;
    for (long long i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

}  // namespace divcodes
