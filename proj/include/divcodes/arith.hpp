#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <utility>

namespace divcodes {

// All counts and bound values are exact; no floating point anywhere.
using Int = boost::multiprecision::cpp_int;

// q^e for e >= 0.
Int int_pow(long long q, long long e);

// Floor division and Euclidean remainder (result in [0, b-1]) for b > 0.
Int floor_div(const Int& a, const Int& b);
Int euclid_mod(const Int& a, const Int& b);

// Decomposes q = p^e with p prime, e >= 1; nullopt when q is not a prime
// power. Supports q up to 2^20.
std::optional<std::pair<long long, int>> prime_power_decompose(long long q);

bool is_prime_power(long long q);

// Throws std::invalid_argument unless q >= 2 is a prime power.
void require_prime_power(long long q);

// Gaussian binomial coefficient: the number of k-subspaces of F_q^v.
// Returns 0 for k < 0 or k > v.
Int gauss_binom(long long v, long long k, long long q);

// s_q(r,i) = q^i + q^{i+1} + ... + q^r = q^i * [r-i+1 choose 1]_q.
Int s_number(int r, int i, long long q);

// Exact floor of the square root; throws on negative input.
Int isqrt(const Int& n);

// Ordinary binomial coefficient (used by the MacWilliams identities).
Int binom(long long n, long long k);

}  // namespace divcodes
