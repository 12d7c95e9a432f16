#pragma once

#include "divcodes/arith.hpp"

#include <optional>
#include <vector>

namespace divcodes {

// The S_q(r)-adic expansion of an integer n:
//   n = sum_{i=0}^{r-1} digits[i] * s_q(r,i) + leading * q^r
// with digits in [0, q-1] and leading an arbitrary integer. The
// representation is unique, and leading >= 0 holds exactly when a
// q^r-divisible multiset of points of cardinality n exists.
struct SqrExpansion {
    long long q = 2;
    int r = 0;
    std::vector<int> digits;  // a_0 .. a_{r-1}
    Int leading;              // a_r
    Int n;

    // sigma = a_0 + ... + a_r
    Int cross_sum() const;

    // sum_i a_i * s_q(r,i); must reproduce n
    Int reconstruct() const;
};

// Block decomposition certifying realizability: `count` copies of the
// q^i-fold repetition of an (r-i+1)-subspace per block (i, count).
struct DivisibleWitness {
    long long q = 2;
    int r = 0;
    std::vector<std::pair<int, Int>> blocks;  // (level i, count >= 0)

    Int cardinality() const;
};

SqrExpansion expand(const Int& n, long long q, int r);

// True iff a q^r-divisible multiset of points of cardinality n exists.
bool exists_divisible(const Int& n, long long q, int r);

// Largest n with no q^r-divisible multiset of cardinality n;
// equals r*q^{r+1} - [r+1 choose 1]_q (and -1 for r = 0).
Int frobenius(long long q, int r);

// Canonical witness from the expansion digits; nullopt when none exists.
std::optional<DivisibleWitness> witness(const Int& n, long long q, int r);

// sigma * q^r, an upper bound on the maximum weight of a full-length
// linear q^r-divisible code of length n; nullopt when n is not realizable.
std::optional<Int> max_weight_bound(const Int& n, long long q, int r);

// Largest delta such that no q^{k-1}-divisible multiset of cardinality
// rem + delta*[k choose 1]_q exists. Always >= -1. rem must be in
// [0, [k choose 1]_q - 1].
long long delta_max(const Int& rem, long long q, int k);

}  // namespace divcodes
