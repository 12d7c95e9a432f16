#pragma once

#include "divcodes/geometry.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace divcodes {

using Rational = boost::multiprecision::cpp_rational;

// Codeword-weight counts A_0..A_n of a linear [n,k] code over F_q. Entries
// are exact rationals so that the MacWilliams transform of an arbitrary
// distribution can be represented; genuine codes always have non-negative
// integer entries (checked by integral()/nonnegative()).
struct WeightDistribution {
    long long n = 0;
    long long k = 0;
    long long q = 2;
    std::vector<Rational> counts;  // size n+1

    bool integral() const;
    bool nonnegative() const;
    Rational total() const;  // must equal q^k for a genuine code
};

struct CodePredicates {
    bool full_length = false;  // A_1^perp = 0
    bool projective = false;   // A_1^perp = A_2^perp = 0
};

// Weight distribution of the code generated by the multiset: the weight of
// the codeword for functional a is n - #(P cap a^perp). The code dimension
// is the span dimension of the support; functionals are enumerated inside
// the span so A_0 = 1 always.
WeightDistribution weight_distribution(const PointMultiset& p);

// Dual distribution via exact forward substitution in the MacWilliams
// identities; dual dimension n - k. Entries may be non-integral or negative
// for distributions that do not come from actual codes; that is data, not
// an error.
WeightDistribution macwilliams_dual(const WeightDistribution& w);

// All nonzero weights with A_i != 0 are multiples of delta.
bool divisible_by(const WeightDistribution& w, const Int& delta);

CodePredicates predicates(const WeightDistribution& dual);

}  // namespace divcodes
