#pragma once

#include "divcodes/geometry.hpp"

#include <optional>
#include <set>
#include <stdexcept>

namespace divcodes {

// Thrown when the node budget runs out before the search is exhaustive; a
// budget-limited search must never masquerade as a non-existence proof.
class InconclusiveError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SearchConfig {
    long long q = 2;
    int r = 1;
    Int n = 0;
    std::optional<Int> max_mult;            // default: n
    std::optional<long long> node_budget;   // default: unlimited
};

struct SearchResult {
    bool found = false;
    std::optional<PointMultiset> example;
    long long nodes = 0;
};

// Exhaustive depth-first search for a q^r-divisible multiset of cardinality
// n on the points of PG(r, q), in point index order with per-hyperplane
// residue pruning. Guarded to the desk-scale domain q <= 3, r <= 3.
SearchResult search_exists(const SearchConfig& cfg);

// {n <= n_max : search_exists true}
std::set<long long> realizable_set(long long q, int r, long long n_max);

}  // namespace divcodes
