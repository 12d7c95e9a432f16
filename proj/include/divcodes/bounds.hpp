#pragma once

#include "divcodes/arith.hpp"

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace divcodes {

// Thrown when a bound formula undercuts a proven construction; never
// reported silently.
class InconsistencyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Parameters of A_q(v,d;k): maximum size of a constant-dimension-k subspace
// code in F_q^v with minimum subspace distance >= d (d even).
struct CodeParams {
    long long q = 2;
    long long v = 1;
    long long d = 2;
    long long k = 1;

    void validate() const;
};

enum class BoundKind { lower, upper, exact };

struct TraceStep {
    long long v = 0;
    long long k = 0;
    Int base;         // A_q(v-1,d;k-1) value used at this level
    Int rem;          // Johnson numerator residue mod [k choose 1]_q
    long long delta = -1;  // delta_max at this level (-1 at non-recursive steps)
    Int value;
    std::string note;
};

struct BoundResult {
    Int value;
    BoundKind kind = BoundKind::upper;
    std::string method;
    std::vector<TraceStep> trace;
};

struct RegistryEntry {
    std::optional<Int> lower;
    std::optional<Int> upper;
    std::string source;
};

// Known values of A_q(v,d;k), resolved identically under k <-> v-k.
class KnownValuesRegistry {
public:
    KnownValuesRegistry() = default;

    // Entries from the literature: A_2(6,4;3) <= 77, A_2(8,6;4) <= 257,
    // A_2(8,6;3) = 34.
    static KnownValuesRegistry with_defaults();

    // JSON list of {q,v,d,k,lower?,upper?,source}
    static KnownValuesRegistry from_json(const std::string& text);
    static KnownValuesRegistry from_file(const std::string& path);

    void add(long long q, long long v, long long d, long long k, RegistryEntry entry);
    std::optional<RegistryEntry> lookup(long long q, long long v, long long d,
                                        long long k) const;
    std::size_t size() const { return entries_.size(); }

private:
    using Key = std::tuple<long long, long long, long long, long long>;
    static Key canonical(long long q, long long v, long long d, long long k);
    std::map<Key, RegistryEntry> entries_;
};

enum class JohnsonMode { classical, improved };

// Theorem-family bounds for partial k-spreads, v = tk + r with t >= 2,
// r in [1, k-1]; nullopt when the parameter window does not apply.
std::optional<Int> thm1_bound(long long q, long long v, long long k);
std::optional<Int> thm2_bound(long long q, long long v, long long k);
std::optional<Int> prop15_bound(long long q, long long v, long long k);

// Lower and upper bounds for A_q(v,2k;k). Exact for k | v (spreads), t = 1,
// and k > [r choose 1]_q.
std::pair<BoundResult, BoundResult> spread_bounds(long long q, long long v, long long k);

// q^14+q^11+q^10+2q^7+q^6+q^3+q^2-2q+1, the closed form for the improved
// bound on A_q(11,6;4); cross-checked against its factored form.
Int prop16_closed_form(long long q);

// (q-1)(k-1): cap on the improvement over the classical Johnson bound at
// one recursion level.
Int improvement_cap_check(long long q, long long k);

// Johnson recursion (classical or with the divisibility improvement), with
// registry upper bounds applied at every recursion node. Memoized per engine.
class BoundEngine {
public:
    BoundEngine(const KnownValuesRegistry& registry, JohnsonMode mode)
        : registry_(registry), mode_(mode) {}

    BoundResult upper_bound(const CodeParams& p);

private:
    BoundResult compute(const CodeParams& p);

    const KnownValuesRegistry& registry_;
    JohnsonMode mode_;
    std::map<std::tuple<long long, long long, long long, long long>, BoundResult> cache_;
};

BoundResult upper_bound(const CodeParams& p, const KnownValuesRegistry& registry,
                        JohnsonMode mode);

}  // namespace divcodes
