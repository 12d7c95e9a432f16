#include "divcodes/bounds.hpp"

#include "divcodes/divisible.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace divcodes {

void CodeParams::validate() const {
    require_prime_power(q);
    if (v < 1 || k < 1 || k > v)
        throw std::invalid_argument("CodeParams: need 1 <= k <= v");
    if (d < 2 || d % 2 != 0)
        throw std::invalid_argument("CodeParams: subspace distance must be even and >= 2");
}

KnownValuesRegistry::Key KnownValuesRegistry::canonical(long long q, long long v,
                                                        long long d, long long k) {
    return {q, v, d, std::min(k, v - k)};
}

void KnownValuesRegistry::add(long long q, long long v, long long d, long long k,
                              RegistryEntry entry) {
    if (entry.lower && entry.upper && *entry.lower > *entry.upper)
        throw std::invalid_argument("registry: lower > upper");
    auto key = canonical(q, v, d, k);
    auto& slot = entries_[key];
    if (entry.lower && (!slot.lower || *entry.lower > *slot.lower))
        slot.lower = entry.lower;
    if (entry.upper && (!slot.upper || *entry.upper < *slot.upper))
        slot.upper = entry.upper;
    if (!entry.source.empty())
        slot.source = entry.source;
    if (slot.lower && slot.upper && *slot.lower > *slot.upper)
        throw InconsistencyError("registry: merged lower > upper");
}

std::optional<RegistryEntry> KnownValuesRegistry::lookup(long long q, long long v,
                                                         long long d, long long k) const {
    auto it = entries_.find(canonical(q, v, d, k));
    if (it == entries_.end())
        return std::nullopt;
    return it->second;
}

KnownValuesRegistry KnownValuesRegistry::with_defaults() {
    KnownValuesRegistry reg;
    reg.add(2, 6, 4, 3, {std::nullopt, Int(77), "Honold-Kiermaier-Kurz 2015, A_2(6,4;3)=77"});
    reg.add(2, 8, 6, 4, {std::nullopt, Int(257), "Heinlein et al., A_2(8,6;4)=257"});
    reg.add(2, 8, 6, 3, {Int(34), Int(34), "El-Zanati et al. 2010, A_2(8,6;3)=34"});
    return reg;
}

KnownValuesRegistry KnownValuesRegistry::from_json(const std::string& text) {
    KnownValuesRegistry reg;
    nlohmann::json doc = nlohmann::json::parse(text);
    for (const auto& rec : doc) {
        RegistryEntry entry;
        auto get_int = [&](const char* field) -> std::optional<Int> {
            if (!rec.contains(field))
                return std::nullopt;
            const auto& j = rec.at(field);
            if (j.is_string())
                return Int(j.get<std::string>());
            return Int(j.get<long long>());
        };
        entry.lower = get_int("lower");
        entry.upper = get_int("upper");
        if (rec.contains("source"))
            entry.source = rec.at("source").get<std::string>();
        reg.add(rec.at("q").get<long long>(), rec.at("v").get<long long>(),
                rec.at("d").get<long long>(), rec.at("k").get<long long>(), entry);
    }
    return reg;
}

KnownValuesRegistry KnownValuesRegistry::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open registry file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return from_json(buffer.str());
}

std::optional<Int> thm1_bound(long long q, long long v, long long k) {
    long long r = v % k;
    long long t = v / k;
    if (r < 1 || t < 2 || k <= r)
        return std::nullopt;
    Int gr = gauss_binom(r, 1, q);
    // the bound is increasing in z, so take the minimal feasible z
    Int z = gr + 1 - k;
    if (z < 0)
        z = 0;
    if (2 * z > gr)
        return std::nullopt;
    Int l = (int_pow(q, v - k) - int_pow(q, r)) / (int_pow(q, k) - 1);
    return l * int_pow(q, k) + 1 + z * (q - 1);
}

std::optional<Int> thm2_bound(long long q, long long v, long long k) {
    long long r = v % k;
    long long t = v / k;
    if (r < 1 || t < 2 || k <= r)
        return std::nullopt;
    Int z = gauss_binom(r, 1, q) + 1 - k;
    if (z < 0)
        return std::nullopt;
    Int l = (int_pow(q, v - k) - int_pow(q, r)) / (int_pow(q, k) - 1);
    std::optional<Int> best;
    for (long long y = std::max(r, 2LL); y <= k; ++y) {
        Int lambda = int_pow(q, y);
        Int disc = 1 + 4 * lambda * (lambda - (z + y - 1) * (q - 1) - 1);
        if (disc < 1)
            continue;
        // ceil(lambda - 1/2 - sqrt(disc)/2) = lambda - floor((1 + isqrt(disc)) / 2)
        Int value = l * int_pow(q, k) + lambda - (1 + isqrt(disc)) / 2;
        if (!best || value < *best)
            best = value;
    }
    return best;
}

std::optional<Int> prop15_bound(long long q, long long v, long long k) {
    long long r = v % k;
    if (r < 1)
        return std::nullopt;
    Int z = gauss_binom(r, 1, q) - k - 1;
    if (z < 0)
        return std::nullopt;  // the proof decomposes z into non-negative digits
    return (int_pow(q, v) - int_pow(q, k + r)) / (int_pow(q, k) - 1) + q * z + 1;
}

std::pair<BoundResult, BoundResult> spread_bounds(long long q, long long v, long long k) {
    require_prime_power(q);
    if (k < 1 || k > v)
        throw std::invalid_argument("spread_bounds: need 1 <= k <= v");

    if (v % k == 0) {
        // Segre: spreads exist exactly when k | v
        Int size = (int_pow(q, v) - 1) / (int_pow(q, k) - 1);
        BoundResult exact{size, BoundKind::exact, "spread-exact", {}};
        return {exact, exact};
    }

    long long r = v % k;
    long long t = v / k;
    if (t == 1) {
        // any two k-subspaces of F_q^{k+r} with r < k intersect nontrivially
        BoundResult one{Int(1), BoundKind::exact, "spread-exact", {}};
        return {one, one};
    }

    // Beutelspacher construction
    Int lower_value = (int_pow(q, v) - int_pow(q, k + r)) / (int_pow(q, k) - 1) + 1;
    BoundResult lower{lower_value, BoundKind::lower, "spread-construction", {}};

    Int upper_value = floor_div(int_pow(q, v) - 1, int_pow(q, k) - 1);
    std::string method = "classical-johnson";
    auto consider = [&](std::optional<Int> candidate, const char* tag) {
        if (candidate && *candidate < upper_value) {
            upper_value = *candidate;
            method = tag;
        }
    };
    consider(thm1_bound(q, v, k), "thm1");
    consider(thm2_bound(q, v, k), "thm2");
    consider(prop15_bound(q, v, k), "prop15");

    bool exact = false;
    if (k > gauss_binom(r, 1, q)) {
        // Nastase-Sissokho: the construction is optimal
        upper_value = lower_value;
        method = "cor14";
        exact = true;
    }

    if (upper_value < lower_value)
        throw InconsistencyError("spread_bounds: upper bound undercuts the construction");
    if (upper_value == lower_value)
        exact = true;

    BoundResult upper{upper_value, exact ? BoundKind::exact : BoundKind::upper, method, {}};
    if (exact)
        lower.kind = BoundKind::exact;
    return {lower, upper};
}

Int prop16_closed_form(long long q) {
    require_prime_power(q);
    auto p = [&](long long e) { return int_pow(q, e); };
    Int direct = p(14) + p(11) + p(10) + 2 * p(7) + p(6) + p(3) + p(2) - 2 * q + 1;
    Int factored = (p(2) - q + 1) * (p(12) + p(11) + p(8) + p(7) + p(5) + 2 * p(4) +
                                     p(3) - p(2) - q + 1);
    if (direct != factored)
        throw std::logic_error("prop16_closed_form: factorizations disagree");
    return direct;
}

Int improvement_cap_check(long long q, long long k) {
    if (k < 1)
        throw std::invalid_argument("improvement_cap_check: k must be >= 1");
    return Int(q - 1) * (k - 1);
}

BoundResult BoundEngine::upper_bound(const CodeParams& p) {
    p.validate();
    auto key = std::make_tuple(p.q, p.v, p.d, std::min(p.k, p.v - p.k));
    auto it = cache_.find(key);
    if (it != cache_.end())
        return it->second;
    BoundResult result = compute(p);
    cache_[key] = result;
    return result;
}

BoundResult BoundEngine::compute(const CodeParams& p) {
    long long q = p.q, v = p.v, d = p.d;
    long long k = std::min(p.k, p.v - p.k);  // A_q(v,d;k) = A_q(v,d;v-k)

    BoundResult result;
    if (k == 0 || d > 2 * k) {
        result = {Int(1), BoundKind::exact, "singleton-trivial", {}};
    } else if (d == 2) {
        result = {gauss_binom(v, k, q), BoundKind::exact, "gaussian", {}};
    } else if (d == 2 * k) {
        result = spread_bounds(q, v, k).second;
    } else {
        BoundResult base = upper_bound({q, v - 1, d, k - 1});
        Int g = gauss_binom(k, 1, q);
        Int numerator = gauss_binom(v, 1, q) * base.value;
        Int rem = euclid_mod(numerator, g);
        Int classical = floor_div(numerator, g);
        TraceStep step;
        step.v = v;
        step.k = k;
        step.base = base.value;
        step.rem = rem;
        step.value = classical;
        result.kind = BoundKind::upper;
        result.method = "classical-johnson";
        if (mode_ == JohnsonMode::improved) {
            step.delta = delta_max(rem, q, k);
            step.value = classical - (step.delta + 1);
            result.method = "improved-johnson";
            Int improvement = classical - step.value;
            if (improvement > improvement_cap_check(q, k))
                throw InconsistencyError(
                    "johnson: improvement exceeds the (q-1)(k-1) cap");
        }
        result.value = step.value;
        result.trace = base.trace;
        result.trace.push_back(step);
    }

    // the recursion stays valid with any correct upper bound substituted
    if (auto entry = registry_.lookup(q, v, d, k); entry && entry->upper) {
        if (*entry->upper < result.value) {
            if (result.kind == BoundKind::exact)
                throw InconsistencyError("registry upper bound below an exact value");
            result.value = *entry->upper;
            result.method = "registry";
            TraceStep step;
            step.v = v;
            step.k = k;
            step.value = result.value;
            step.note = "registry: " + entry->source;
            result.trace.push_back(step);
        }
    }
    return result;
}

BoundResult upper_bound(const CodeParams& p, const KnownValuesRegistry& registry,
                        JohnsonMode mode) {
    BoundEngine engine(registry, mode);
    return engine.upper_bound(p);
}

}  // namespace divcodes
