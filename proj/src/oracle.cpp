#include "divcodes/oracle.hpp"

#include <string>
#include <unordered_set>

namespace divcodes {

namespace {

struct Searcher {
    const Geometry& geo;
    int num_points;
    int num_hyps;
    long long divisor;  // q^r
    long long target;
    long long target_mod;
    long long cap;
    std::optional<long long> budget;
    long long nodes = 0;

    std::vector<std::vector<int>> incident;   // point -> hyperplanes through it
    std::vector<std::vector<int>> finish_at;  // point -> hyperplanes it closes
    std::vector<int> last;                    // hyperplane -> last incident point
    std::vector<long long> residue;           // running section sums mod q^r
    std::vector<long long> mult;
    std::unordered_set<std::string> failed;

    Searcher(const Geometry& g, long long divisor, long long target, long long cap,
             std::optional<long long> budget)
        : geo(g),
          num_points(static_cast<int>(g.num_points())),
          num_hyps(static_cast<int>(g.num_points())),
          divisor(divisor),
          target(target),
          target_mod(target % divisor),
          cap(cap),
          budget(budget),
          incident(num_points),
          finish_at(num_points),
          last(num_hyps, -1),
          residue(num_hyps, 0),
          mult(num_points, 0) {
        for (int h = 0; h < num_hyps; ++h)
            for (int p = 0; p < num_points; ++p)
                if (geo.incident(h, p)) {
                    incident[p].push_back(h);
                    last[h] = p;
                }
        for (int h = 0; h < num_hyps; ++h)
            finish_at[last[h]].push_back(h);
    }

    std::string state_key(int idx, long long rem) const {
        // residues of hyperplanes that still have unassigned incident points
        std::string key;
        key.reserve(2 + num_hyps);
        key.push_back(static_cast<char>(idx));
        key.append(reinterpret_cast<const char*>(&rem), sizeof rem);
        for (int h = 0; h < num_hyps; ++h)
            if (last[h] >= idx)
                key.push_back(static_cast<char>(residue[h]));
        return key;
    }

    bool dfs(int idx, long long rem) {
        if (idx == num_points)
            return rem == 0;
        if (rem > cap * (num_points - idx))
            return false;  // remaining capacity cannot reach the target
        std::string key = state_key(idx, rem);
        if (failed.count(key))
            return false;
        long long top = std::min(cap, rem);
        for (long long m = 0; m <= top; ++m) {
            if (budget && ++nodes > *budget)
                throw InconclusiveError("oracle: node budget exhausted");
            mult[idx] = m;
            for (int h : incident[idx])
                residue[h] = (residue[h] + m) % divisor;
            bool viable = true;
            for (int h : finish_at[idx])
                if (residue[h] != target_mod) {
                    viable = false;
                    break;
                }
            if (viable && dfs(idx + 1, rem - m)) {
                for (int h : incident[idx])
                    residue[h] = (residue[h] - m % divisor + divisor) % divisor;
                return true;
            }
            for (int h : incident[idx])
                residue[h] = (residue[h] - m % divisor + divisor) % divisor;
        }
        mult[idx] = 0;
        failed.insert(std::move(key));
        return false;
    }
};

}  // namespace

SearchResult search_exists(const SearchConfig& cfg) {
    require_prime_power(cfg.q);
    if (cfg.q > 3 || cfg.r < 0 || cfg.r > 3)
        throw std::invalid_argument("search_exists: guarded domain is q <= 3, r <= 3");
    if (cfg.n < 0)
        throw std::invalid_argument("search_exists: n must be non-negative");

    long long n = static_cast<long long>(cfg.n);
    Int cap_int = cfg.max_mult.value_or(cfg.n);
    if (cap_int < 0)
        throw std::invalid_argument("search_exists: max_mult must be non-negative");
    long long cap = static_cast<long long>(std::min(cap_int, cfg.n));

    const Geometry& geo = Geometry::get(cfg.q, cfg.r + 1);
    long long divisor = static_cast<long long>(int_pow(cfg.q, cfg.r));
    Searcher searcher(geo, divisor, n, cap, cfg.node_budget);

    SearchResult result;
    result.found = searcher.dfs(0, n);
    result.nodes = searcher.nodes;
    if (result.found) {
        PointMultiset example(cfg.q, cfg.r + 1);
        for (int p = 0; p < searcher.num_points; ++p)
            if (searcher.mult[p] > 0)
                example.set(static_cast<std::uint32_t>(p), searcher.mult[p]);
        result.example = std::move(example);
    }
    return result;
}

std::set<long long> realizable_set(long long q, int r, long long n_max) {
    std::set<long long> realizable;
    for (long long n = 0; n <= n_max; ++n) {
        SearchConfig cfg;
        cfg.q = q;
        cfg.r = r;
        cfg.n = n;
        if (search_exists(cfg).found)
            realizable.insert(n);
    }
    return realizable;
}

}  // namespace divcodes
