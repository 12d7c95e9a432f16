#include "divcodes/geometry.hpp"

#include <algorithm>
#include <mutex>

namespace divcodes {

namespace {

constexpr long long kMaxQ = 9;
constexpr int kMaxV = 8;

std::uint64_t pack(const CoordVec& coords) {
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < coords.size(); ++i)
        key |= static_cast<std::uint64_t>(coords[i]) << (4 * i);
    return key;
}

// Evaluates a polynomial (coefficients mod p, index = degree) at x.
int poly_eval(const std::vector<int>& poly, int x, long long p) {
    long long value = 0;
    for (auto it = poly.rbegin(); it != poly.rend(); ++it)
        value = (value * x + *it) % p;
    return static_cast<int>(value);
}

}  // namespace

FieldTable::FieldTable(long long q) : q_(q) {
    auto decomp = prime_power_decompose(q);
    if (!decomp || q > kMaxQ)
        throw std::invalid_argument("FieldTable: q must be a prime power <= 9");
    p_ = decomp->first;
    e_ = decomp->second;

    if (e_ == 1) {
        modulus_ = {0, 1};  // x, unused for prime fields
    } else {
        // Lexicographically smallest monic irreducible of degree e over F_p,
        // ordered by the base-p encoding of the lower coefficients. For
        // e <= 3, irreducible == no roots in F_p.
        for (long long t = 0;; ++t) {
            std::vector<int> f(e_ + 1, 0);
            f[e_] = 1;
            long long rest = t;
            for (int j = 0; j < e_; ++j) {
                f[j] = static_cast<int>(rest % p_);
                rest /= p_;
            }
            bool has_root = false;
            for (int x = 0; x < p_ && !has_root; ++x)
                has_root = poly_eval(f, x, p_) == 0;
            if (!has_root) {
                modulus_ = f;
                break;
            }
        }
    }

    auto digits = [&](long long code) {
        std::vector<int> d(e_, 0);
        for (int j = 0; j < e_; ++j) {
            d[j] = static_cast<int>(code % p_);
            code /= p_;
        }
        return d;
    };
    auto encode = [&](const std::vector<int>& d) {
        long long code = 0;
        for (int j = e_ - 1; j >= 0; --j)
            code = code * p_ + d[j];
        return code;
    };

    add_.resize(q_ * q_);
    mul_.resize(q_ * q_);
    neg_.resize(q_);
    inv_.assign(q_, 0);
    for (long long a = 0; a < q_; ++a) {
        auto da = digits(a);
        std::vector<int> na(e_);
        for (int j = 0; j < e_; ++j)
            na[j] = (p_ - da[j]) % p_;
        neg_[a] = static_cast<Coord>(encode(na));
        for (long long b = 0; b < q_; ++b) {
            auto db = digits(b);
            std::vector<int> sum(e_);
            for (int j = 0; j < e_; ++j)
                sum[j] = (da[j] + db[j]) % p_;
            add_[a * q_ + b] = static_cast<Coord>(encode(sum));

            std::vector<int> prod(2 * e_ - 1, 0);
            for (int i = 0; i < e_; ++i)
                for (int j = 0; j < e_; ++j)
                    prod[i + j] = (prod[i + j] + da[i] * db[j]) % static_cast<int>(p_);
            // reduce modulo the monic irreducible
            for (int d = 2 * e_ - 2; d >= e_; --d) {
                int c = prod[d];
                if (c == 0)
                    continue;
                prod[d] = 0;
                for (int j = 0; j < e_; ++j)
                    prod[d - e_ + j] =
                        (prod[d - e_ + j] + (p_ - modulus_[j]) * c) % static_cast<int>(p_);
            }
            prod.resize(e_);
            mul_[a * q_ + b] = static_cast<Coord>(encode(prod));
        }
    }
    for (long long a = 1; a < q_; ++a)
        for (long long b = 1; b < q_; ++b)
            if (mul_[a * q_ + b] == 1)
                inv_[a] = static_cast<Coord>(b);
}

Coord FieldTable::inv(Coord a) const {
    if (a == 0)
        throw std::invalid_argument("FieldTable: inverse of zero");
    return inv_[a];
}

const FieldTable& FieldTable::get(long long q) {
    static std::mutex mutex;
    static std::map<long long, FieldTable> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(q);
    if (it == cache.end())
        it = cache.emplace(q, FieldTable(q)).first;
    return it->second;
}

Geometry::Geometry(long long q, int v) : q_(q), v_(v), field_(FieldTable::get(q)) {
    if (v < 1 || v > kMaxV)
        throw std::invalid_argument("Geometry: v must be in [1, 8]");
    CoordVec coords(v, 0);
    // all vectors of F_q^v in lex order, keeping the normalized ones
    while (true) {
        auto first_nonzero = std::find_if(coords.begin(), coords.end(),
                                          [](Coord c) { return c != 0; });
        if (first_nonzero != coords.end() && *first_nonzero == 1) {
            index_[pack(coords)] = static_cast<std::uint32_t>(points_.size());
            points_.push_back(coords);
        }
        int pos = v - 1;
        while (pos >= 0 && coords[pos] == q - 1)
            coords[pos--] = 0;
        if (pos < 0)
            break;
        ++coords[pos];
    }
}

const Geometry& Geometry::get(long long q, int v) {
    static std::mutex mutex;
    static std::map<std::pair<long long, int>, Geometry> cache;
    std::lock_guard lock(mutex);
    auto key = std::make_pair(q, v);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, Geometry(q, v)).first;
    return it->second;
}

CoordVec Geometry::normalize(CoordVec coords) const {
    if (coords.size() != static_cast<std::size_t>(v_))
        throw std::invalid_argument("Geometry: coordinate length mismatch");
    auto it = std::find_if(coords.begin(), coords.end(), [](Coord c) { return c != 0; });
    if (it == coords.end())
        throw std::invalid_argument("Geometry: zero vector has no projective point");
    Coord scale = field_.inv(*it);
    for (Coord& c : coords)
        c = field_.mul(c, scale);
    return coords;
}

std::size_t Geometry::index_of(const CoordVec& coords) const {
    return index_.at(pack(normalize(coords)));
}

Coord Geometry::dot(const CoordVec& a, const CoordVec& b) const {
    Coord sum = 0;
    for (int i = 0; i < v_; ++i)
        sum = field_.add(sum, field_.mul(a[i], b[i]));
    return sum;
}

bool Geometry::incident(std::size_t hyperplane, std::size_t point) const {
    return dot(points_[hyperplane], points_[point]) == 0;
}

Int PointMultiset::multiplicity(std::uint32_t index) const {
    auto it = mult_.find(index);
    return it == mult_.end() ? Int(0) : it->second;
}

void PointMultiset::add(std::uint32_t index, const Int& count) {
    if (count < 0)
        throw std::invalid_argument("PointMultiset: negative multiplicity");
    if (count == 0)
        return;
    mult_[index] += count;
}

void PointMultiset::set(std::uint32_t index, const Int& count) {
    if (count < 0)
        throw std::invalid_argument("PointMultiset: negative multiplicity");
    if (count == 0)
        mult_.erase(index);
    else
        mult_[index] = count;
}

Int PointMultiset::cardinality() const {
    Int total = 0;
    for (const auto& [index, count] : mult_)
        total += count;
    return total;
}

Int PointMultiset::max_multiplicity() const {
    Int best = 0;
    for (const auto& [index, count] : mult_)
        best = std::max(best, count);
    return best;
}

std::vector<CoordVec> enumerate_hyperplanes(long long q, int v) {
    return Geometry::get(q, v).points();
}

PointMultiset restrict_to(const PointMultiset& p, const CoordVec& hyperplane) {
    const Geometry& geo = p.geometry();
    PointMultiset result(p.q(), p.v());
    for (const auto& [index, count] : p.mult())
        if (geo.dot(hyperplane, geo.point(index)) == 0)
            result.add(index, count);
    return result;
}

bool is_divisible(const PointMultiset& p, int r) {
    if (r < 0 || r >= p.v())
        throw std::invalid_argument("is_divisible: r must be in [0, v-1]");
    const Geometry& geo = p.geometry();
    Int modulus = int_pow(p.q(), r);
    Int n = p.cardinality();
    for (std::size_t h = 0; h < geo.num_points(); ++h) {
        Int section = 0;
        for (const auto& [index, count] : p.mult())
            if (geo.incident(h, index))
                section += count;
        if ((section - n) % modulus != 0)
            return false;
    }
    return true;
}

PointMultiset complement(const PointMultiset& p, const Int& lambda) {
    if (lambda < p.max_multiplicity())
        throw std::invalid_argument("complement: lambda below the maximum multiplicity");
    const Geometry& geo = p.geometry();
    PointMultiset result(p.q(), p.v());
    for (std::uint32_t i = 0; i < geo.num_points(); ++i)
        result.set(i, lambda - p.multiplicity(i));
    return result;
}

PointMultiset multiset_union(const PointMultiset& a, const PointMultiset& b) {
    if (a.q() != b.q() || a.v() != b.v())
        throw std::invalid_argument("multiset_union: ambient mismatch");
    PointMultiset result = a;
    for (const auto& [index, count] : b.mult())
        result.add(index, count);
    return result;
}

PointMultiset repeat(const PointMultiset& p, const Int& c) {
    if (c < 0)
        throw std::invalid_argument("repeat: negative factor");
    PointMultiset result(p.q(), p.v());
    for (const auto& [index, count] : p.mult())
        result.add(index, count * c);
    return result;
}

PointMultiset subspace_points(long long q, int v, const std::vector<CoordVec>& basis) {
    const Geometry& geo = Geometry::get(q, v);
    const FieldTable& f = geo.field();
    int k = static_cast<int>(basis.size());
    if (k < 1 || k > v)
        throw std::invalid_argument("subspace_points: need 1 <= k <= v basis vectors");

    // independence check by row reduction
    std::vector<CoordVec> rows = basis;
    int rank = 0;
    for (int col = 0; col < v && rank < k; ++col) {
        int pivot = -1;
        for (int row = rank; row < k; ++row)
            if (rows[row][col] != 0) {
                pivot = row;
                break;
            }
        if (pivot < 0)
            continue;
        std::swap(rows[rank], rows[pivot]);
        Coord scale = f.inv(rows[rank][col]);
        for (int j = 0; j < v; ++j)
            rows[rank][j] = f.mul(rows[rank][j], scale);
        for (int row = 0; row < k; ++row) {
            if (row == rank || rows[row][col] == 0)
                continue;
            Coord factor = rows[row][col];
            for (int j = 0; j < v; ++j)
                rows[row][j] = f.add(rows[row][j], f.neg(f.mul(factor, rows[rank][j])));
        }
        ++rank;
    }
    if (rank < k)
        throw std::invalid_argument("subspace_points: basis vectors are dependent");

    PointMultiset result(q, v);
    const Geometry& coeff_geo = Geometry::get(q, k);
    for (const CoordVec& c : coeff_geo.points()) {
        CoordVec vec(v, 0);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < v; ++j)
                vec[j] = f.add(vec[j], f.mul(c[i], basis[i][j]));
        result.add(static_cast<std::uint32_t>(geo.index_of(vec)), 1);
    }
    return result;
}

PointMultiset expand_witness(const DivisibleWitness& w) {
    int v = w.r + 1;
    PointMultiset result(w.q, v);
    for (const auto& [level, count] : w.blocks) {
        if (level < 0 || level > w.r)
            throw std::invalid_argument("expand_witness: block level out of range");
        std::vector<CoordVec> basis;
        for (int i = 0; i < w.r - level + 1; ++i) {
            CoordVec unit(v, 0);
            unit[i] = 1;
            basis.push_back(unit);
        }
        PointMultiset block = subspace_points(w.q, v, basis);
        result = multiset_union(result, repeat(block, count * int_pow(w.q, level)));
    }
    return result;
}

Int min_hyperplane_section(const PointMultiset& p) {
    const Geometry& geo = p.geometry();
    Int best = -1;
    for (std::size_t h = 0; h < geo.num_points(); ++h) {
        Int section = 0;
        for (const auto& [index, count] : p.mult())
            if (geo.incident(h, index))
                section += count;
        if (best < 0 || section < best)
            best = section;
    }
    return best;
}

}  // namespace divcodes
