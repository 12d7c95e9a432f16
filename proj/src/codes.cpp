#include "divcodes/codes.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace divcodes {

bool WeightDistribution::integral() const {
    for (const Rational& c : counts)
        if (denominator(c) != 1)
            return false;
    return true;
}

bool WeightDistribution::nonnegative() const {
    for (const Rational& c : counts)
        if (c < 0)
            return false;
    return true;
}

Rational WeightDistribution::total() const {
    Rational sum = 0;
    for (const Rational& c : counts)
        sum += c;
    return sum;
}

WeightDistribution weight_distribution(const PointMultiset& p) {
    if (p.empty())
        throw std::invalid_argument("weight_distribution: empty multiset");
    const Geometry& geo = p.geometry();
    const FieldTable& f = geo.field();
    int v = p.v();

    Int card = p.cardinality();
    if (card > 100000)
        throw std::invalid_argument("weight_distribution: cardinality too large");
    long long n = static_cast<long long>(card);

    // row-reduce the support to a basis of its span
    std::vector<CoordVec> rows;
    std::vector<int> pivots;
    for (const auto& [index, count] : p.mult()) {
        CoordVec vec = geo.point(index);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (vec[pivots[i]] != 0) {
                Coord factor = vec[pivots[i]];
                for (int j = 0; j < v; ++j)
                    vec[j] = f.add(vec[j], f.neg(f.mul(factor, rows[i][j])));
            }
        int pivot = -1;
        for (int j = 0; j < v; ++j)
            if (vec[j] != 0) {
                pivot = j;
                break;
            }
        if (pivot < 0)
            continue;
        Coord scale = f.inv(vec[pivot]);
        for (int j = 0; j < v; ++j)
            vec[j] = f.mul(vec[j], scale);
        rows.push_back(vec);
        pivots.push_back(pivot);
    }
    int k = static_cast<int>(rows.size());

    // coordinates of each support point inside the span
    std::vector<std::pair<CoordVec, Int>> support;
    for (const auto& [index, count] : p.mult()) {
        CoordVec vec = geo.point(index);
        CoordVec coeff(k, 0);
        for (int i = 0; i < k; ++i) {
            Coord c = vec[pivots[i]];
            coeff[i] = c;
            if (c != 0)
                for (int j = 0; j < v; ++j)
                    vec[j] = f.add(vec[j], f.neg(f.mul(c, rows[i][j])));
        }
        support.emplace_back(coeff, count);
    }

    WeightDistribution w;
    w.n = n;
    w.k = k;
    w.q = p.q();
    w.counts.assign(n + 1, Rational(0));
    w.counts[0] = 1;  // the zero functional

    // each hyperplane of the span accounts for q-1 nonzero functionals
    const Geometry& span_geo = Geometry::get(p.q(), k);
    for (const CoordVec& a : span_geo.points()) {
        Int section = 0;
        for (const auto& [coeff, count] : support) {
            Coord dot = 0;
            for (int i = 0; i < k; ++i)
                dot = f.add(dot, f.mul(a[i], coeff[i]));
            if (dot == 0)
                section += count;
        }
        long long weight = n - static_cast<long long>(section);
        w.counts[weight] += p.q() - 1;
    }
    return w;
}

WeightDistribution macwilliams_dual(const WeightDistribution& w) {
    long long n = w.n;
    WeightDistribution dual;
    dual.n = n;
    dual.k = n - w.k;
    dual.q = w.q;
    dual.counts.assign(n + 1, Rational(0));
    // Identity i: sum_{j<=n-i} C(n-j,i) A_j = q^{k-i} sum_{j<=i} C(n-j,n-i) A_j^perp.
    // The i-th identity introduces A_i^perp with coefficient C(n-i,n-i) = 1.
    for (long long i = 0; i <= n; ++i) {
        Rational lhs = 0;
        for (long long j = 0; j <= n - i; ++j)
            lhs += Rational(binom(n - j, i)) * w.counts[j];
        Rational rhs_known = 0;
        for (long long j = 0; j < i; ++j)
            rhs_known += Rational(binom(n - j, n - i)) * dual.counts[j];
        // q^{k-i} may have a negative exponent; stay rational throughout
        Rational scale = w.k >= i ? Rational(int_pow(w.q, w.k - i))
                                  : Rational(1, int_pow(w.q, i - w.k));
        dual.counts[i] = lhs / scale - rhs_known;
    }
    return dual;
}

bool divisible_by(const WeightDistribution& w, const Int& delta) {
    if (delta <= 0)
        throw std::invalid_argument("divisible_by: delta must be positive");
    for (long long i = 1; i <= w.n; ++i)
        if (w.counts[i] != 0 && i % delta != 0)
            return false;
    return true;
}

CodePredicates predicates(const WeightDistribution& dual) {
    CodePredicates flags;
    bool a1 = dual.n < 1 || dual.counts[1] == 0;
    bool a2 = dual.n < 2 || dual.counts[2] == 0;
    flags.full_length = a1;
    flags.projective = a1 && a2;
    return flags;
}

}  // namespace divcodes
