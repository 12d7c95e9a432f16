#pragma once

#include "divcodes/arith.hpp"
#include "divcodes/divisible.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

namespace divcodes {

using Coord = std::uint8_t;
using CoordVec = std::vector<Coord>;

// Arithmetic tables for F_q, q = p^e <= 9. Element i encodes the polynomial
// over F_p whose coefficients are the base-p digits of i, reduced modulo the
// lexicographically smallest monic irreducible polynomial of degree e.
class FieldTable {
public:
    static const FieldTable& get(long long q);

    long long q() const { return q_; }
    long long p() const { return p_; }
    int e() const { return e_; }
    const std::vector<int>& modulus() const { return modulus_; }

    Coord add(Coord a, Coord b) const { return add_[a * q_ + b]; }
    Coord mul(Coord a, Coord b) const { return mul_[a * q_ + b]; }
    Coord neg(Coord a) const { return neg_[a]; }
    Coord inv(Coord a) const;

private:
    explicit FieldTable(long long q);

    long long q_, p_;
    int e_;
    std::vector<int> modulus_;  // coefficients of the irreducible, degree e
    std::vector<Coord> add_, mul_, neg_, inv_;
};

// Points of PG(v-1, q): all leading-one normalized nonzero vectors of F_q^v
// in lexicographic order. Hyperplanes use the same normalized vectors as
// functionals; point x lies on hyperplane a iff sum a_i x_i = 0.
class Geometry {
public:
    static const Geometry& get(long long q, int v);

    long long q() const { return q_; }
    int v() const { return v_; }
    const FieldTable& field() const { return field_; }

    std::size_t num_points() const { return points_.size(); }
    const CoordVec& point(std::size_t index) const { return points_[index]; }
    const std::vector<CoordVec>& points() const { return points_; }

    // Normalizes a nonzero vector so its first nonzero coordinate is 1.
    CoordVec normalize(CoordVec coords) const;

    // Index of a (not necessarily normalized) nonzero vector.
    std::size_t index_of(const CoordVec& coords) const;

    Coord dot(const CoordVec& a, const CoordVec& b) const;
    bool incident(std::size_t hyperplane, std::size_t point) const;

private:
    Geometry(long long q, int v);

    long long q_;
    int v_;
    const FieldTable& field_;
    std::vector<CoordVec> points_;
    std::unordered_map<std::uint64_t, std::uint32_t> index_;
};

// Sparse multiset of points of PG(v-1, q); absent index means multiplicity 0.
class PointMultiset {
public:
    PointMultiset(long long q, int v) : q_(q), v_(v) {}

    long long q() const { return q_; }
    int v() const { return v_; }
    const std::map<std::uint32_t, Int>& mult() const { return mult_; }

    const Geometry& geometry() const { return Geometry::get(q_, v_); }

    Int multiplicity(std::uint32_t index) const;
    void add(std::uint32_t index, const Int& count);
    void set(std::uint32_t index, const Int& count);

    Int cardinality() const;
    Int max_multiplicity() const;
    bool empty() const { return mult_.empty(); }

private:
    long long q_;
    int v_;
    std::map<std::uint32_t, Int> mult_;
};

// Hyperplanes of PG(v-1,q) as normalized normal vectors; there are
// [v choose 1]_q of them, matching the point count.
std::vector<CoordVec> enumerate_hyperplanes(long long q, int v);

// Multiplicity preserved on points of the hyperplane, zero elsewhere.
PointMultiset restrict_to(const PointMultiset& p, const CoordVec& hyperplane);

// #(P cap H) == #P (mod q^r) for every hyperplane H; requires 0 <= r < v.
bool is_divisible(const PointMultiset& p, int r);

// Pointwise lambda - multiplicity over all points of the ambient geometry;
// requires lambda >= max multiplicity.
PointMultiset complement(const PointMultiset& p, const Int& lambda);

PointMultiset multiset_union(const PointMultiset& a, const PointMultiset& b);
PointMultiset repeat(const PointMultiset& p, const Int& c);

// All [k choose 1]_q points of the span of k independent vectors, each with
// multiplicity 1. Throws on a dependent basis.
PointMultiset subspace_points(long long q, int v, const std::vector<CoordVec>& basis);

// Realizes a witness in ambient dimension r+1: block (i, count) contributes
// count * q^i copies of the subspace spanned by the first r-i+1 unit vectors.
PointMultiset expand_witness(const DivisibleWitness& w);

// Smallest hyperplane section; Lemma-style averaging guarantees
// min < #P / q for non-empty P.
Int min_hyperplane_section(const PointMultiset& p);

// File format: JSON {"q":..,"v":..,"points":[{"coords":[..],"mult":..},..]}
// with leading-one normalized coords; duplicates are rejected.
std::string write_multiset(const PointMultiset& p);
PointMultiset read_multiset(const std::string& text);
PointMultiset read_multiset_file(const std::string& path);
void write_multiset_file(const PointMultiset& p, const std::string& path);

}  // namespace divcodes
