#include "divcodes/geometry.hpp"

#include <doctest.h>

#include <random>

using namespace divcodes;

namespace {

PointMultiset random_subspace(long long q, int v, int k, std::mt19937& rng) {
    std::uniform_int_distribution<int> coord(0, static_cast<int>(q) - 1);
    while (true) {
        std::vector<CoordVec> basis;
        for (int i = 0; i < k; ++i) {
            CoordVec vec(v);
            for (auto& c : vec)
                c = static_cast<Coord>(coord(rng));
            basis.push_back(vec);
        }
        try {
            return subspace_points(q, v, basis);
        } catch (const std::invalid_argument&) {
            // dependent sample, retry
        }
    }
}

}  // namespace

TEST_CASE("field axioms hold exhaustively") {
    for (long long q : {2, 3, 4, 5, 7, 8, 9}) {
        const FieldTable& f = FieldTable::get(q);
        for (Coord a = 0; a < q; ++a) {
            CHECK(f.add(a, f.neg(a)) == 0);
            if (a != 0)
                CHECK(f.mul(a, f.inv(a)) == 1);
            for (Coord b = 0; b < q; ++b) {
                CHECK(f.add(a, b) == f.add(b, a));
                CHECK(f.mul(a, b) == f.mul(b, a));
                for (Coord c = 0; c < q; ++c) {
                    CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
                    CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
                    CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }
    CHECK_THROWS_AS(FieldTable::get(6), std::invalid_argument);
}

TEST_CASE("point and hyperplane counts") {
    CHECK(enumerate_hyperplanes(2, 2).size() == 3);
    CHECK(enumerate_hyperplanes(2, 4).size() == 15);
    CHECK(enumerate_hyperplanes(3, 3).size() == 13);
    for (long long q : {2, 3, 4}) {
        for (int v = 1; v <= 4; ++v) {
            const Geometry& geo = Geometry::get(q, v);
            CHECK(Int(geo.num_points()) == gauss_binom(v, 1, q));
            // index <-> coords is a bijection
            for (std::size_t i = 0; i < geo.num_points(); ++i)
                CHECK(geo.index_of(geo.point(i)) == i);
            if (v >= 2) {
                // each hyperplane carries [v-1 choose 1]_q points
                for (std::size_t h = 0; h < geo.num_points(); ++h) {
                    Int count = 0;
                    for (std::size_t p = 0; p < geo.num_points(); ++p)
                        if (geo.incident(h, p))
                            ++count;
                    CHECK(count == gauss_binom(v - 1, 1, q));
                }
            }
        }
    }
}

TEST_CASE("restrict") {
    PointMultiset empty(2, 2);
    CHECK(restrict_to(empty, {1, 0}).cardinality() == 0);

    // full line of PG(1,2) restricted to a point-hyperplane
    const Geometry& line = Geometry::get(2, 2);
    PointMultiset full(2, 2);
    for (std::uint32_t i = 0; i < line.num_points(); ++i)
        full.set(i, 1);
    CoordVec h = line.point(0);
    PointMultiset restricted = restrict_to(full, h);
    CHECK(restricted.cardinality() == 1);
}

TEST_CASE("is_divisible") {
    // the points of a k-subspace are q^{k-1}-divisible
    for (long long q : {2, 3}) {
        std::vector<CoordVec> basis;
        for (int i = 0; i < 3; ++i) {
            CoordVec unit(4, 0);
            unit[i] = 1;
            basis.push_back(unit);
        }
        PointMultiset cube = subspace_points(q, 4, basis);
        CHECK(cube.cardinality() == gauss_binom(3, 1, q));
        CHECK(is_divisible(cube, 2));
    }

    PointMultiset single(2, 3);
    single.set(0, 1);
    CHECK_FALSE(is_divisible(single, 1));

    PointMultiset empty(2, 3);
    CHECK(is_divisible(empty, 2));
    CHECK_THROWS_AS(is_divisible(empty, 3), std::invalid_argument);
    CHECK_THROWS_AS(is_divisible(empty, -1), std::invalid_argument);
}

TEST_CASE("complement") {
    PointMultiset empty(2, 2);
    PointMultiset all = complement(empty, 1);
    CHECK(all.cardinality() == 3);
    for (std::uint32_t i = 0; i < 3; ++i)
        CHECK(all.multiplicity(i) == 1);

    std::mt19937 rng(7);
    PointMultiset p = random_subspace(2, 3, 2, rng);
    CHECK(is_divisible(p, 1));
    PointMultiset comp = complement(p, 2);
    CHECK(is_divisible(comp, 1));
    CHECK(comp.cardinality() == 2 * gauss_binom(3, 1, 2) - p.cardinality());
    // involution
    PointMultiset back = complement(comp, 2);
    CHECK(back.mult() == p.mult());
    CHECK_THROWS_AS(complement(p, Int(0)), std::invalid_argument);
}

TEST_CASE("union, repeat, subspace_points") {
    std::mt19937 rng(11);
    PointMultiset p = random_subspace(2, 3, 2, rng);
    PointMultiset empty(2, 3);
    CHECK(multiset_union(p, empty).mult() == p.mult());

    // doubled line over F_2 has cardinality 6 and is 4-divisible
    PointMultiset line = subspace_points(2, 3, {{1, 0, 0}, {0, 1, 0}});
    PointMultiset doubled = repeat(line, 2);
    CHECK(doubled.cardinality() == 6);
    CHECK(is_divisible(doubled, 2));

    PointMultiset plane3 = subspace_points(3, 3, {{1, 0, 0}, {0, 1, 0}});
    CHECK(plane3.cardinality() == 4);

    CHECK_THROWS_AS(subspace_points(2, 3, {{1, 0, 0}, {1, 0, 0}}), std::invalid_argument);
    PointMultiset other(3, 3);
    CHECK_THROWS_AS(multiset_union(p, other), std::invalid_argument);
}

TEST_CASE("expand_witness") {
    auto w = witness(Int(34), 2, 3);
    REQUIRE(w);
    PointMultiset p = expand_witness(*w);
    CHECK(p.v() == 4);
    CHECK(p.cardinality() == 34);
    CHECK(is_divisible(p, 3));

    w = witness(Int(8), 2, 3);
    PointMultiset point8 = expand_witness(*w);
    CHECK(point8.mult().size() == 1);
    CHECK(point8.cardinality() == 8);

    w = witness(Int(15), 2, 3);
    PointMultiset all = expand_witness(*w);
    CHECK(all.mult().size() == 15);
    CHECK(all.max_multiplicity() == 1);
}

TEST_CASE("restriction drops the divisibility level by one") {
    std::mt19937 rng(23);
    for (long long q : {2, 3}) {
        for (int trial = 0; trial < 5; ++trial) {
            PointMultiset p = random_subspace(q, 4, 3, rng);  // q^2-divisible
            for (const CoordVec& h : enumerate_hyperplanes(q, 4))
                CHECK(is_divisible(restrict_to(p, h), 1));
        }
    }
}

TEST_CASE("averaging: some hyperplane sees less than #P/q") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        PointMultiset p = random_subspace(2, 4, 2, rng);
        Int best = min_hyperplane_section(p);
        CHECK(best * 2 < p.cardinality());
    }
}

TEST_CASE("multiset file round trip and validation") {
    auto w = witness(Int(34), 2, 3);
    PointMultiset p = expand_witness(*w);
    std::string text = write_multiset(p);
    PointMultiset back = read_multiset(text);
    CHECK(back.q() == p.q());
    CHECK(back.v() == p.v());
    CHECK(back.mult() == p.mult());

    CHECK_THROWS(read_multiset(R"({"q":2,"v":2,"points":[{"coords":[0,0],"mult":1}]})"));
    // not leading-one normalized
    CHECK_THROWS(read_multiset(R"({"q":3,"v":2,"points":[{"coords":[2,1],"mult":1}]})"));
    // duplicate coords
    CHECK_THROWS(read_multiset(
        R"({"q":2,"v":2,"points":[{"coords":[1,0],"mult":1},{"coords":[1,0],"mult":2}]})"));
}
