#include <doctest.h>

#include <set>

#include "qleaf/roots.hpp"
#include "support.hpp"

using namespace qleaf;
using namespace qleaf::testing;

TEST_CASE("fundamental region membership") {
    Quiver a1 = a1_quiver();
    CHECK(in_fundamental_region(a1, from_std({1, 1})));
    CHECK_FALSE(in_fundamental_region(a1, unit_vector(2, 0)));
    CHECK_FALSE(in_fundamental_region(a1, from_std({2, 1})));
    CHECK_FALSE(in_fundamental_region(a1, DimVector::Zero(2)));
    CHECK_FALSE(in_fundamental_region(a1, from_std({-1, -1})));
    // At a loop vertex every positive multiple of the coordinate vector
    // belongs to the region.
    Quiver j = jordan_quiver();
    CHECK(in_fundamental_region(j, from_std({1})));
    CHECK(in_fundamental_region(j, from_std({3})));
}

TEST_CASE("classification on fixed examples") {
    Quiver a1 = a1_quiver();
    CHECK(classify_root(a1, from_std({1, 1})) == RootClass::Imaginary);
    CHECK(classify_root(a1, unit_vector(2, 0)) == RootClass::Real);
    CHECK(classify_root(a1, from_std({2, 1})) == RootClass::Real);
    CHECK(classify_root(a1, from_std({3, 1})) == RootClass::NotRoot);
    CHECK(classify_root(a1, from_std({1, -1})) == RootClass::NotRoot);
    CHECK(classify_root(a1, from_std({-2, -2})) == RootClass::Imaginary);
    CHECK_THROWS_AS(classify_root(a1, DimVector::Zero(2)), input_error);
    Quiver j = jordan_quiver();
    CHECK(classify_root(j, from_std({4})) == RootClass::Imaginary);
}

TEST_CASE("descent agrees with the reflection-orbit oracle") {
    struct Case {
        Quiver q;
        Int radius;
    };
    const Case cases[] = {{a1_quiver(), 3}, {framed_a1(), 2}, {a2_quiver(), 2},
                          {jordan_quiver(), 4}};
    for (const auto& [q, radius] : cases) {
        OrbitOracle oracle(q, radius);
        DimVector v = DimVector::Constant(q.vertex_count(), -radius);
        const DimVector lo = v;
        auto advance = [&](DimVector& x) {
            for (Eigen::Index i = x.size(); i-- > 0;) {
                if (x[i] < radius) {
                    ++x[i];
                    for (Eigen::Index k = i + 1; k < x.size(); ++k)
                        x[k] = lo[k];
                    return true;
                }
            }
            return false;
        };
        do {
            if (v.isZero()) continue;
            CAPTURE(to_std(v));
            CHECK(classify_root(q, v) == oracle.classify(v));
        } while (advance(v));
    }
}

TEST_CASE("box enumeration on fixed examples") {
    Quiver a1 = a1_quiver();
    auto roots = positive_roots_upto(a1, from_std({2, 2}));
    REQUIRE(roots.size() == 6);
    std::set<std::vector<Int>> expect = {{0, 1}, {1, 0}, {1, 1},
                                         {1, 2}, {2, 1}, {2, 2}};
    std::set<std::vector<Int>> got;
    for (const auto& r : roots) got.insert(to_std(r.vec));
    CHECK(got == expect);
    for (std::size_t i = 1; i < roots.size(); ++i)
        CHECK(lex_less(roots[i - 1].vec, roots[i].vec));

    CHECK(positive_roots_upto(a1, DimVector::Zero(2)).empty());
    CHECK_THROWS_AS(positive_roots_upto(a1, from_std({-1, 2})), input_error);
    CHECK_THROWS_AS(positive_roots_upto(a1, from_std({1, 1, 1})), input_error);

    auto framed = positive_roots_upto(framed_a1(), from_std({1, 1, 1}));
    bool found = false;
    for (const auto& r : framed)
        if (r.vec == from_std({1, 1, 1})) {
            found = true;
            CHECK(r.cls == RootClass::Imaginary);
        }
    CHECK(found);
}

TEST_CASE("every enumerated root re-classifies consistently") {
    for (const Quiver& q : {a1_quiver(), framed_a1(), a2_quiver()}) {
        DimVector bound = DimVector::Constant(q.vertex_count(), 3);
        for (const auto& r : positive_roots_upto(q, bound)) {
            CHECK(classify_root(q, r.vec) == r.cls);
            if (r.cls == RootClass::Real) CHECK(p_value(q, r.vec) == 0);
            if (r.cls == RootClass::Imaginary) CHECK(p_value(q, r.vec) >= 1);
        }
    }
}

TEST_CASE("root set is reflection stable inside the box") {
    for (const Quiver& q : {a1_quiver(), framed_a1(), a2_quiver()}) {
        const Int radius = 3;
        DimVector bound = DimVector::Constant(q.vertex_count(), radius);
        auto roots = positive_roots_upto(q, bound);
        std::set<std::vector<Int>> root_set;
        for (const auto& r : roots) root_set.insert(to_std(r.vec));
        for (const auto& r : roots) {
            for (Eigen::Index i = 0; i < q.vertex_count(); ++i) {
                if (q.has_loop(i)) continue;
                DimVector s = reflect(q, i, r.vec);
                if ((s.array() < 0).any() || (s.array() > radius).any())
                    continue;  // left the box
                if (s.isZero()) continue;
                CAPTURE(to_std(r.vec));
                CAPTURE(to_std(s));
                CHECK(root_set.count(to_std(s)) == 1);
            }
        }
    }
}

TEST_CASE("kernel filtering matches a direct filter") {
    Quiver a1 = a1_quiver();
    Parameter lam(2);
    lam[0] = Cyc(1);
    lam[1] = Cyc(-1);
    auto filtered = r_lambda_positive(a1, lam, from_std({2, 2}));
    REQUIRE(filtered.size() == 2);
    CHECK(filtered[0] == from_std({1, 1}));
    CHECK(filtered[1] == from_std({2, 2}));

    // Zero parameter keeps every root.
    Parameter zero(2);
    zero[0] = Cyc(0);
    zero[1] = Cyc(0);
    CHECK(r_lambda_positive(a1, zero, from_std({2, 2})).size() == 6);

    // Framed case from the smoothness setup.
    Quiver fa1 = framed_a1();
    Parameter lamp(3);
    lamp[0] = Cyc(0);
    lamp[1] = Cyc(1);
    lamp[2] = Cyc(-1);
    auto framed = r_lambda_positive(fa1, lamp, from_std({1, 2, 2}));
    std::set<std::vector<Int>> got;
    for (const auto& v : framed) got.insert(to_std(v));
    CHECK(got.count({1, 0, 0}) == 1);
    CHECK(got.count({0, 1, 1}) == 1);
}

TEST_CASE("kernel filtering agrees with the unfiltered enumeration") {
    // Property: r_lambda equals positive_roots_upto filtered by the exact
    // dot product, including cyclotomic parameters.
    Quiver q = framed_a2();
    for (int trial = 0; trial < 10; ++trial) {
        Parameter lam(4);
        for (Eigen::Index i = 0; i < 4; ++i) {
            std::vector<Rat> coeffs{rand_rat(2, 2), rand_rat(2, 2)};
            lam[i] = Cyc::from_coeffs(3, coeffs);
        }
        // Make the kernel nontrivial half the time.
        if (trial % 2 == 0) {
            lam[3] = -(lam[1] + lam[2]);
            lam[0] = Cyc(0);
        }
        DimVector bound = from_std({1, 2, 2, 2});
        std::set<std::vector<Int>> direct;
        for (const auto& r : positive_roots_upto(q, bound))
            if (dot(lam, r.vec).is_zero()) direct.insert(to_std(r.vec));
        std::set<std::vector<Int>> fast;
        for (const auto& v : r_lambda_positive(q, lam, bound))
            fast.insert(to_std(v));
        CHECK(fast == direct);
    }
}
