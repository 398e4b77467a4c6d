#pragma once

// Shared fixtures for the test suites: small quivers, seeded random data,
// and independent brute-force oracles kept deliberately free of the
// library's memoized search paths.

#include <random>
#include <set>
#include <vector>

#include "qleaf/quiver.hpp"
#include "qleaf/roots.hpp"

namespace qleaf::testing {

// Two vertices, double arrow 0 -> 1.
inline Quiver a1_quiver() {
    return Quiver({"0", "1"}, {{0, 1}, {0, 1}});
}

// Framing vertex first, then the double arrow.
inline Quiver framed_a1() {
    return Quiver({"inf", "0", "1"}, {{0, 1}, {1, 2}, {1, 2}});
}

// Oriented 3-cycle, acyclic orientation.
inline Quiver a2_quiver() {
    return Quiver({"0", "1", "2"}, {{0, 1}, {1, 2}, {0, 2}});
}

inline Quiver framed_a2() {
    return Quiver({"inf", "0", "1", "2"},
                  {{0, 1}, {1, 2}, {2, 3}, {1, 3}});
}

// One vertex with one loop.
inline Quiver jordan_quiver() {
    return Quiver({"0"}, {{0, 0}});
}

inline std::mt19937& rng() {
    static std::mt19937 gen(0x5eed);
    return gen;
}

inline Int rand_int(Int lo, Int hi) {
    std::uniform_int_distribution<Int> d(lo, hi);
    return d(rng());
}

inline Rat rand_rat(Int max_num = 9, Int max_den = 4) {
    return Rat(rand_int(-max_num, max_num), rand_int(1, max_den));
}

inline DimVector rand_dim_vector(Eigen::Index size, Int lo, Int hi) {
    DimVector v(size);
    for (Eigen::Index i = 0; i < size; ++i) v[i] = rand_int(lo, hi);
    return v;
}

// Every root inside |v_i| <= radius, labelled real or imaginary, computed by
// closing the generating sets under reflections inside a larger working box.
struct OrbitOracle {
    std::set<std::vector<Int>> real;
    std::set<std::vector<Int>> imaginary;

    OrbitOracle(const Quiver& q, Int radius) {
        const Int work = 3 * radius;
        auto inside = [&](const DimVector& v) {
            return (v.array().abs() <= work).all();
        };
        std::vector<DimVector> frontier;
        auto seed = [&](const DimVector& v, std::set<std::vector<Int>>& into) {
            if (into.insert(to_std(v)).second) frontier.push_back(v);
        };
        // Real seeds: +/- coordinate vectors at loopfree vertices.
        for (Eigen::Index i = 0; i < q.vertex_count(); ++i)
            if (!q.has_loop(i)) {
                seed(unit_vector(q.vertex_count(), i), real);
                seed(-unit_vector(q.vertex_count(), i), real);
            }
        auto close = [&](std::set<std::vector<Int>>& into) {
            while (!frontier.empty()) {
                DimVector v = frontier.back();
                frontier.pop_back();
                for (Eigen::Index i = 0; i < q.vertex_count(); ++i) {
                    if (q.has_loop(i)) continue;
                    DimVector w = reflect(q, i, v);
                    if (inside(w) && into.insert(to_std(w)).second)
                        frontier.push_back(w);
                }
            }
        };
        close(real);
        // Imaginary seeds: +/- the fundamental region within the work box.
        DimVector v = DimVector::Zero(q.vertex_count());
        DimVector bound = DimVector::Constant(q.vertex_count(), work);
        auto advance = [&](DimVector& x) {
            for (Eigen::Index i = x.size(); i-- > 0;) {
                if (x[i] < bound[i]) {
                    ++x[i];
                    for (Eigen::Index j = i + 1; j < x.size(); ++j) x[j] = 0;
                    return true;
                }
            }
            return false;
        };
        while (advance(v)) {
            if (in_fundamental_region(q, v)) {
                seed(v, imaginary);
                seed(-v, imaginary);
            }
        }
        close(imaginary);
    }

    RootClass classify(const DimVector& v) const {
        auto key = to_std(v);
        if (real.count(key)) return RootClass::Real;
        if (imaginary.count(key)) return RootClass::Imaginary;
        return RootClass::NotRoot;
    }
};

// All multisets of positive roots <= alpha (with lam . root = 0 when lam is
// given) that sum to alpha. Plain recursion, no memo: this is the oracle the
// memoized search is checked against.
inline void brute_force_root_decompositions(
    const Quiver& q, const std::vector<DimVector>& pool, const DimVector& rest,
    std::size_t min_idx, std::vector<std::size_t>& current,
    std::vector<std::vector<std::size_t>>& out) {
    if (rest.isZero()) {
        out.push_back(current);
        return;
    }
    for (std::size_t k = min_idx; k < pool.size(); ++k) {
        if (!dominated(pool[k], rest)) continue;
        current.push_back(k);
        brute_force_root_decompositions(q, pool, rest - pool[k], k, current,
                                        out);
        current.pop_back();
    }
}

}  // namespace qleaf::testing
