#pragma once

#include <string>
#include <vector>

#include "qleaf/quiver.hpp"

namespace qleaf {

enum class RootClass { NotRoot, Real, Imaginary };

std::string to_string(RootClass c);

/// Whether a lies in the fundamental region: a >= 0, a != 0, connected
/// support, and (a, eps_i) <= 0 at every vertex. Mixed-sign vectors are
/// simply not in the region (no error).
bool in_fundamental_region(const Quiver& q, const DimVector& a);

/// Classifies a nonzero vector as a real root, an imaginary root, or not a
/// root. Works by sign normalisation followed by descent: reflect at a
/// loopfree vertex with (a, eps_i) > 0 until the vector is a coordinate
/// vector at a loopfree vertex (real), lands in the fundamental region
/// (imaginary), or degenerates (not a root). Each step strictly lowers the
/// coordinate sum, so the loop terminates.
RootClass classify_root(const Quiver& q, const DimVector& a);

struct ClassifiedRoot {
    DimVector vec;
    RootClass cls;
};

/// All positive roots b with b <= bound entrywise, lexicographically sorted.
std::vector<ClassifiedRoot> positive_roots_upto(const Quiver& q,
                                                const DimVector& bound);

/// The positive roots b <= bound with lam . b = 0 exactly.
std::vector<DimVector> r_lambda_positive(const Quiver& q, const Parameter& lam,
                                         const DimVector& bound);

}  // namespace qleaf
