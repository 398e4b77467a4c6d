#pragma once

#include <optional>
#include <vector>

#include "qleaf/quiver.hpp"

namespace qleaf {

/// Multiset of dimension vectors with multiplicities, summing to some target.
/// Parts are kept sorted lexicographically; every part is a simple dimension
/// vector for the parameter of the query that produced it.
struct Decomposition {
    std::vector<std::pair<DimVector, Int>> parts;  // (vector, multiplicity)

    Int part_instances() const;              // sum of multiplicities
    std::vector<DimVector> expanded() const;  // parts repeated by multiplicity
    Int p_sum(const Quiver& q) const;
};

bool operator==(const Decomposition& a, const Decomposition& b);
bool decomposition_less(const Decomposition& a, const Decomposition& b);

/// Whether a admits a simple representation at parameter lam: a must be a
/// positive root with lam . a = 0, and every splitting of a into two or more
/// positive roots from the kernel of lam must have strictly smaller total p.
/// Requires a >= 0, a != 0.
bool in_sigma_lambda(const Quiver& q, const Parameter& lam, const DimVector& a);

/// All simple dimension vectors <= bound, lexicographically sorted.
std::vector<DimVector> sigma_lambda_upto(const Quiver& q, const Parameter& lam,
                                         const DimVector& bound);

/// Every multiset of simple dimension vectors summing to a, in canonical
/// form, sorted deterministically. Empty when a is not a sum of such vectors.
/// Requires a >= 0, a != 0. part_bound, when given, additionally caps the
/// enumeration box for parts (parts <= a always holds regardless); a cap
/// below a can hide decompositions and is meant for oversized queries only.
std::vector<Decomposition> decompositions(
    const Quiver& q, const Parameter& lam, const DimVector& a,
    const std::optional<DimVector>& part_bound = std::nullopt);

/// max { sum p(parts) } over all decompositions of a into simple dimension
/// vectors. Throws not_representable_error when no decomposition exists.
Int alpha_norm(const Quiver& q, const Parameter& lam, const DimVector& a);

/// The unique decomposition attaining alpha_norm. Verifies on every call
/// that the maximiser is unique and that every other decomposition refines
/// it (each canonical part is a sum of parts of the other); a violation
/// throws internal_error, it is never resolved silently.
Decomposition canonical_decomposition(const Quiver& q, const Parameter& lam,
                                      const DimVector& a);

/// Same verification applied to an already-enumerated list; returns the
/// index of the canonical decomposition within it.
std::size_t verify_canonical(const Quiver& q,
                             const std::vector<Decomposition>& all);

/// Whether fine's parts can be grouped so that each group sums to one part
/// instance of coarse.
bool refines(const Decomposition& coarse, const Decomposition& fine);

}  // namespace qleaf
