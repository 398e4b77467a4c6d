#pragma once

#include <optional>
#include <vector>

#include "qleaf/sigma.hpp"

namespace qleaf {

/// A representation type: multiplicities of pairwise non-isomorphic simple
/// summands. Entries with equal dimension vector may repeat (distinct
/// simples of the same dimension); for parts with p = 0 the simple is unique
/// so at most one entry per vector occurs. Canonical order: by vector
/// lexicographically, then multiplicity descending.
struct RepType {
    std::vector<std::pair<Int, DimVector>> entries;  // (multiplicity, vector)
};

bool operator==(const RepType& a, const RepType& b);
bool rep_type_less(const RepType& a, const RepType& b);

/// One symplectic leaf: a representation type together with its dimension,
/// 2 * sum of p over entries (each entry counted once).
struct Stratum {
    RepType rep_type;
    Int dim = 0;
};

struct SmoothnessResult {
    bool smooth = false;
    /// On failure by non-uniqueness: a decomposition other than the canonical.
    std::optional<Decomposition> extra_decomposition;
    /// On failure by multiplicity: a part with p > 0 occurring more than once.
    std::optional<std::pair<DimVector, Int>> repeated_part;
};

/// Smooth iff the decomposition of a into simple dimension vectors is unique
/// and within it every part with p > 0 has multiplicity 1.
SmoothnessResult is_smooth(
    const Quiver& q, const Parameter& lam, const DimVector& a,
    const std::optional<DimVector>& part_bound = std::nullopt);

/// All symplectic leaves (= representation-type strata): for each
/// decomposition, parts with p = 0 contribute one fixed entry each, and each
/// partition tuple of the multiplicities of the p > 0 parts contributes one
/// representation type. Identical types arising from different
/// decompositions are merged. Sorted by dimension descending, then by type.
std::vector<Stratum> leaves(
    const Quiver& q, const Parameter& lam, const DimVector& a,
    const std::optional<DimVector>& part_bound = std::nullopt);

/// 2 * alpha_norm; checked against the maximal leaf dimension.
Int variety_dimension(
    const Quiver& q, const Parameter& lam, const DimVector& a,
    const std::optional<DimVector>& part_bound = std::nullopt);

/// Partitions of n in reverse-lexicographic order, parts descending.
std::vector<std::vector<Int>> partitions(Int n);

}  // namespace qleaf
