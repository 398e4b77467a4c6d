#include "qleaf/strata.hpp"

#include <algorithm>
#include <functional>

namespace qleaf {

bool operator==(const RepType& a, const RepType& b) {
    if (a.entries.size() != b.entries.size()) return false;
    for (std::size_t i = 0; i < a.entries.size(); ++i)
        if (a.entries[i].first != b.entries[i].first ||
            a.entries[i].second != b.entries[i].second)
            return false;
    return true;
}

bool rep_type_less(const RepType& a, const RepType& b) {
    for (std::size_t i = 0; i < a.entries.size() && i < b.entries.size(); ++i) {
        if (lex_less(a.entries[i].second, b.entries[i].second)) return true;
        if (lex_less(b.entries[i].second, a.entries[i].second)) return false;
        if (a.entries[i].first != b.entries[i].first)
            return a.entries[i].first > b.entries[i].first;
    }
    return a.entries.size() < b.entries.size();
}

std::vector<std::vector<Int>> partitions(Int n) {
    std::vector<std::vector<Int>> out;
    std::vector<Int> current;
    // Parts descending; recursion produces reverse-lexicographic order.
    std::function<void(Int, Int)> rec = [&](Int rest, Int max_part) {
        if (rest == 0) {
            out.push_back(current);
            return;
        }
        for (Int part = std::min(rest, max_part); part >= 1; --part) {
            current.push_back(part);
            rec(rest - part, part);
            current.pop_back();
        }
    };
    rec(n, n);
    return out;
}

namespace {

void canonicalize(RepType& t) {
    std::sort(t.entries.begin(), t.entries.end(),
              [](const auto& x, const auto& y) {
                  if (lex_less(x.second, y.second)) return true;
                  if (lex_less(y.second, x.second)) return false;
                  return x.first > y.first;
              });
}

struct StratumBuilder {
    const Quiver& q;
    std::vector<Stratum> found;

    void add(RepType t, Int dim) {
        canonicalize(t);
        for (const auto& s : found)
            if (s.rep_type == t) {
                if (s.dim != dim)
                    throw internal_error(
                        "identical representation types with different "
                        "dimensions");
                return;  // same stratum reached from another decomposition
            }
        found.push_back({std::move(t), dim});
    }

    // Emits every representation type arising from one decomposition:
    // p = 0 parts are fixed entries, the multiplicity of each p > 0 part
    // ranges over its partitions.
    void emit(const Decomposition& d) {
        std::vector<std::pair<Int, DimVector>> fixed;
        std::vector<std::pair<DimVector, Int>> positive;  // (vector, mult)
        std::vector<Int> pvals;
        for (const auto& [vec, mult] : d.parts) {
            Int p = p_value(q, vec);
            if (p == 0)
                fixed.emplace_back(mult, vec);
            else {
                positive.emplace_back(vec, mult);
                pvals.push_back(p);
            }
        }
        std::vector<std::vector<std::vector<Int>>> choice;
        choice.reserve(positive.size());
        for (const auto& [vec, mult] : positive)
            choice.push_back(partitions(mult));
        std::vector<std::size_t> pick(positive.size(), 0);
        while (true) {
            RepType t;
            t.entries = fixed;
            Int dim = 0;
            for (std::size_t j = 0; j < positive.size(); ++j) {
                const auto& sigma = choice[j][pick[j]];
                for (Int piece : sigma)
                    t.entries.emplace_back(piece, positive[j].first);
                dim += 2 * static_cast<Int>(sigma.size()) * pvals[j];
            }
            add(std::move(t), dim);
            // Advance the mixed-radix selector over partition tuples.
            std::size_t j = 0;
            for (; j < pick.size(); ++j) {
                if (++pick[j] < choice[j].size()) break;
                pick[j] = 0;
            }
            if (j == pick.size()) break;
        }
    }
};

}  // namespace

std::vector<Stratum> leaves(const Quiver& q, const Parameter& lam,
                            const DimVector& a,
                            const std::optional<DimVector>& part_bound) {
    auto all = decompositions(q, lam, a, part_bound);
    std::size_t canonical = verify_canonical(q, all);
    StratumBuilder builder{q, {}};
    for (const auto& d : all) builder.emit(d);
    auto strata = std::move(builder.found);
    std::sort(strata.begin(), strata.end(), [](const Stratum& x, const Stratum& y) {
        if (x.dim != y.dim) return x.dim > y.dim;
        return rep_type_less(x.rep_type, y.rep_type);
    });
    // Exactly one stratum attains the top dimension: the smooth locus.
    Int top = 2 * all[canonical].p_sum(q);
    std::size_t at_top = 0;
    for (const auto& s : strata)
        if (s.dim == top) ++at_top;
    if (strata.empty() || strata.front().dim != top || at_top != 1)
        throw internal_error("top-dimensional stratum is not unique");
    for (const auto& s : strata) {
        DimVector total = DimVector::Zero(a.size());
        for (const auto& [mult, vec] : s.rep_type.entries) total += mult * vec;
        if (total != a)
            throw internal_error("representation type does not sum to alpha");
    }
    return strata;
}

SmoothnessResult is_smooth(const Quiver& q, const Parameter& lam,
                           const DimVector& a,
                           const std::optional<DimVector>& part_bound) {
    auto all = decompositions(q, lam, a, part_bound);
    std::size_t canonical = verify_canonical(q, all);
    SmoothnessResult result;
    if (all.size() > 1) {
        result.smooth = false;
        result.extra_decomposition = all[canonical == 0 ? 1 : 0];
        return result;
    }
    for (const auto& [vec, mult] : all[0].parts) {
        if (mult > 1 && p_value(q, vec) > 0) {
            result.smooth = false;
            result.repeated_part = std::make_pair(vec, mult);
            return result;
        }
    }
    result.smooth = true;
    return result;
}

Int variety_dimension(const Quiver& q, const Parameter& lam,
                      const DimVector& a,
                      const std::optional<DimVector>& part_bound) {
    auto all = decompositions(q, lam, a, part_bound);
    if (all.empty())
        throw not_representable_error(
            "no decomposition into simple dimension vectors exists");
    Int best = 0;
    bool first = true;
    for (const auto& d : all) {
        Int s = d.p_sum(q);
        if (first || s > best) best = s;
        first = false;
    }
    Int dim = 2 * best;
    auto strata = leaves(q, lam, a, part_bound);
    Int top = 0;
    for (const auto& s : strata) top = std::max(top, s.dim);
    if (top != dim)
        throw internal_error("variety dimension disagrees with leaf maximum");
    return dim;
}

}  // namespace qleaf
