#include "qleaf/sigma.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>

#include "qleaf/roots.hpp"

namespace qleaf {

Int Decomposition::part_instances() const {
    Int n = 0;
    for (const auto& [vec, mult] : parts) n += mult;
    return n;
}

std::vector<DimVector> Decomposition::expanded() const {
    std::vector<DimVector> out;
    for (const auto& [vec, mult] : parts)
        for (Int k = 0; k < mult; ++k) out.push_back(vec);
    return out;
}

Int Decomposition::p_sum(const Quiver& q) const {
    Int s = 0;
    for (const auto& [vec, mult] : parts) s += mult * p_value(q, vec);
    return s;
}

bool operator==(const Decomposition& a, const Decomposition& b) {
    if (a.parts.size() != b.parts.size()) return false;
    for (std::size_t i = 0; i < a.parts.size(); ++i)
        if (a.parts[i].second != b.parts[i].second ||
            a.parts[i].first != b.parts[i].first)
            return false;
    return true;
}

bool decomposition_less(const Decomposition& a, const Decomposition& b) {
    const auto ea = a.expanded(), eb = b.expanded();
    for (std::size_t i = 0; i < ea.size() && i < eb.size(); ++i) {
        if (lex_less(ea[i], eb[i])) return true;
        if (lex_less(eb[i], ea[i])) return false;
    }
    return ea.size() < eb.size();
}

namespace {

constexpr Int kNoSum = std::numeric_limits<Int>::min() / 2;

// Maximises sum-of-p over multisets drawn from a fixed lexicographically
// sorted pool. Parts are taken with nondecreasing pool index, so each
// multiset is visited exactly once; the memo is shared across queries.
class PSumSearch {
public:
    PSumSearch(const Quiver& q, std::vector<DimVector> pool) : pool_(std::move(pool)) {
        pv_.reserve(pool_.size());
        for (const auto& v : pool_) pv_.push_back(p_value(q, v));
    }

    const std::vector<DimVector>& pool() const { return pool_; }
    Int p_of(std::size_t i) const { return pv_[i]; }

    // Best p-sum over decompositions of v into pool parts of index >= j.
    Int best(const DimVector& v, std::size_t j) {
        if (v.isZero()) return 0;
        auto key = std::make_pair(to_std(v), j);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        Int best_sum = kNoSum;
        for (std::size_t k = j; k < pool_.size(); ++k) {
            if (!dominated(pool_[k], v)) continue;
            Int rest = best(v - pool_[k], k);
            if (rest != kNoSum) best_sum = std::max(best_sum, pv_[k] + rest);
        }
        memo_.emplace(std::move(key), best_sum);
        return best_sum;
    }

    // Best p-sum over decompositions of a with at least two parts.
    Int best_proper(const DimVector& a) {
        Int best_sum = kNoSum;
        for (std::size_t k = 0; k < pool_.size(); ++k) {
            if (pool_[k] == a || !dominated(pool_[k], a)) continue;
            Int rest = best(a - pool_[k], k);
            if (rest != kNoSum) best_sum = std::max(best_sum, pv_[k] + rest);
        }
        return best_sum;
    }

private:
    std::vector<DimVector> pool_;
    std::vector<Int> pv_;
    std::map<std::pair<std::vector<Int>, std::size_t>, Int> memo_;
};

void check_target(const Quiver& q, const DimVector& a, const char* what) {
    if (a.size() != q.vertex_count())
        throw input_error(std::string(what) + ": vector length mismatch");
    if ((a.array() < 0).any())
        throw input_error(std::string(what) + ": vector must be nonnegative");
    if (a.isZero())
        throw input_error(std::string(what) + ": zero vector not accepted");
}

}  // namespace

bool in_sigma_lambda(const Quiver& q, const Parameter& lam, const DimVector& a) {
    check_target(q, a, "in_sigma_lambda");
    if (!dot(lam, a).is_zero()) return false;
    if (classify_root(q, a) == RootClass::NotRoot) return false;
    PSumSearch search(q, r_lambda_positive(q, lam, a));
    return search.best_proper(a) < p_value(q, a);
}

std::vector<DimVector> sigma_lambda_upto(const Quiver& q, const Parameter& lam,
                                         const DimVector& bound) {
    PSumSearch search(q, r_lambda_positive(q, lam, bound));
    std::vector<DimVector> out;
    for (const auto& beta : search.pool())
        if (search.best_proper(beta) < p_value(q, beta)) out.push_back(beta);
    return out;
}

namespace {

// Enumerates all multisets from a sorted pool summing to the target.
class DecompEnumerator {
public:
    DecompEnumerator(std::vector<DimVector> pool) : pool_(std::move(pool)) {}

    std::vector<Decomposition> run(const DimVector& a) {
        result_.clear();
        current_.clear();
        descend(a, 0);
        std::sort(result_.begin(), result_.end(), decomposition_less);
        return std::move(result_);
    }

private:
    std::vector<DimVector> pool_;
    std::vector<std::size_t> current_;
    std::vector<Decomposition> result_;
    std::map<std::pair<std::vector<Int>, std::size_t>, bool> feasible_;

    bool can(const DimVector& v, std::size_t j) {
        if (v.isZero()) return true;
        auto key = std::make_pair(to_std(v), j);
        auto it = feasible_.find(key);
        if (it != feasible_.end()) return it->second;
        bool ok = false;
        for (std::size_t k = j; k < pool_.size() && !ok; ++k)
            if (dominated(pool_[k], v)) ok = can(v - pool_[k], k);
        feasible_.emplace(std::move(key), ok);
        return ok;
    }

    void descend(const DimVector& v, std::size_t j) {
        if (v.isZero()) {
            emit();
            return;
        }
        for (std::size_t k = j; k < pool_.size(); ++k) {
            if (!dominated(pool_[k], v)) continue;
            DimVector rest = v - pool_[k];
            if (!can(rest, k)) continue;
            current_.push_back(k);
            descend(rest, k);
            current_.pop_back();
        }
    }

    void emit() {
        Decomposition d;
        for (std::size_t idx : current_) {
            if (!d.parts.empty() && d.parts.back().first == pool_[idx])
                d.parts.back().second += 1;
            else
                d.parts.emplace_back(pool_[idx], 1);
        }
        result_.push_back(std::move(d));
    }
};

}  // namespace

std::vector<Decomposition> decompositions(
    const Quiver& q, const Parameter& lam, const DimVector& a,
    const std::optional<DimVector>& part_bound) {
    check_target(q, a, "decompositions");
    DimVector box = a;
    if (part_bound) {
        if (part_bound->size() != a.size())
            throw input_error("decompositions: part bound length mismatch");
        box = a.cwiseMin(*part_bound);
    }
    DecompEnumerator enumerator(sigma_lambda_upto(q, lam, box));
    return enumerator.run(a);
}

Int alpha_norm(const Quiver& q, const Parameter& lam, const DimVector& a) {
    auto all = decompositions(q, lam, a);
    if (all.empty())
        throw not_representable_error(
            "no decomposition into simple dimension vectors exists");
    Int best = kNoSum;
    for (const auto& d : all) best = std::max(best, d.p_sum(q));
    return best;
}

bool refines(const Decomposition& coarse, const Decomposition& fine) {
    std::vector<DimVector> bins = coarse.expanded();
    std::vector<DimVector> parts = fine.expanded();
    if (bins.empty() || parts.empty()) return bins.empty() && parts.empty();
    DimVector total_bins = DimVector::Zero(bins[0].size());
    for (const auto& b : bins) total_bins += b;
    DimVector total_parts = DimVector::Zero(parts[0].size());
    for (const auto& p : parts) total_parts += p;
    if (total_bins != total_parts) return false;
    // Largest parts first keeps the backtracking shallow.
    std::sort(parts.begin(), parts.end(), [](const DimVector& x, const DimVector& y) {
        if (x.sum() != y.sum()) return x.sum() > y.sum();
        return lex_less(y, x);
    });
    std::function<bool(std::size_t)> place = [&](std::size_t idx) -> bool {
        if (idx == parts.size()) return true;  // totals match, so bins are empty
        std::vector<std::vector<Int>> tried;
        for (auto& bin : bins) {
            if (!dominated(parts[idx], bin)) continue;
            auto state = to_std(bin);
            if (std::find(tried.begin(), tried.end(), state) != tried.end())
                continue;  // symmetric bin, same subtree
            tried.push_back(std::move(state));
            bin -= parts[idx];
            if (place(idx + 1)) return true;
            bin += parts[idx];
        }
        return false;
    };
    return place(0);
}

std::size_t verify_canonical(const Quiver& q,
                             const std::vector<Decomposition>& all) {
    if (all.empty())
        throw not_representable_error(
            "no decomposition into simple dimension vectors exists");
    Int best = kNoSum;
    std::size_t best_idx = 0, best_count = 0;
    for (std::size_t i = 0; i < all.size(); ++i) {
        Int s = all[i].p_sum(q);
        if (s > best) {
            best = s;
            best_idx = i;
            best_count = 1;
        } else if (s == best) {
            ++best_count;
        }
    }
    if (best_count != 1)
        throw internal_error(
            "canonical decomposition is not unique: " +
            std::to_string(best_count) + " decompositions attain p-sum " +
            std::to_string(best));
    for (std::size_t i = 0; i < all.size(); ++i) {
        if (i == best_idx) continue;
        if (!refines(all[best_idx], all[i]))
            throw internal_error(
                "decomposition does not refine the canonical one");
    }
    return best_idx;
}

Decomposition canonical_decomposition(const Quiver& q, const Parameter& lam,
                                      const DimVector& a) {
    auto all = decompositions(q, lam, a);
    return all[verify_canonical(q, all)];
}

}  // namespace qleaf
