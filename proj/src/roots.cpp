#include "qleaf/roots.hpp"

#include <numeric>

namespace qleaf {

std::string to_string(RootClass c) {
    switch (c) {
        case RootClass::Real: return "real";
        case RootClass::Imaginary: return "imaginary";
        default: return "not-root";
    }
}

bool in_fundamental_region(const Quiver& q, const DimVector& a) {
    if (a.size() != q.vertex_count())
        throw input_error("in_fundamental_region: vector length mismatch");
    if ((a.array() < 0).any() || a.isZero()) return false;
    DimVector grad = q.cartan_matrix() * a;  // grad[i] = (a, eps_i)
    if ((grad.array() > 0).any()) return false;
    return support_connected(q, a);
}

namespace {

// Descent on a strictly positive vector. Mutates its argument.
RootClass classify_positive(const Quiver& q, DimVector& a) {
    const auto n = q.vertex_count();
    while (true) {
        DimVector grad = q.cartan_matrix() * a;
        // Coordinate vector?
        if (a.sum() == 1) {
            Eigen::Index i = 0;
            while (a[i] == 0) ++i;
            if (!q.has_loop(i)) return RootClass::Real;
            // At a loop vertex eps_i sits in the fundamental region.
            return RootClass::Imaginary;
        }
        Eigen::Index pivot = -1;
        for (Eigen::Index i = 0; i < n; ++i)
            if (grad[i] > 0 && !q.has_loop(i)) {
                pivot = i;
                break;
            }
        if (pivot < 0) {
            // (a, eps_i) <= 0 everywhere: fundamental region or disconnected.
            return support_connected(q, a) ? RootClass::Imaginary
                                           : RootClass::NotRoot;
        }
        a[pivot] -= grad[pivot];
        if (a[pivot] < 0) return RootClass::NotRoot;
    }
}

}  // namespace

RootClass classify_root(const Quiver& q, const DimVector& a) {
    if (a.size() != q.vertex_count())
        throw input_error("classify_root: vector length mismatch");
    if (a.isZero())
        throw input_error("classify_root: zero vector is not classifiable");
    const bool has_pos = (a.array() > 0).any();
    const bool has_neg = (a.array() < 0).any();
    if (has_pos && has_neg) return RootClass::NotRoot;
    DimVector work = has_neg ? DimVector(-a) : a;
    return classify_positive(q, work);
}

namespace {

// Lexicographic odometer over 0 <= v <= bound; returns false after the last.
bool advance(DimVector& v, const DimVector& bound) {
    for (Eigen::Index i = v.size(); i-- > 0;) {
        if (v[i] < bound[i]) {
            ++v[i];
            for (Eigen::Index j = i + 1; j < v.size(); ++j) v[j] = 0;
            return true;
        }
    }
    return false;
}

}  // namespace

std::vector<ClassifiedRoot> positive_roots_upto(const Quiver& q,
                                                const DimVector& bound) {
    if (bound.size() != q.vertex_count())
        throw input_error("positive_roots_upto: bound length mismatch");
    if ((bound.array() < 0).any())
        throw input_error("positive_roots_upto: bound must be nonnegative");
    std::vector<ClassifiedRoot> out;
    DimVector v = DimVector::Zero(bound.size());
    DimVector work(bound.size());
    while (advance(v, bound)) {
        work = v;
        RootClass cls = classify_positive(q, work);
        if (cls != RootClass::NotRoot) out.push_back({v, cls});
    }
    return out;  // odometer order is lexicographic
}

std::vector<DimVector> r_lambda_positive(const Quiver& q, const Parameter& lam,
                                         const DimVector& bound) {
    if (lam.size() != q.vertex_count())
        throw input_error("r_lambda_positive: parameter length mismatch");
    if (bound.size() != q.vertex_count())
        throw input_error("r_lambda_positive: bound length mismatch");
    if ((bound.array() < 0).any())
        throw input_error("r_lambda_positive: bound must be nonnegative");

    // lam . b = 0 is a linear condition over Q; clearing denominators of the
    // canonical coefficients turns it into a small integer matrix test, so
    // the box can be filtered before any descent runs.
    Int common = 1;
    for (Eigen::Index i = 0; i < lam.size(); ++i)
        common = std::lcm(common, lam[i].order());
    std::vector<std::vector<Rat>> cols;
    std::size_t rows = static_cast<std::size_t>(Cyc::basis_size(common));
    Int denom = 1;
    for (Eigen::Index i = 0; i < lam.size(); ++i) {
        cols.push_back(lam[i].promoted(common).coeffs());
        cols.back().resize(rows, Rat(0));
        for (const Rat& c : cols.back()) denom = std::lcm(denom, c.den());
    }
    IntMatrix kernel_test(static_cast<Eigen::Index>(rows), lam.size());
    for (Eigen::Index i = 0; i < lam.size(); ++i)
        for (std::size_t r = 0; r < rows; ++r) {
            const Rat& c = cols[static_cast<std::size_t>(i)][r];
            kernel_test(static_cast<Eigen::Index>(r), i) =
                c.num() * (denom / c.den());
        }

    std::vector<DimVector> out;
    DimVector v = DimVector::Zero(bound.size());
    DimVector work(bound.size());
    while (advance(v, bound)) {
        if (!(kernel_test * v).isZero()) continue;
        work = v;
        if (classify_positive(q, work) != RootClass::NotRoot) out.push_back(v);
    }
    return out;
}

}  // namespace qleaf
