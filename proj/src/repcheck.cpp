#include "qleaf/repcheck.hpp"

namespace qleaf {

Representation::Representation(const Quiver& base, DimVector alpha,
                               std::vector<RatMatrix> matrices)
    : doubled_(double_quiver(base)),
      base_arrows_(base.arrows().size()),
      alpha_(std::move(alpha)),
      matrices_(std::move(matrices)) {
    if (alpha_.size() != doubled_.vertex_count())
        throw input_error("representation: alpha length mismatch");
    if ((alpha_.array() < 0).any())
        throw input_error("representation: alpha must be nonnegative");
    if (matrices_.size() != doubled_.arrows().size())
        throw input_error(
            "representation: expected " +
            std::to_string(doubled_.arrows().size()) + " matrices, got " +
            std::to_string(matrices_.size()));
    for (std::size_t k = 0; k < matrices_.size(); ++k) {
        const auto& [tail, head] = doubled_.arrows()[k];
        if (matrices_[k].rows() != alpha_[head] ||
            matrices_[k].cols() != alpha_[tail])
            throw input_error(
                "representation: matrix for arrow " + std::to_string(k) +
                " must be " + std::to_string(alpha_[head]) + "x" +
                std::to_string(alpha_[tail]) + ", got " +
                std::to_string(matrices_[k].rows()) + "x" +
                std::to_string(matrices_[k].cols()));
    }
}

std::vector<RatMatrix> moment_map(const Representation& r) {
    const auto& q = r.doubled();
    const auto& alpha = r.alpha();
    std::vector<RatMatrix> mu;
    mu.reserve(static_cast<std::size_t>(q.vertex_count()));
    for (Eigen::Index i = 0; i < q.vertex_count(); ++i)
        mu.push_back(RatMatrix::Zero(alpha[i], alpha[i]));
    for (std::size_t a = 0; a < r.base_arrow_count(); ++a) {
        const auto& [tail, head] = q.arrows()[a];
        const RatMatrix& fwd = r.matrix(a);
        const RatMatrix& rev = r.matrix(r.reverse_of(a));
        mu[static_cast<std::size_t>(head)] += fwd * rev;
        mu[static_cast<std::size_t>(tail)] -= rev * fwd;
    }
    Rat total(0);
    for (const auto& m : mu) total += m.trace();
    if (!total.is_zero())
        throw internal_error("moment map has nonzero total trace");
    return mu;
}

bool check_preprojective(const Representation& r, const Parameter& lam) {
    if (lam.size() != r.doubled().vertex_count())
        throw input_error("check_preprojective: parameter length mismatch");
    std::vector<Rat> lam_rat;
    lam_rat.reserve(static_cast<std::size_t>(lam.size()));
    for (Eigen::Index i = 0; i < lam.size(); ++i)
        lam_rat.push_back(lam[i].to_rational());
    if (!dot(lam, r.alpha()).is_zero()) return false;
    auto mu = moment_map(r);
    for (std::size_t i = 0; i < mu.size(); ++i) {
        RatMatrix expect = RatMatrix::Identity(mu[i].rows(), mu[i].cols());
        expect *= lam_rat[i];
        if (mu[i] != expect) return false;
    }
    return true;
}

Rat symplectic_form(const Representation& r1, const Representation& r2) {
    if (r1.base_arrow_count() != r2.base_arrow_count() ||
        r1.alpha().size() != r2.alpha().size() ||
        r1.alpha() != r2.alpha() ||
        r1.doubled().arrows() != r2.doubled().arrows())
        throw input_error("symplectic_form: representation spaces differ");
    Rat total(0);
    for (std::size_t a = 0; a < r1.base_arrow_count(); ++a) {
        std::size_t rev = r1.reverse_of(a);
        total -= (r1.matrix(rev) * r2.matrix(a)).trace();
        total += (r2.matrix(rev) * r1.matrix(a)).trace();
    }
    return total;
}

}  // namespace qleaf
