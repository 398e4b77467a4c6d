#pragma once

#include <vector>

#include "qleaf/quiver.hpp"

namespace qleaf {

/// Matrix data for the double of a quiver: one matrix per doubled arrow,
/// with the matrix of arrow a sized alpha[head(a)] x alpha[tail(a)].
/// Representations are built through a base quiver so the pairing between an
/// arrow and its reverse is positional: arrow k pairs with k + |A|.
class Representation {
public:
    /// base is the undoubled quiver; matrices are indexed by the arrows of
    /// its double (first the originals, then the reverses). Missing trailing
    /// matrices are not accepted; shapes are validated per arrow.
    Representation(const Quiver& base, DimVector alpha,
                   std::vector<RatMatrix> matrices);

    const Quiver& doubled() const { return doubled_; }
    const DimVector& alpha() const { return alpha_; }
    std::size_t base_arrow_count() const { return base_arrows_; }
    const RatMatrix& matrix(std::size_t arrow) const {
        return matrices_[arrow];
    }
    std::size_t reverse_of(std::size_t arrow) const {
        return arrow < base_arrows_ ? arrow + base_arrows_
                                    : arrow - base_arrows_;
    }

private:
    Quiver doubled_;
    std::size_t base_arrows_;
    DimVector alpha_;
    std::vector<RatMatrix> matrices_;
};

/// The moment map value at each vertex: sum over incoming original arrows of
/// B_a B_a* minus sum over outgoing ones of B_a* B_a. The total trace is
/// zero identically and is asserted.
std::vector<RatMatrix> moment_map(const Representation& r);

/// Whether the moment map equals lam_i * Id at every vertex. When
/// lam . alpha != 0 this is false with no further work. lam must be
/// rational-valued.
bool check_preprojective(const Representation& r, const Parameter& lam);

/// The canonical symplectic pairing of two points of the same representation
/// space: sum over original arrows of -tr(B_a* C_a) + tr(C_a* B_a).
Rat symplectic_form(const Representation& r1, const Representation& r2);

}  // namespace qleaf
