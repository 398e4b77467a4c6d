#pragma once

#include <Eigen/Core>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qleaf/cyclotomic.hpp"
#include "qleaf/rational.hpp"

namespace qleaf {

template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Integer vector indexed by the vertices of a quiver. Entries may go
/// negative under reflections; nonnegativity is a per-operation precondition,
/// not an invariant.
using DimVector = Vector<Int>;

/// One exact scalar per vertex (rationals are the order-1 case).
using Parameter = Vector<Cyc>;

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rat>;

/// Directed graph with named vertices; loops and parallel arrows allowed.
/// Vertices are referenced by dense indices 0..n-1 throughout the library;
/// the user-facing names live in a side table.
class Quiver {
public:
    using Arrow = std::pair<Eigen::Index, Eigen::Index>;  // (tail, head)

    Quiver(std::vector<std::string> vertex_names, std::vector<Arrow> arrows);

    Eigen::Index vertex_count() const {
        return static_cast<Eigen::Index>(names_.size());
    }
    const std::vector<std::string>& vertex_names() const { return names_; }
    const std::string& vertex_name(Eigen::Index i) const {
        return names_[static_cast<std::size_t>(i)];
    }
    std::optional<Eigen::Index> index_of(const std::string& name) const;

    const std::vector<Arrow>& arrows() const { return arrows_; }
    Int loop_count(Eigen::Index i) const {
        return loops_[static_cast<std::size_t>(i)];
    }
    bool has_loop(Eigen::Index i) const { return loop_count(i) > 0; }

    /// E with E(i,j) = [i==j] - #(arrows i->j); <a,b> = a^T E b.
    const IntMatrix& euler_matrix() const { return euler_; }
    /// C = E + E^T, the symmetrised form; (a,b) = a^T C b.
    const IntMatrix& cartan_matrix() const { return cartan_; }

private:
    std::vector<std::string> names_;
    std::vector<Arrow> arrows_;
    std::vector<Int> loops_;
    IntMatrix euler_;
    IntMatrix cartan_;
};

/// The double: every arrow a gains a reverse arrow a*. Arrow k of the input
/// pairs with arrow k + |A| of the result.
Quiver double_quiver(const Quiver& q);

/// <a,b> = sum_i a_i b_i - sum_arrows a_tail b_head.
Int ringel_form(const Quiver& q, const DimVector& a, const DimVector& b);

/// (a,b) = <a,b> + <b,a>; symmetric and orientation independent.
Int sym_form(const Quiver& q, const DimVector& a, const DimVector& b);

/// p(a) = 1 - (a,a)/2; (a,a) is always even for integer vectors and this is
/// checked at runtime.
Int p_value(const Quiver& q, const DimVector& a);

/// s_i(a) = a - (a, eps_i) eps_i. Only defined at loopfree vertices.
DimVector reflect(const Quiver& q, Eigen::Index i, const DimVector& a);

/// Whether the subquiver on {i : a_i != 0} is connected. Requires a >= 0;
/// the zero vector counts as not connected.
bool support_connected(const Quiver& q, const DimVector& a);

/// Exact dot product of a parameter with an integer vector.
Cyc dot(const Parameter& lam, const DimVector& a);

// DimVector helpers shared across modules.
DimVector unit_vector(Eigen::Index size, Eigen::Index i);
bool lex_less(const DimVector& a, const DimVector& b);
bool dominated(const DimVector& a, const DimVector& b);  // a <= b entrywise
std::vector<Int> to_std(const DimVector& a);
DimVector from_std(const std::vector<Int>& v);

}  // namespace qleaf
