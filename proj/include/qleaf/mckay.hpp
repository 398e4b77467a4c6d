#pragma once

#include <string>
#include <vector>

#include "qleaf/quiver.hpp"

namespace qleaf {

enum class GroupKind {
    Cyclic,            // Z/l inside SL2, l >= 2
    BinaryDihedral,    // order 4l, l >= 2
    BinaryTetrahedral,
    BinaryOctahedral,
    BinaryIcosahedral,
};

struct ConjClass {
    std::string label;
    Int size = 0;
    Int element_order = 0;
    std::size_t inverse_class = 0;  // index of the class of g^{-1}
};

/// Symplectic-reflection parameter: one weight for the permutation-type
/// reflections and one exact scalar per nontrivial conjugacy class.
struct CParam {
    Rat c1;
    std::vector<Cyc> c_class;  // indexed by nontrivial classes, in table order
};

/// A finite subgroup of SL(2,C) given by its exact character table, together
/// with its McKay quiver. Construction validates the data: character
/// orthogonality, sum of squared dimensions, reconstruction of the quiver's
/// adjacency from the characters, and the isotropy of delta.
struct GammaData {
    GroupKind kind;
    Int ell = 0;  // parameter of the cyclic / binary dihedral families
    std::string name;
    Int group_order = 0;
    Int exponent = 0;  // all character values live in Q(zeta_exponent)
    std::vector<ConjClass> classes;              // classes[0] is the identity
    std::vector<std::vector<Cyc>> char_table;    // [vertex][class]
    std::vector<Cyc> chi_l;                      // character of the 2-dim rep
    Quiver quiver{{"0"}, {}};                    // McKay quiver, acyclic
    DimVector delta;                             // delta[i] = dim of irrep i
    Eigen::Index extending_vertex = 0;           // always 0, delta[0] = 1
};

/// Builds and validates the data for one group. ell is required for the two
/// parametric families (>= 2 in both cases; the trivial group is rejected
/// since its McKay quiver has a loop).
GammaData gamma_data(GroupKind kind, Int ell = 0);

/// Parses CLI group names: cyclic:l, bindihedral:l, bintetra, binocta,
/// binicosa.
GammaData gamma_data_named(const std::string& name);

/// The quiver with one extra vertex (named "inf", placed first) and a single
/// arrow from it to the extending vertex.
Quiver frame(const GammaData& g);

/// The deformation parameter attached to c: at vertex k the value
/// -c1/2 * |Gamma| * [k = 0] + sum over nontrivial classes of
/// |class| * c_class * chi_k(class).
Parameter lambda_of_c(const GammaData& g, const CParam& c);

/// Extends lam over the framed quiver: the component at the added vertex is
/// -n * (lam . delta). The result annihilates the framed vector by
/// construction, which is asserted.
Parameter lambda_prime(const GammaData& g, const Parameter& lam, Int n);

/// The framed dimension vector: 1 at the added vertex, then n * delta.
DimVector cm_dim_vector(const GammaData& g, Int n);

}  // namespace qleaf
