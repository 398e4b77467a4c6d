#include "qleaf/mckay.hpp"

#include <numeric>

#include "qleaf/roots.hpp"

namespace qleaf {

namespace {

Cyc zeta(Int n, Int k) { return Cyc::root_of_unity(n, k); }

// zeta_n^k + zeta_n^{-k}
Cyc cospair(Int n, Int k) { return zeta(n, k) + zeta(n, -k); }

std::vector<Quiver::Arrow> chain_arrows(
    const std::vector<std::pair<int, int>>& edges) {
    std::vector<Quiver::Arrow> arrows;
    arrows.reserve(edges.size());
    for (auto [a, b] : edges) arrows.emplace_back(a, b);
    return arrows;
}

GammaData build_cyclic(Int ell) {
    if (ell < 2)
        throw input_error(
            "cyclic group needs order >= 2 (the trivial group's McKay quiver "
            "has a loop and is not supported)");
    if (ell > 36)
        throw input_error(
            "cyclic order capped at 36: character-table validation is cubic "
            "in the class count");
    GammaData g;
    g.kind = GroupKind::Cyclic;
    g.ell = ell;
    g.name = "cyclic:" + std::to_string(ell);
    g.group_order = ell;
    g.exponent = ell;
    for (Int j = 0; j < ell; ++j) {
        ConjClass c;
        c.label = j == 0 ? "1" : "g^" + std::to_string(j);
        c.size = 1;
        c.element_order = ell / std::gcd(j, ell);
        c.inverse_class = static_cast<std::size_t>((ell - j) % ell);
        g.classes.push_back(std::move(c));
    }
    g.char_table.assign(static_cast<std::size_t>(ell), {});
    for (Int k = 0; k < ell; ++k)
        for (Int j = 0; j < ell; ++j)
            g.char_table[static_cast<std::size_t>(k)].push_back(
                zeta(ell, j * k));
    for (Int j = 0; j < ell; ++j) g.chi_l.push_back(cospair(ell, j));

    std::vector<std::string> names;
    for (Int i = 0; i < ell; ++i) names.push_back(std::to_string(i));
    std::vector<Quiver::Arrow> arrows;
    if (ell == 2) {
        arrows = {{0, 1}, {0, 1}};
    } else {
        for (Int i = 0; i + 1 < ell; ++i) arrows.emplace_back(i, i + 1);
        arrows.emplace_back(0, ell - 1);
    }
    g.quiver = Quiver(names, arrows);
    g.delta = DimVector::Ones(ell);
    return g;
}

GammaData build_binary_dihedral(Int ell) {
    if (ell < 2) throw input_error("binary dihedral group needs l >= 2");
    if (ell > 18)
        throw input_error(
            "binary dihedral parameter capped at 18: character-table "
            "validation is cubic in the class count");
    GammaData g;
    g.kind = GroupKind::BinaryDihedral;
    g.ell = ell;
    g.name = "bindihedral:" + std::to_string(ell);
    g.group_order = 4 * ell;
    g.exponent = std::lcm<Int>(2 * ell, 4);
    const bool odd = ell % 2 != 0;

    // Classes: 1, a^j (j = 1..l-1, size 2), a^l = -1, then the two
    // reflection-type classes of size l.
    g.classes.push_back({"1", 1, 1, 0});
    for (Int j = 1; j < ell; ++j)
        g.classes.push_back({"a^" + std::to_string(j), 2,
                             2 * ell / std::gcd(j, 2 * ell),
                             static_cast<std::size_t>(j)});
    g.classes.push_back({"-1", 1, 2, static_cast<std::size_t>(ell)});
    std::size_t ib = static_cast<std::size_t>(ell) + 1;
    g.classes.push_back({"b", ell, 4, odd ? ib + 1 : ib});
    g.classes.push_back({"ab", ell, 4, odd ? ib : ib + 1});
    const std::size_t nc = g.classes.size();

    // Vertex order: trivial, the second 1-dim at the same end, the chain of
    // 2-dims, then the two 1-dims at the far end.
    auto one_dim = [&](Int chi_a, const Cyc& chi_b) {
        std::vector<Cyc> row;
        row.reserve(nc);
        row.push_back(Cyc(1));
        for (Int j = 1; j <= ell; ++j)
            row.push_back(Cyc(chi_a == 1 ? 1 : (j % 2 ? -1 : 1)));
        row.push_back(chi_b);
        Cyc chi_ab = Cyc(Rat(chi_a)) * chi_b;
        row.push_back(chi_ab);
        return row;
    };
    auto two_dim = [&](Int k) {
        std::vector<Cyc> row;
        row.reserve(nc);
        row.push_back(Cyc(2));
        for (Int j = 1; j <= ell; ++j) row.push_back(cospair(2 * ell, j * k));
        row.push_back(Cyc(0));
        row.push_back(Cyc(0));
        return row;
    };
    g.char_table.push_back(one_dim(1, Cyc(1)));
    g.char_table.push_back(one_dim(1, Cyc(-1)));
    for (Int k = 1; k < ell; ++k) g.char_table.push_back(two_dim(k));
    if (odd) {
        g.char_table.push_back(one_dim(-1, zeta(4, 1)));
        g.char_table.push_back(one_dim(-1, zeta(4, 3)));
    } else {
        g.char_table.push_back(one_dim(-1, Cyc(1)));
        g.char_table.push_back(one_dim(-1, Cyc(-1)));
    }
    g.chi_l = two_dim(1);

    std::vector<std::string> names;
    for (std::size_t i = 0; i < g.char_table.size(); ++i)
        names.push_back(std::to_string(i));
    std::vector<Quiver::Arrow> arrows;
    arrows.emplace_back(0, 2);
    arrows.emplace_back(1, 2);
    for (Int k = 2; k < ell; ++k) arrows.emplace_back(k, k + 1);
    arrows.emplace_back(ell, ell + 1);
    arrows.emplace_back(ell, ell + 2);
    g.quiver = Quiver(names, arrows);
    g.delta = DimVector(static_cast<Eigen::Index>(names.size()));
    g.delta.setConstant(2);
    g.delta[0] = g.delta[1] = 1;
    g.delta[ell + 1] = g.delta[ell + 2] = 1;
    return g;
}

// The three exceptional tables are entered as literal data; construction
// re-derives the quiver adjacency from them, so a transcription slip fails
// loudly instead of shipping.
GammaData build_binary_tetrahedral() {
    GammaData g;
    g.kind = GroupKind::BinaryTetrahedral;
    g.name = "bintetra";
    g.group_order = 24;
    g.exponent = 12;
    g.classes = {
        {"1", 1, 1, 0},  {"-1", 1, 2, 1},  {"4a", 6, 4, 2}, {"3a", 4, 3, 4},
        {"3b", 4, 3, 3}, {"6a", 4, 6, 6},  {"6b", 4, 6, 5},
    };
    const Cyc one(1), w = zeta(3, 1), w2 = zeta(3, 2);
    // Vertex order: 0 trivial, 1 the 2-dim symplectic rep, 2 the 3-dim,
    // 3/4 one leg (2-dim, 1-dim), 5/6 the other leg.
    g.char_table = {
        {one, one, one, one, one, one, one},
        {Cyc(2), Cyc(-2), Cyc(0), Cyc(-1), Cyc(-1), one, one},
        {Cyc(3), Cyc(3), Cyc(-1), Cyc(0), Cyc(0), Cyc(0), Cyc(0)},
        {Cyc(2), Cyc(-2), Cyc(0), -w, -w2, w, w2},
        {one, one, one, w, w2, w, w2},
        {Cyc(2), Cyc(-2), Cyc(0), -w2, -w, w2, w},
        {one, one, one, w2, w, w2, w},
    };
    g.chi_l = g.char_table[1];
    g.quiver = Quiver({"0", "1", "2", "3", "4", "5", "6"},
                      chain_arrows({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}, {5, 6}}));
    g.delta = from_std({1, 2, 3, 2, 1, 2, 1});
    return g;
}

GammaData build_binary_octahedral() {
    GammaData g;
    g.kind = GroupKind::BinaryOctahedral;
    g.name = "binocta";
    g.group_order = 48;
    g.exponent = 24;
    g.classes = {
        {"1", 1, 1, 0},   {"-1", 1, 2, 1},  {"8a", 6, 8, 2},
        {"8b", 6, 8, 3},  {"4a", 6, 4, 4},  {"3a", 8, 3, 5},
        {"6a", 8, 6, 6},  {"4b", 12, 4, 7},
    };
    const Cyc s = cospair(8, 1);  // sqrt(2)
    const Cyc one(1), zero(0);
    // Vertex order along the chain 1-2-3-4-3-2-1 with the extra 2 at the
    // middle: 0,1,2,3,4,5,6 then 7 attached to 3.
    g.char_table = {
        {one, one, one, one, one, one, one, one},
        {Cyc(2), Cyc(-2), s, -s, zero, Cyc(-1), one, zero},
        {Cyc(3), Cyc(3), one, one, Cyc(-1), zero, zero, Cyc(-1)},
        {Cyc(4), Cyc(-4), zero, zero, zero, one, Cyc(-1), zero},
        {Cyc(3), Cyc(3), Cyc(-1), Cyc(-1), Cyc(-1), zero, zero, one},
        {Cyc(2), Cyc(-2), -s, s, zero, Cyc(-1), one, zero},
        {one, one, Cyc(-1), Cyc(-1), one, one, one, Cyc(-1)},
        {Cyc(2), Cyc(2), zero, zero, Cyc(2), Cyc(-1), Cyc(-1), zero},
    };
    g.chi_l = g.char_table[1];
    g.quiver = Quiver(
        {"0", "1", "2", "3", "4", "5", "6", "7"},
        chain_arrows({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {3, 7}}));
    g.delta = from_std({1, 2, 3, 4, 3, 2, 1, 2});
    return g;
}

GammaData build_binary_icosahedral() {
    GammaData g;
    g.kind = GroupKind::BinaryIcosahedral;
    g.name = "binicosa";
    g.group_order = 120;
    g.exponent = 60;
    g.classes = {
        {"1", 1, 1, 0},    {"-1", 1, 2, 1},   {"4a", 30, 4, 2},
        {"3a", 20, 3, 3},  {"6a", 20, 6, 4},  {"5a", 12, 5, 5},
        {"5b", 12, 5, 6},  {"10a", 12, 10, 7}, {"10b", 12, 10, 8},
    };
    // Golden-ratio pair: A = (1+sqrt5)/2, As = (1-sqrt5)/2.
    const Cyc A = -(zeta(5, 2) + zeta(5, 3));
    const Cyc As = -(zeta(5, 1) + zeta(5, 4));
    const Cyc one(1), zero(0);
    // Vertex order along the chain 1-2-3-4-5-6-4-2 with the extra 3
    // attached to the 6: 0..7 then 8 on vertex 5.
    g.char_table = {
        {one, one, one, one, one, one, one, one, one},
        {Cyc(2), Cyc(-2), zero, Cyc(-1), one, -As, -A, As, A},
        {Cyc(3), Cyc(3), Cyc(-1), zero, zero, As, A, As, A},
        {Cyc(4), Cyc(-4), zero, one, Cyc(-1), Cyc(-1), Cyc(-1), one, one},
        {Cyc(5), Cyc(5), one, Cyc(-1), Cyc(-1), zero, zero, zero, zero},
        {Cyc(6), Cyc(-6), zero, zero, zero, one, one, Cyc(-1), Cyc(-1)},
        {Cyc(4), Cyc(4), zero, one, one, Cyc(-1), Cyc(-1), Cyc(-1), Cyc(-1)},
        {Cyc(2), Cyc(-2), zero, Cyc(-1), one, -A, -As, A, As},
        {Cyc(3), Cyc(3), Cyc(-1), zero, zero, A, As, A, As},
    };
    g.chi_l = g.char_table[1];
    g.quiver = Quiver({"0", "1", "2", "3", "4", "5", "6", "7", "8"},
                      chain_arrows({{0, 1},
                                    {1, 2},
                                    {2, 3},
                                    {3, 4},
                                    {4, 5},
                                    {5, 6},
                                    {6, 7},
                                    {5, 8}}));
    g.delta = from_std({1, 2, 3, 4, 5, 6, 4, 2, 3});
    return g;
}

void validate(const GammaData& g) {
    const auto nv = g.quiver.vertex_count();
    const std::size_t nc = g.classes.size();
    if (static_cast<Eigen::Index>(g.char_table.size()) != nv ||
        g.delta.size() != nv)
        throw internal_error(g.name + ": table size mismatch");
    if (g.classes[0].size != 1 || g.classes[0].element_order != 1)
        throw internal_error(g.name + ": first class is not the identity");
    Int class_total = 0;
    for (const auto& c : g.classes) class_total += c.size;
    if (class_total != g.group_order)
        throw internal_error(g.name + ": class sizes do not sum to the order");

    // Row orthogonality: sum over classes of |C| chi_i(g) chi_j(g^-1).
    for (std::size_t i = 0; i < g.char_table.size(); ++i)
        for (std::size_t j = 0; j < g.char_table.size(); ++j) {
            Cyc acc(0);
            for (std::size_t c = 0; c < nc; ++c)
                acc += Rat(g.classes[c].size) * g.char_table[i][c] *
                       g.char_table[j][g.classes[c].inverse_class];
            Cyc expect(i == j ? Rat(g.group_order) : Rat(0));
            if (acc != expect)
                throw internal_error(g.name +
                                     ": character orthogonality failed");
        }

    // Dimensions: delta matches the identity column, sum of squares = |G|.
    Int sq = 0;
    for (Eigen::Index v = 0; v < nv; ++v) {
        Cyc d = g.char_table[static_cast<std::size_t>(v)][0];
        if (!d.is_rational() ||
            d.to_rational() != Rat(g.delta[v]))
            throw internal_error(g.name + ": delta disagrees with the table");
        sq += g.delta[v] * g.delta[v];
    }
    if (sq != g.group_order)
        throw internal_error(g.name + ": sum of squared dimensions wrong");
    if (g.delta[g.extending_vertex] != 1)
        throw internal_error(g.name + ": extending vertex has dimension != 1");

    // McKay adjacency: multiplicity of irrep i inside irrep j tensored with
    // the 2-dim rep must equal the edge count between i and j.
    IntMatrix edges = IntMatrix::Zero(nv, nv);
    for (const auto& [tail, head] : g.quiver.arrows()) {
        edges(tail, head) += 1;
        edges(head, tail) += 1;
    }
    for (Eigen::Index i = 0; i < nv; ++i)
        for (Eigen::Index j = 0; j < nv; ++j) {
            Cyc acc(0);
            for (std::size_t c = 0; c < nc; ++c)
                acc += Rat(g.classes[c].size) * g.chi_l[c] *
                       g.char_table[static_cast<std::size_t>(j)][c] *
                       g.char_table[static_cast<std::size_t>(i)]
                                   [g.classes[c].inverse_class];
            if (acc != Cyc(Rat(g.group_order) * Rat(edges(i, j))))
                throw internal_error(
                    g.name + ": McKay adjacency does not match the quiver");
        }

    // delta is the minimal isotropic vector: fundamental region membership
    // and (delta, eps_k) = 0 everywhere.
    if (!in_fundamental_region(g.quiver, g.delta))
        throw internal_error(g.name + ": delta not in the fundamental region");
    if (!(g.quiver.cartan_matrix() * g.delta).isZero())
        throw internal_error(g.name + ": delta is not isotropic");

    // Acyclic orientation: indices only increase along arrows by
    // construction; verify anyway.
    for (const auto& [tail, head] : g.quiver.arrows())
        if (tail >= head)
            throw internal_error(g.name + ": quiver orientation has a cycle");
}

}  // namespace

GammaData gamma_data(GroupKind kind, Int ell) {
    GammaData g;
    switch (kind) {
        case GroupKind::Cyclic: g = build_cyclic(ell); break;
        case GroupKind::BinaryDihedral: g = build_binary_dihedral(ell); break;
        case GroupKind::BinaryTetrahedral: g = build_binary_tetrahedral(); break;
        case GroupKind::BinaryOctahedral: g = build_binary_octahedral(); break;
        case GroupKind::BinaryIcosahedral: g = build_binary_icosahedral(); break;
        default: throw input_error("unsupported group kind");
    }
    validate(g);
    return g;
}

GammaData gamma_data_named(const std::string& name) {
    auto colon = name.find(':');
    std::string head = name.substr(0, colon);
    auto param = [&]() -> Int {
        if (colon == std::string::npos)
            throw input_error("group '" + head + "' needs a parameter, e.g. " +
                              head + ":2");
        std::string digits = name.substr(colon + 1);
        if (digits.empty() ||
            digits.find_first_not_of("0123456789") != std::string::npos)
            throw input_error("invalid group parameter in '" + name + "'");
        try {
            return std::stoll(digits);
        } catch (const std::exception&) {
            throw input_error("invalid group parameter in '" + name + "'");
        }
    };
    if (head == "cyclic") return gamma_data(GroupKind::Cyclic, param());
    if (head == "bindihedral")
        return gamma_data(GroupKind::BinaryDihedral, param());
    if (name == "bintetra") return gamma_data(GroupKind::BinaryTetrahedral);
    if (name == "binocta") return gamma_data(GroupKind::BinaryOctahedral);
    if (name == "binicosa") return gamma_data(GroupKind::BinaryIcosahedral);
    throw input_error(
        "unknown group '" + name +
        "' (expected cyclic:l, bindihedral:l, bintetra, binocta, binicosa)");
}

Quiver frame(const GammaData& g) {
    std::vector<std::string> names;
    names.push_back("inf");
    for (const auto& n : g.quiver.vertex_names()) names.push_back(n);
    std::vector<Quiver::Arrow> arrows;
    arrows.emplace_back(0, 1 + g.extending_vertex);
    for (const auto& [tail, head] : g.quiver.arrows())
        arrows.emplace_back(tail + 1, head + 1);
    return Quiver(std::move(names), std::move(arrows));
}

Parameter lambda_of_c(const GammaData& g, const CParam& c) {
    if (c.c_class.size() + 1 != g.classes.size())
        throw input_error("lambda_of_c: expected one weight per nontrivial "
                          "class (" +
                          std::to_string(g.classes.size() - 1) + ")");
    const auto nv = g.quiver.vertex_count();
    Parameter lam(nv);
    for (Eigen::Index k = 0; k < nv; ++k) {
        Cyc value(0);
        if (k == g.extending_vertex)
            value = Cyc(Rat(-g.group_order, 2) * c.c1);
        for (std::size_t c_idx = 1; c_idx < g.classes.size(); ++c_idx)
            value += Rat(g.classes[c_idx].size) * c.c_class[c_idx - 1] *
                     g.char_table[static_cast<std::size_t>(k)][c_idx];
        lam[k] = value;
    }
    return lam;
}

Parameter lambda_prime(const GammaData& g, const Parameter& lam, Int n) {
    if (lam.size() != g.quiver.vertex_count())
        throw input_error("lambda_prime: parameter length mismatch");
    if (n < 1) throw input_error("lambda_prime: n must be positive");
    Parameter out(lam.size() + 1);
    out[0] = -(Rat(n) * dot(lam, g.delta));
    for (Eigen::Index i = 0; i < lam.size(); ++i) out[i + 1] = lam[i];
    if (!dot(out, cm_dim_vector(g, n)).is_zero())
        throw internal_error("lambda_prime does not annihilate the framed "
                             "dimension vector");
    return out;
}

DimVector cm_dim_vector(const GammaData& g, Int n) {
    if (n < 1) throw input_error("cm_dim_vector: n must be positive");
    DimVector v(g.delta.size() + 1);
    v[0] = 1;
    for (Eigen::Index i = 0; i < g.delta.size(); ++i) v[i + 1] = n * g.delta[i];
    return v;
}

}  // namespace qleaf
