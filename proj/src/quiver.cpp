#include "qleaf/quiver.hpp"

#include <algorithm>
#include <set>

namespace qleaf {

Quiver::Quiver(std::vector<std::string> vertex_names, std::vector<Arrow> arrows)
    : names_(std::move(vertex_names)), arrows_(std::move(arrows)) {
    const auto n = vertex_count();
    if (n == 0) throw input_error("quiver needs at least one vertex");
    std::set<std::string> seen;
    for (const auto& name : names_)
        if (!seen.insert(name).second)
            throw input_error("duplicate vertex name '" + name + "'");
    loops_.assign(static_cast<std::size_t>(n), 0);
    euler_ = IntMatrix::Identity(n, n);
    for (const auto& [tail, head] : arrows_) {
        if (tail < 0 || tail >= n || head < 0 || head >= n)
            throw input_error("arrow endpoint out of range");
        euler_(tail, head) -= 1;
        if (tail == head) loops_[static_cast<std::size_t>(tail)] += 1;
    }
    cartan_ = euler_ + euler_.transpose();
}

std::optional<Eigen::Index> Quiver::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return static_cast<Eigen::Index>(i);
    return std::nullopt;
}

Quiver double_quiver(const Quiver& q) {
    std::vector<Quiver::Arrow> arrows = q.arrows();
    arrows.reserve(arrows.size() * 2);
    for (const auto& [tail, head] : q.arrows()) arrows.emplace_back(head, tail);
    return Quiver(q.vertex_names(), std::move(arrows));
}

namespace {
void check_indexed(const Quiver& q, const DimVector& a, const char* what) {
    if (a.size() != q.vertex_count())
        throw input_error(std::string(what) +
                          ": vector length does not match vertex count");
}
}  // namespace

Int ringel_form(const Quiver& q, const DimVector& a, const DimVector& b) {
    check_indexed(q, a, "ringel_form");
    check_indexed(q, b, "ringel_form");
    return a.dot(q.euler_matrix() * b);
}

Int sym_form(const Quiver& q, const DimVector& a, const DimVector& b) {
    check_indexed(q, a, "sym_form");
    check_indexed(q, b, "sym_form");
    return a.dot(q.cartan_matrix() * b);
}

Int p_value(const Quiver& q, const DimVector& a) {
    Int s = sym_form(q, a, a);
    if (s % 2 != 0) throw internal_error("symmetrised form took an odd value");
    return 1 - s / 2;
}

DimVector reflect(const Quiver& q, Eigen::Index i, const DimVector& a) {
    check_indexed(q, a, "reflect");
    if (i < 0 || i >= q.vertex_count())
        throw input_error("reflect: vertex index out of range");
    if (q.has_loop(i))
        throw input_error("reflect: reflection undefined at loop vertex " +
                          q.vertex_name(i));
    DimVector r = a;
    r[i] -= q.cartan_matrix().row(i).dot(a);
    return r;
}

bool support_connected(const Quiver& q, const DimVector& a) {
    check_indexed(q, a, "support_connected");
    if ((a.array() < 0).any())
        throw input_error("support_connected: vector must be nonnegative");
    const auto n = q.vertex_count();
    std::vector<char> in_support(static_cast<std::size_t>(n), 0);
    Eigen::Index first = -1;
    for (Eigen::Index i = 0; i < n; ++i)
        if (a[i] != 0) {
            in_support[static_cast<std::size_t>(i)] = 1;
            if (first < 0) first = i;
        }
    if (first < 0) return false;  // empty support
    std::vector<char> visited(static_cast<std::size_t>(n), 0);
    std::vector<Eigen::Index> stack{first};
    visited[static_cast<std::size_t>(first)] = 1;
    while (!stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        for (const auto& [tail, head] : q.arrows()) {
            Eigen::Index other = -1;
            if (tail == v) other = head;
            else if (head == v) other = tail;
            else continue;
            auto o = static_cast<std::size_t>(other);
            if (in_support[o] && !visited[o]) {
                visited[o] = 1;
                stack.push_back(other);
            }
        }
    }
    for (Eigen::Index i = 0; i < n; ++i)
        if (in_support[static_cast<std::size_t>(i)] &&
            !visited[static_cast<std::size_t>(i)])
            return false;
    return true;
}

Cyc dot(const Parameter& lam, const DimVector& a) {
    if (lam.size() != a.size())
        throw input_error("dot: parameter and vector lengths differ");
    Cyc sum(0);
    for (Eigen::Index i = 0; i < a.size(); ++i)
        if (a[i] != 0) sum += lam[i] * Rat(a[i]);
    return sum;
}

DimVector unit_vector(Eigen::Index size, Eigen::Index i) {
    DimVector e = DimVector::Zero(size);
    e[i] = 1;
    return e;
}

bool lex_less(const DimVector& a, const DimVector& b) {
    if (a.size() != b.size())
        throw input_error("lex_less: vector lengths differ");
    for (Eigen::Index i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

bool dominated(const DimVector& a, const DimVector& b) {
    if (a.size() != b.size())
        throw input_error("dominated: vector lengths differ");
    return (a.array() <= b.array()).all();
}

std::vector<Int> to_std(const DimVector& a) {
    return std::vector<Int>(a.data(), a.data() + a.size());
}

DimVector from_std(const std::vector<Int>& v) {
    DimVector a(static_cast<Eigen::Index>(v.size()));
    for (std::size_t i = 0; i < v.size(); ++i)
        a[static_cast<Eigen::Index>(i)] = v[i];
    return a;
}

}  // namespace qleaf
