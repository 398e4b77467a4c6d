#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

#include "qleaf/rational.hpp"

namespace qleaf {

/// Element of a cyclotomic field Q(zeta_N), stored as rational coefficients
/// over the power basis 1, zeta, ..., zeta^(phi(N)-1) after reduction by the
/// N-th cyclotomic polynomial. Values whose reduced form is a constant are
/// demoted to N = 1, so plain rationals always print and compare as such.
/// Operands of different orders are promoted to the lcm before combining,
/// which makes equality well defined across orders.
class Cyc {
public:
    Cyc() : order_(1), coeffs_{Rat(0)} {}
    Cyc(const Rat& r) : order_(1), coeffs_{r} {}  // NOLINT: implicit by design
    Cyc(Int n) : order_(1), coeffs_{Rat(n)} {}    // NOLINT
    Cyc(int n) : order_(1), coeffs_{Rat(n)} {}    // NOLINT

    /// zeta_n^k, reduced to canonical form.
    static Cyc root_of_unity(Int n, Int k);

    /// From raw power-basis coefficients c0 + c1*zeta_n + ...; any length
    /// below n is accepted and reduced.
    static Cyc from_coeffs(Int n, std::vector<Rat> coeffs);

    Int order() const { return order_; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const { return order_ == 1; }
    /// Throws input_error when the value is irrational.
    Rat to_rational() const;

    friend Cyc operator+(const Cyc& a, const Cyc& b);
    friend Cyc operator-(const Cyc& a, const Cyc& b);
    friend Cyc operator*(const Cyc& a, const Cyc& b);
    Cyc operator-() const;
    Cyc& operator+=(const Cyc& o) { return *this = *this + o; }
    Cyc& operator-=(const Cyc& o) { return *this = *this - o; }
    Cyc& operator*=(const Cyc& o) { return *this = *this * o; }

    friend Cyc operator*(const Cyc& a, const Rat& s);
    friend Cyc operator*(const Rat& s, const Cyc& a) { return a * s; }

    friend bool operator==(const Cyc& a, const Cyc& b);
    friend bool operator!=(const Cyc& a, const Cyc& b) { return !(a == b); }

    /// Canonical text form: a plain rational for N = 1, otherwise
    /// "[c0,c1,...]@N" with phi(N) coefficients.
    std::string str() const;

    /// Parses either a rational or the "[c0,c1,...]@N" form.
    static Cyc parse(const std::string& text);

    /// Same value viewed in Q(zeta_m); m must be a multiple of the order.
    Cyc promoted(Int m) const;

    friend std::ostream& operator<<(std::ostream& os, const Cyc& c) {
        return os << c.str();
    }

    /// phi(n), also the canonical coefficient count at order n.
    static Int basis_size(Int n);

    /// Coefficients of the n-th cyclotomic polynomial (monic, degree phi(n)).
    static const std::vector<Rat>& cyclotomic_polynomial(Int n);

private:
    Int order_;
    std::vector<Rat> coeffs_;  // size phi(order_)

    Cyc(Int order, std::vector<Rat> reduced)
        : order_(order), coeffs_(std::move(reduced)) {}

    static std::vector<Rat> reduce(Int n, std::vector<Rat> poly);
    static Cyc make(Int n, std::vector<Rat> poly);
};

}  // namespace qleaf

namespace Eigen {

template <>
struct NumTraits<qleaf::Cyc> : GenericNumTraits<qleaf::Cyc> {
    typedef qleaf::Cyc Real;
    typedef qleaf::Cyc NonInteger;
    typedef qleaf::Cyc Nested;
    typedef qleaf::Cyc Literal;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 40,
        MulCost = 80,
    };
    static inline Real epsilon() { return qleaf::Cyc(0); }
    static inline Real dummy_precision() { return qleaf::Cyc(0); }
    static inline int digits10() { return 0; }
};

}  // namespace Eigen
