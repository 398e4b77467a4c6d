#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

#include "qleaf/errors.hpp"

namespace qleaf {

using Int = std::int64_t;

/// Exact rational number over 64-bit integers. Always stored reduced with
/// positive denominator. Intermediate products run in 128-bit arithmetic and
/// any result that does not fit back into 64 bits throws instead of wrapping,
/// so every value the library hands out is exact.
class Rat {
public:
    Rat() : num_(0), den_(1) {}
    Rat(Int n) : num_(n), den_(1) {}  // NOLINT: implicit by design
    Rat(int n) : num_(n), den_(1) {}  // NOLINT
    Rat(Int n, Int d) { assign(n, d); }

    Int num() const { return num_; }
    Int den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    friend Rat operator+(const Rat& a, const Rat& b) {
        using W = __int128;
        return from_wide(W(a.num_) * b.den_ + W(b.num_) * a.den_,
                         W(a.den_) * b.den_);
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        using W = __int128;
        return from_wide(W(a.num_) * b.den_ - W(b.num_) * a.den_,
                         W(a.den_) * b.den_);
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        using W = __int128;
        return from_wide(W(a.num_) * b.num_, W(a.den_) * b.den_);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num_ == 0) throw input_error("rational division by zero");
        using W = __int128;
        return from_wide(W(a.num_) * b.den_, W(a.den_) * b.num_);
    }
    Rat operator-() const {
        Rat r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }
    Rat& operator*=(const Rat& o) { return *this = *this * o; }
    Rat& operator/=(const Rat& o) { return *this = *this / o; }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        using W = __int128;
        return W(a.num_) * b.den_ < W(b.num_) * a.den_;
    }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

    /// Canonical form: "p" for integers, "p/q" otherwise, q > 0, reduced.
    std::string str() const {
        std::string s = std::to_string(num_);
        if (den_ != 1) s += "/" + std::to_string(den_);
        return s;
    }

    /// Parses "p" or "p/q" with optional leading sign. Throws input_error.
    static Rat parse(const std::string& text);

    friend std::ostream& operator<<(std::ostream& os, const Rat& r) {
        return os << r.str();
    }

private:
    Int num_;
    Int den_;

    void assign(Int n, Int d) {
        if (d == 0) throw input_error("rational with zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        Int g = std::gcd(n < 0 ? -n : n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        num_ = n;
        den_ = d;
    }

    static Rat from_wide(__int128 n, __int128 d) {
        if (d == 0) throw input_error("rational with zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        __int128 a = n < 0 ? -n : n;
        __int128 g = wide_gcd(a, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        constexpr __int128 lo = INT64_MIN, hi = INT64_MAX;
        if (n < lo || n > hi || d > hi)
            throw internal_error("rational arithmetic overflow");
        Rat r;
        r.num_ = static_cast<Int>(n);
        r.den_ = static_cast<Int>(d);
        return r;
    }

    static __int128 wide_gcd(__int128 a, __int128 b) {
        while (b != 0) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }
};

inline Rat abs(const Rat& r) { return r.num() < 0 ? -r : r; }

inline Rat Rat::parse(const std::string& text) {
    auto bad = [&] { throw input_error("invalid rational '" + text + "'"); };
    auto parse_int = [&](const std::string& s) -> Int {
        if (s.empty()) bad();
        std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
        if (i == s.size()) bad();
        for (std::size_t k = i; k < s.size(); ++k)
            if (s[k] < '0' || s[k] > '9') bad();
        try {
            return std::stoll(s);
        } catch (const std::exception&) {
            bad();
        }
        return 0;
    };
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rat(parse_int(text));
    return Rat(parse_int(text.substr(0, slash)),
               parse_int(text.substr(slash + 1)));
}

}  // namespace qleaf

namespace Eigen {

template <>
struct NumTraits<qleaf::Rat> : GenericNumTraits<qleaf::Rat> {
    typedef qleaf::Rat Real;
    typedef qleaf::Rat NonInteger;
    typedef qleaf::Rat Nested;
    typedef qleaf::Rat Literal;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 2,
        AddCost = 10,
        MulCost = 12,
    };
    static inline Real epsilon() { return qleaf::Rat(0); }
    static inline Real dummy_precision() { return qleaf::Rat(0); }
    static inline int digits10() { return 0; }
};

}  // namespace Eigen
