#include "qleaf/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

namespace qleaf {

namespace {

Int euler_phi(Int n) {
    Int result = n;
    Int m = n;
    for (Int p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

// Quotient of exact polynomial division (remainder must vanish).
std::vector<Rat> poly_div_exact(std::vector<Rat> num,
                                const std::vector<Rat>& den) {
    const std::size_t dn = num.size() - 1, dd = den.size() - 1;
    std::vector<Rat> quot(dn - dd + 1, Rat(0));
    for (std::size_t k = dn - dd + 1; k-- > 0;) {
        Rat c = num[k + dd] / den[dd];
        quot[k] = c;
        if (!c.is_zero())
            for (std::size_t j = 0; j <= dd; ++j) num[k + j] -= c * den[j];
    }
    for (const Rat& r : num)
        if (!r.is_zero()) throw internal_error("inexact polynomial division");
    return quot;
}

std::vector<Rat> compute_cyclotomic(Int n) {
    // x^n - 1 divided by the product of all lower cyclotomic polynomials.
    std::vector<Rat> num(static_cast<std::size_t>(n) + 1, Rat(0));
    num[0] = Rat(-1);
    num.back() = Rat(1);
    for (Int d = 1; d < n; ++d)
        if (n % d == 0) num = poly_div_exact(std::move(num),
                                             Cyc::cyclotomic_polynomial(d));
    return num;
}

}  // namespace

Int Cyc::basis_size(Int n) { return euler_phi(n); }

const std::vector<Rat>& Cyc::cyclotomic_polynomial(Int n) {
    static std::map<Int, std::vector<Rat>> cache;  // node references are stable
    static std::mutex mu;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    // Computed outside the lock: the recursion over divisors re-enters here.
    auto poly = n == 1 ? std::vector<Rat>{Rat(-1), Rat(1)}
                       : compute_cyclotomic(n);
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(n, std::move(poly)).first->second;
}

std::vector<Rat> Cyc::reduce(Int n, std::vector<Rat> poly) {
    const auto& phi_n = cyclotomic_polynomial(n);
    const std::size_t deg = phi_n.size() - 1;  // = phi(n), monic
    if (poly.size() < deg) poly.resize(deg, Rat(0));
    for (std::size_t k = poly.size(); k-- > deg;) {
        Rat c = poly[k];
        if (!c.is_zero())
            for (std::size_t j = 0; j < deg; ++j)
                poly[k - deg + j] -= c * phi_n[j];
        poly[k] = Rat(0);
    }
    poly.resize(deg);
    return poly;
}

Cyc Cyc::make(Int n, std::vector<Rat> poly) {
    auto reduced = reduce(n, std::move(poly));
    bool constant = true;
    for (std::size_t i = 1; i < reduced.size(); ++i)
        if (!reduced[i].is_zero()) {
            constant = false;
            break;
        }
    if (constant && n != 1) return Cyc(reduced[0]);
    return Cyc(n, std::move(reduced));
}

Cyc Cyc::root_of_unity(Int n, Int k) {
    if (n < 1) throw input_error("root of unity needs order >= 1");
    k %= n;
    if (k < 0) k += n;
    std::vector<Rat> poly(static_cast<std::size_t>(n), Rat(0));
    poly[static_cast<std::size_t>(k)] = Rat(1);
    return make(n, std::move(poly));
}

Cyc Cyc::from_coeffs(Int n, std::vector<Rat> coeffs) {
    if (n < 1) throw input_error("cyclotomic order must be >= 1");
    if (static_cast<Int>(coeffs.size()) > n)
        throw input_error("too many cyclotomic coefficients");
    return make(n, std::move(coeffs));
}

bool Cyc::is_zero() const {
    for (const Rat& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

Rat Cyc::to_rational() const {
    if (order_ != 1) throw input_error("value is not rational: " + str());
    return coeffs_[0];
}

Cyc Cyc::promoted(Int m) const {
    if (m == order_) return *this;
    if (m % order_ != 0)
        throw internal_error("cyclotomic promotion to a non-multiple order");
    const Int step = m / order_;
    std::vector<Rat> poly(static_cast<std::size_t>(m), Rat(0));
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        poly[k * static_cast<std::size_t>(step)] = coeffs_[k];
    // Deliberately no constant demotion here: arithmetic relies on the
    // result carrying exactly phi(m) coefficients.
    return Cyc(m, reduce(m, std::move(poly)));
}

namespace {
Int lcm_order(Int a, Int b) { return std::lcm(a, b); }
}  // namespace

Cyc operator+(const Cyc& a, const Cyc& b) {
    Int m = lcm_order(a.order_, b.order_);
    Cyc pa = a.promoted(m), pb = b.promoted(m);
    std::vector<Rat> sum = pa.coeffs_;
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += pb.coeffs_[i];
    return Cyc::make(m, std::move(sum));
}

Cyc operator-(const Cyc& a, const Cyc& b) { return a + (-b); }

Cyc Cyc::operator-() const {
    std::vector<Rat> neg = coeffs_;
    for (Rat& c : neg) c = -c;
    return Cyc(order_, std::move(neg));
}

Cyc operator*(const Cyc& a, const Cyc& b) {
    Int m = lcm_order(a.order_, b.order_);
    Cyc pa = a.promoted(m), pb = b.promoted(m);
    std::vector<Rat> prod(pa.coeffs_.size() + pb.coeffs_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < pa.coeffs_.size(); ++i) {
        if (pa.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < pb.coeffs_.size(); ++j)
            prod[i + j] += pa.coeffs_[i] * pb.coeffs_[j];
    }
    return Cyc::make(m, std::move(prod));
}

Cyc operator*(const Cyc& a, const Rat& s) {
    std::vector<Rat> scaled = a.coeffs_;
    for (Rat& c : scaled) c *= s;
    return Cyc::make(a.order_, std::move(scaled));
}

bool operator==(const Cyc& a, const Cyc& b) {
    if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
    Int m = lcm_order(a.order_, b.order_);
    return a.promoted(m).coeffs_ == b.promoted(m).coeffs_;
}

std::string Cyc::str() const {
    if (order_ == 1) return coeffs_[0].str();
    std::string s = "[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) s += ",";
        s += coeffs_[i].str();
    }
    s += "]@" + std::to_string(order_);
    return s;
}

Cyc Cyc::parse(const std::string& text) {
    if (text.empty()) throw input_error("empty cyclotomic literal");
    if (text[0] != '[') return Cyc(Rat::parse(text));
    auto close = text.rfind(']');
    auto at = text.rfind('@');
    if (close == std::string::npos || at == std::string::npos || at < close)
        throw input_error("invalid cyclotomic literal '" + text + "'");
    Int n;
    try {
        n = std::stoll(text.substr(at + 1));
    } catch (const std::exception&) {
        throw input_error("invalid cyclotomic order in '" + text + "'");
    }
    if (n < 1) throw input_error("cyclotomic order must be >= 1");
    std::vector<Rat> coeffs;
    std::string body = text.substr(1, close - 1);
    std::size_t start = 0;
    while (start <= body.size() && !body.empty()) {
        auto comma = body.find(',', start);
        auto piece = body.substr(
            start, comma == std::string::npos ? std::string::npos
                                              : comma - start);
        coeffs.push_back(Rat::parse(piece));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return from_coeffs(n, std::move(coeffs));
}

}  // namespace qleaf
