#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <Eigen/Core>

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace cjm {

using BigInt = boost::multiprecision::cpp_int;

// Arbitrary-precision rational, kept in lowest terms with positive
// denominator. This is the only scalar type used by the project; there is no
// floating-point code path anywhere.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long long n) : v_(n) {}
    Rational(int n) : v_(n) {}
    Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}
    Rational(BigInt num, BigInt den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        if (den < 0) { // the backing type wants a canonical positive denominator
            num = -num;
            den = -den;
        }
        v_ = Backing(std::move(num), std::move(den));
    }
    explicit Rational(BigInt n) : v_(std::move(n)) {}

    // Accepts "p" and "p/q" with optional leading sign on p.
    static std::optional<Rational> parse(std::string_view text);

    BigInt numerator() const { return boost::multiprecision::numerator(v_); }
    BigInt denominator() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_.is_zero(); }
    bool is_integer() const { return denominator() == 1; }
    int sign() const { return v_.sign(); }

    Rational inverse() const {
        if (is_zero()) throw std::domain_error("Rational: inverse of zero");
        return Rational(Backing(1 / v_));
    }

    // Exact integer power; negative exponents invert the base.
    static Rational pow(const Rational& base, long long e);

    std::string str() const {
        std::string s = numerator().str();
        if (!is_integer()) s += "/" + denominator().str();
        return s;
    }

    Rational operator-() const { return Rational(Backing(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(Backing(a.v_ + b.v_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(Backing(a.v_ - b.v_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(Backing(a.v_ * b.v_)); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(Backing(a.v_ / b.v_));
    }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend Rational abs(const Rational& a) { return a.v_ < 0 ? -a : a; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    using Backing = boost::multiprecision::cpp_rational;
    explicit Rational(Backing v) : v_(std::move(v)) {}
    Backing v_;
};

inline std::optional<Rational> Rational::parse(std::string_view text) {
    auto parse_int = [](std::string_view s) -> std::optional<BigInt> {
        if (!s.empty() && (s.front() == '+')) s.remove_prefix(1);
        bool neg = false;
        if (!s.empty() && s.front() == '-') {
            neg = true;
            s.remove_prefix(1);
        }
        if (s.empty()) return std::nullopt;
        for (char c : s)
            if (c < '0' || c > '9') return std::nullopt;
        BigInt v{std::string(s)};
        if (neg) v = -v;
        return v;
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        auto n = parse_int(text);
        if (!n) return std::nullopt;
        return Rational(std::move(*n), BigInt(1));
    }
    auto n = parse_int(text.substr(0, slash));
    auto d = parse_int(text.substr(slash + 1));
    if (!n || !d || *d == 0) return std::nullopt;
    return Rational(std::move(*n), std::move(*d));
}

inline Rational Rational::pow(const Rational& base, long long e) {
    if (e < 0) return pow(base.inverse(), -e);
    Rational acc(1), b = base;
    while (e > 0) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

} // namespace cjm

namespace Eigen {

template <>
struct NumTraits<cjm::Rational> : GenericNumTraits<cjm::Rational> {
    typedef cjm::Rational Real;
    typedef cjm::Rational NonInteger;
    typedef cjm::Rational Nested;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 16,
        AddCost = 60,
        MulCost = 60
    };
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};

} // namespace Eigen
