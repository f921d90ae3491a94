#pragma once

// Exact scalar types: prime fields F_p for machine-word p, and
// arbitrary-precision rationals.  No floating point anywhere.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace homalg {

template <std::uint64_t P>
class Fp {
    static_assert(P >= 2, "prime modulus");
    std::uint64_t v_ = 0;

  public:
    Fp() = default;
    Fp(long long n) {
        long long m = n % static_cast<long long>(P);
        if (m < 0) m += static_cast<long long>(P);
        v_ = static_cast<std::uint64_t>(m);
    }

    static constexpr std::uint64_t characteristic = P;

    std::uint64_t rep() const { return v_; }

    friend Fp operator+(Fp a, Fp b) { return Fp(static_cast<long long>((a.v_ + b.v_) % P)); }
    friend Fp operator-(Fp a, Fp b) { return Fp(static_cast<long long>((a.v_ + P - b.v_) % P)); }
    friend Fp operator*(Fp a, Fp b) {
        return Fp(static_cast<long long>((static_cast<unsigned __int128>(a.v_) * b.v_) % P));
    }
    Fp operator-() const { return Fp(0) - *this; }
    Fp& operator+=(Fp b) { return *this = *this + b; }
    Fp& operator-=(Fp b) { return *this = *this - b; }
    Fp& operator*=(Fp b) { return *this = *this * b; }

    Fp inv() const {
        if (v_ == 0) throw std::domain_error("Fp: inverse of zero");
        // extended Euclid
        long long t = 0, nt = 1;
        long long r = static_cast<long long>(P), nr = static_cast<long long>(v_);
        while (nr != 0) {
            long long q = r / nr;
            long long tmp = t - q * nt;
            t = nt;
            nt = tmp;
            tmp = r - q * nr;
            r = nr;
            nr = tmp;
        }
        return Fp(t);
    }
    friend Fp operator/(Fp a, Fp b) { return a * b.inv(); }

    friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }
    friend bool operator!=(Fp a, Fp b) { return a.v_ != b.v_; }

    bool is_zero() const { return v_ == 0; }

    std::string str() const { return std::to_string(v_); }

    static Fp from_string(const std::string& s) {
        return Fp(std::stoll(s));
    }
};

using F2 = Fp<2>;
using F3 = Fp<3>;
using F5 = Fp<5>;

// Arbitrary-precision rational.
class Rat {
    boost::multiprecision::cpp_rational v_;

  public:
    Rat() = default;
    Rat(long long n) : v_(n) {}
    Rat(long long num, long long den) : v_(num, den) {}
    explicit Rat(boost::multiprecision::cpp_rational v) : v_(std::move(v)) {}

    static constexpr std::uint64_t characteristic = 0;

    const boost::multiprecision::cpp_rational& rep() const { return v_; }

    friend Rat operator+(const Rat& a, const Rat& b) { return Rat(a.v_ + b.v_); }
    friend Rat operator-(const Rat& a, const Rat& b) { return Rat(a.v_ - b.v_); }
    friend Rat operator*(const Rat& a, const Rat& b) { return Rat(a.v_ * b.v_); }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.is_zero()) throw std::domain_error("Rat: divide by zero");
        return Rat(a.v_ / b.v_);
    }
    Rat operator-() const { return Rat(-v_); }
    Rat& operator+=(const Rat& b) { v_ += b.v_; return *this; }
    Rat& operator-=(const Rat& b) { v_ -= b.v_; return *this; }
    Rat& operator*=(const Rat& b) { v_ *= b.v_; return *this; }

    Rat inv() const {
        if (is_zero()) throw std::domain_error("Rat: inverse of zero");
        return Rat(1) / *this;
    }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

    bool is_zero() const { return v_ == 0; }

    std::string str() const {
        if (boost::multiprecision::denominator(v_) == 1)
            return numerator(v_).str();
        return numerator(v_).str() + "/" + denominator(v_).str();
    }

    static Rat from_string(const std::string& s) {
        auto slash = s.find('/');
        if (slash == std::string::npos)
            return Rat(boost::multiprecision::cpp_rational(boost::multiprecision::cpp_int(s)));
        boost::multiprecision::cpp_int num(s.substr(0, slash)), den(s.substr(slash + 1));
        if (den == 0) throw std::domain_error("Rat: zero denominator");
        return Rat(boost::multiprecision::cpp_rational(num, den));
    }
};

template <class K>
constexpr std::uint64_t field_char = K::characteristic;

template <class K> inline const char* field_tag();
template <> inline const char* field_tag<F2>() { return "f2"; }
template <> inline const char* field_tag<F3>() { return "f3"; }
template <> inline const char* field_tag<F5>() { return "f5"; }
template <> inline const char* field_tag<Rat>() { return "q"; }

// (-1)^n as a scalar
template <class K>
K sign_pow(long long n) {
    return (n % 2 == 0) ? K(1) : K(-1);
}

} // namespace homalg
