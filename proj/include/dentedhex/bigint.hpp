#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <utility>

namespace dhx {

using BigInt = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigInt& x) { return x.str(); }

// C(n, k) over the integers; 0 outside the lattice-path range.
inline BigInt binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;  // exact: r is C(n-k+i, i) after this step
    }
    return r;
}

// Exact rational, always reduced, denominator > 0.
class ExactRatio {
public:
    ExactRatio() : num_(0), den_(1) {}
    ExactRatio(BigInt n) : num_(std::move(n)), den_(1) {}  // NOLINT(google-explicit-constructor)
    ExactRatio(long long n) : num_(n), den_(1) {}          // NOLINT(google-explicit-constructor)
    ExactRatio(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
        if (den_ == 0) throw std::domain_error("ExactRatio: zero denominator");
        normalize();
    }

    const BigInt& numerator() const { return num_; }
    const BigInt& denominator() const { return den_; }

    bool is_integral() const { return den_ == 1; }
    const BigInt& to_integer() const {
        if (!is_integral()) throw std::domain_error("ExactRatio: not an integer: " + str());
        return num_;
    }

    ExactRatio& operator*=(const ExactRatio& o) {
        num_ *= o.num_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    ExactRatio& operator/=(const ExactRatio& o) {
        if (o.num_ == 0) throw std::domain_error("ExactRatio: division by zero");
        num_ *= o.den_;
        den_ *= o.num_;
        normalize();
        return *this;
    }
    ExactRatio& operator+=(const ExactRatio& o) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    ExactRatio& operator-=(const ExactRatio& o) {
        num_ = num_ * o.den_ - o.num_ * den_;
        den_ *= o.den_;
        normalize();
        return *this;
    }

    friend ExactRatio operator*(ExactRatio a, const ExactRatio& b) { return a *= b; }
    friend ExactRatio operator/(ExactRatio a, const ExactRatio& b) { return a /= b; }
    friend ExactRatio operator+(ExactRatio a, const ExactRatio& b) { return a += b; }
    friend ExactRatio operator-(ExactRatio a, const ExactRatio& b) { return a -= b; }
    friend bool operator==(const ExactRatio& a, const ExactRatio& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const ExactRatio& a, const ExactRatio& b) { return !(a == b); }

    std::string str() const {
        return den_ == 1 ? num_.str() : num_.str() + "/" + den_.str();
    }

private:
    void normalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    BigInt num_;
    BigInt den_;
};

}  // namespace dhx
