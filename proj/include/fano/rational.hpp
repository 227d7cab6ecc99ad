#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "fano/error.hpp"

namespace fano {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number, always in lowest terms with positive denominator.
/// Every quantity in this project is computed over these; there is no
/// floating point anywhere.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long long n) : v_(static_cast<long long>(n)) {}
    Rational(const BigInt& n) : v_(n) {}
    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0)
            raise(Errc::invalid_argument, "rational with zero denominator");
        // the backend insists on a positive denominator
        v_ = den < 0 ? boost::multiprecision::cpp_rational(-num, -den)
                     : boost::multiprecision::cpp_rational(num, den);
    }

    BigInt num() const { return boost::multiprecision::numerator(v_); }
    BigInt den() const { return boost::multiprecision::denominator(v_); }

    bool is_integer() const { return den() == 1; }
    bool is_zero() const { return v_ == 0; }

    /// Exact integer value; refuses to round.
    BigInt to_integer() const {
        if (!is_integer())
            raise(Errc::inconsistency, "expected integer, got " + str());
        return num();
    }
    long long to_int64() const { return static_cast<long long>(to_integer()); }

    Rational operator-() const { return Rational(-v_); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.v_ == 0)
            raise(Errc::invalid_argument, "division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    /// "p/q" for proper fractions, bare "p" for integers.
    std::string str() const {
        std::string s = num().str();
        if (!is_integer())
            s += "/" + den().str();
        return s;
    }

  private:
    explicit Rational(boost::multiprecision::cpp_rational v) : v_(std::move(v)) {}
    boost::multiprecision::cpp_rational v_;
};

} // namespace fano
