#include "fano/power_series.hpp"

#include <algorithm>
#include <sstream>

namespace fano {

PowerSeries::PowerSeries(int order) {
    if (order < 0)
        raise(Errc::invalid_argument, "negative truncation order");
    c_.assign(static_cast<size_t>(order) + 1, Rational(0));
}

PowerSeries PowerSeries::one(int order) {
    PowerSeries s(order);
    s.c_[0] = Rational(1);
    return s;
}

const Rational& PowerSeries::coefficient(int k) const {
    if (k < 0 || k > truncation_order())
        raise(Errc::truncation,
              "coefficient " + std::to_string(k) + " beyond truncation order " +
                  std::to_string(truncation_order()));
    return c_[static_cast<size_t>(k)];
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    int n = std::min(a.truncation_order(), b.truncation_order());
    PowerSeries out(n);
    for (int i = 0; i <= n; ++i) {
        if (a.c_[static_cast<size_t>(i)].is_zero())
            continue;
        for (int j = 0; i + j <= n; ++j)
            out.c_[static_cast<size_t>(i + j)] +=
                a.c_[static_cast<size_t>(i)] * b.c_[static_cast<size_t>(j)];
    }
    return out;
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
    int n = std::min(a.truncation_order(), b.truncation_order());
    PowerSeries out(n);
    for (int i = 0; i <= n; ++i)
        out.c_[static_cast<size_t>(i)] = a.c_[static_cast<size_t>(i)] + b.c_[static_cast<size_t>(i)];
    return out;
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
    int n = std::min(a.truncation_order(), b.truncation_order());
    PowerSeries out(n);
    for (int i = 0; i <= n; ++i)
        out.c_[static_cast<size_t>(i)] = a.c_[static_cast<size_t>(i)] - b.c_[static_cast<size_t>(i)];
    return out;
}

bool operator==(const PowerSeries& a, const PowerSeries& b) { return a.c_ == b.c_; }

void PowerSeries::mul_one_minus_power(int b) {
    if (b < 1)
        raise(Errc::invalid_argument, "factor exponent must be >= 1");
    for (int k = truncation_order(); k >= b; --k)
        c_[static_cast<size_t>(k)] -= c_[static_cast<size_t>(k - b)];
}

void PowerSeries::div_one_minus_power(int a) {
    if (a < 1)
        raise(Errc::invalid_argument, "factor exponent must be >= 1");
    for (int k = a; k <= truncation_order(); ++k)
        c_[static_cast<size_t>(k)] += c_[static_cast<size_t>(k - a)];
}

std::string PowerSeries::str(int max_terms) const {
    std::ostringstream os;
    bool first = true;
    int shown = 0;
    for (int k = 0; k <= truncation_order(); ++k) {
        const Rational& v = c_[static_cast<size_t>(k)];
        if (v.is_zero())
            continue;
        if (max_terms >= 0 && shown >= max_terms) {
            os << " + ...";
            break;
        }
        if (!first)
            os << " + ";
        if (k == 0)
            os << v.str();
        else if (v == Rational(1))
            os << "t^" << k;
        else
            os << v.str() << "*t^" << k;
        first = false;
        ++shown;
    }
    if (first)
        os << "0";
    return os.str();
}

PowerSeries expand_product_quotient(const std::vector<int>& numer_exponents,
                                    const std::vector<int>& denom_exponents, int order) {
    for (int e : numer_exponents)
        if (e < 1)
            raise(Errc::invalid_argument, "numerator exponent must be >= 1");
    for (int e : denom_exponents)
        if (e < 1)
            raise(Errc::invalid_argument, "denominator exponent must be >= 1");
    PowerSeries s = PowerSeries::one(order);
    for (int a : denom_exponents)
        s.div_one_minus_power(a);
    for (int b : numer_exponents)
        s.mul_one_minus_power(b);
    return s;
}

} // namespace fano
