#pragma once

#include <vector>

#include "fano/rational.hpp"

namespace fano {

/// Truncated formal power series with exact rational coefficients.
/// A series of truncation order N stores coefficients of t^0..t^N; it never
/// extends itself, and binary operations truncate to the smaller order.
class PowerSeries {
  public:
    /// Zero series of the given truncation order.
    explicit PowerSeries(int order);

    static PowerSeries one(int order);

    int truncation_order() const { return static_cast<int>(c_.size()) - 1; }

    /// Coefficient of t^k; k beyond the truncation order is a hard error,
    /// never silently zero.
    const Rational& coefficient(int k) const;

    Rational& at(int k) { return c_[static_cast<size_t>(k)]; }

    /// Cauchy product truncated at min of the two orders.
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);

    friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
    friend bool operator==(const PowerSeries& a, const PowerSeries& b);

    /// In-place multiply by (1 - t^b).
    void mul_one_minus_power(int b);
    /// In-place divide by (1 - t^a); exact since (1 - t^a) is a unit mod t^{N+1}.
    void div_one_minus_power(int a);

    std::string str(int max_terms = -1) const;

  private:
    std::vector<Rational> c_;
};

/// prod_i (1 - t^{b_i}) / prod_j (1 - t^{a_j}) truncated at t^N.
/// This is the only series division the project needs.
PowerSeries expand_product_quotient(const std::vector<int>& numer_exponents,
                                    const std::vector<int>& denom_exponents, int order);

inline PowerSeries series_mul(const PowerSeries& a, const PowerSeries& b) { return a * b; }

} // namespace fano
