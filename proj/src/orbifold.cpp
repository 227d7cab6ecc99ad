#include "fano/orbifold.hpp"

#include <array>

#include "fano/family.hpp"

namespace fano {

namespace {

// polynomials in h truncated at h^3; all the formula ever needs
using H3 = std::array<Rational, 4>;

H3 mul_linear(const H3& c, int a) { // * (1 + a h)
    H3 out = c;
    for (int i = 3; i >= 1; --i)
        out[static_cast<size_t>(i)] += Rational(a) * c[static_cast<size_t>(i - 1)];
    return out;
}

H3 div_linear(const H3& c, int d) { // * (1 - d h + d^2 h^2 - d^3 h^3)
    H3 g{Rational(1), Rational(-d), Rational(BigInt(d) * d), Rational(-BigInt(d) * d * d)};
    H3 out{};
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; i + j < 4; ++j)
            out[i + j] += c[i] * g[j];
    return out;
}

} // namespace

Rational euler_orbifold_ci(const WeightedSpace& ambient, const std::vector<int>& degrees) {
    if (ambient.weights().size() != degrees.size() + 4)
        raise(Errc::invalid_argument, "not a 3-fold complete intersection");
    H3 c{Rational(1), Rational(0), Rational(0), Rational(0)};
    for (int a : ambient.weights())
        c = mul_linear(c, a);
    for (int d : degrees)
        c = div_linear(c, d);
    BigInt dn = 1, dw = 1;
    for (int d : degrees)
        dn *= d;
    for (int a : ambient.weights())
        dw *= a;
    return c[3] * Rational(dn, dw);
}

int euler_topological(const Rational& e_orb, const Basket& basket) {
    Rational e = e_orb + basket.blache_correction();
    if (!e.is_integer())
        raise(Errc::inconsistency,
              "orbifold Euler number " + e_orb.str() + " plus basket correction " +
                  basket.blache_correction().str() + " = " + e.str() + " is not an integer");
    return static_cast<int>(e.to_integer());
}

} // namespace fano
