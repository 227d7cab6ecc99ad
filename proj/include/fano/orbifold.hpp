#pragma once

#include <vector>

#include "fano/basket.hpp"
#include "fano/rational.hpp"

namespace fano {

class WeightedSpace;

/// Orbifold Euler number of a complete-intersection 3-fold, computed from the
/// formal Chern series: the h^3 coefficient of prod(1+a_i h)/prod(1+d_j h)
/// scaled by deg X = prod(d)/prod(a). Exact rational; for a smooth X this is
/// the topological Euler characteristic itself.
Rational euler_orbifold_ci(const WeightedSpace& ambient, const std::vector<int>& degrees);

/// Topological Euler characteristic from the orbifold one:
/// e = e_orb + sum (r-1)/r over the basket. The sum must close up to an
/// integer; anything else means the basket and the model disagree.
int euler_topological(const Rational& e_orb, const Basket& basket);

} // namespace fano
