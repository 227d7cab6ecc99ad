#pragma once

#include <optional>
#include <vector>

#include "fano/basket.hpp"
#include "fano/family.hpp"

namespace fano {

/// Deformation count of a family and the pieces it is assembled from.
struct ModuliResult {
    int alpha = 0;        // 20 - sum(r-1) - h0_elephant, or the catalogued value
    int h0_elephant = 0;  // h^0(E, O_E(1)) as chi from the restriction sequence
    int h1_tangent = 0;   // h21 + alpha - h22
    bool elephant_exists = false;
    bool alpha_from_catalog = false;
};

/// h^0(E, O_E(1)) for an index-1 family, read off the restriction sequence:
/// P_1 - 1. The value is the formal Euler characteristic and goes negative
/// exactly when the family has no elephant (P_1 = 0); keeping it unclamped is
/// what makes the moduli formula close on elephant-free rows.
int elephant_sections(const FamilyRecord& r);

/// alpha = 20 - sum over the basket of (r-1) - h0_elephant.
int alpha_invariant(const Basket& basket_of_elephant, int h0_elephant);

/// h1(T_X) = h21 + alpha - h22, valid when h0(T_X) = 0 (complete
/// intersections and wGr(2,5) sections; external rows carry the assumption
/// as catalogue data).
int h1_tangent(int h21, int alpha, int h22);

/// Independent check for hypersurfaces: dim of the degree-d piece of the
/// Milnor algebra, which is h1(T_X) for an index-1 quasismooth hypersurface.
int jacobian_moduli_oracle(const std::vector<int>& weights, int d);

/// Assemble the moduli count of a record: basket-based alpha unless the
/// catalogue pins one, h22 = h11 by duality.
ModuliResult moduli_for(const FamilyRecord& r, const Basket& basket, int h21);

} // namespace fano
