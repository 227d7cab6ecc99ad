#include "fano/moduli.hpp"

#include "fano/hodge.hpp"

namespace fano {

int elephant_sections(const FamilyRecord& r) {
    if (r.index != 1)
        raise(Errc::unsupported_index, "elephant sections computed only for index 1");
    return degree_one_sections(r) - 1;
}

int alpha_invariant(const Basket& basket_of_elephant, int h0_elephant) {
    return 20 - basket_of_elephant.index_sum() - h0_elephant;
}

int h1_tangent(int h21, int alpha, int h22) { return h21 + alpha - h22; }

int jacobian_moduli_oracle(const std::vector<int>& weights, int d) {
    PowerSeries m = milnor_series(weights, d, d);
    return static_cast<int>(m.coefficient(d).to_integer());
}

ModuliResult moduli_for(const FamilyRecord& r, const Basket& basket, int h21) {
    ModuliResult out;
    int p1 = degree_one_sections(r);
    out.elephant_exists = p1 >= 1;
    out.h0_elephant = p1 - 1;
    if (r.alpha) {
        out.alpha = *r.alpha;
        out.alpha_from_catalog = true;
    } else {
        out.alpha = alpha_invariant(basket, out.h0_elephant);
    }
    out.h1_tangent = h1_tangent(h21, out.alpha, r.h11); // h22 = h11 by duality
    return out;
}

} // namespace fano
