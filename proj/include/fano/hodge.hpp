#pragma once

#include <string>
#include <vector>

#include "fano/power_series.hpp"

namespace fano {

/// The two free Hodge numbers of a Fano 3-fold; everything else in the
/// diamond is forced (h00 = h33 = 1, h22 = h11, h12 = h21, zeros elsewhere).
struct HodgeDiamond {
    int h11 = 1;
    int h21 = 0;

    int euler() const { return 2 + 2 * h11 - 2 * h21; }
    std::string str() const;
};

HodgeDiamond hodge_diamond(int h11, int h21);

/// Hilbert series of the Milnor algebra of a quasismooth hypersurface of
/// degree d: prod (1-t^{d-a_i}) / prod (1-t^{a_i}).
PowerSeries milnor_series(const std::vector<int>& weights, int d, int order);

/// Truncation order large enough for every graded piece the residue
/// calculus reads off (top symmetric degree 5d - 2*sum(a)).
int milnor_order(const std::vector<int>& weights, int d);

/// dim of the Milnor algebra in degree p*d - sum(a); zero when the exponent
/// is negative.
int primitive_hodge(const std::vector<int>& weights, int d, int p);

/// h21 of the hypersurface: the p = 2 graded piece.
int h21_hypersurface(const std::vector<int>& weights, int d);

} // namespace fano
