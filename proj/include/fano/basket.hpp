#pragma once

#include <array>
#include <string>
#include <vector>

#include "fano/rational.hpp"

namespace fano {

class WeightedSpace;

/// Isolated cyclic quotient singularity 1/r(w1,w2,w3), stored in canonical
/// form: the weight triple is reduced mod r and normalised under unit
/// multiplication, preferring the terminal presentation 1/r(1,a,r-a).
struct QuotientSingularity {
    int r = 0;
    std::array<int, 3> weights{};

    /// True when the triple is 1/r(1,a,r-a) with every weight coprime to r.
    bool is_terminal() const;
    std::string str() const; // "1/r(w1,w2,w3)"

    friend bool operator==(const QuotientSingularity&, const QuotientSingularity&) = default;
    friend auto operator<=>(const QuotientSingularity&, const QuotientSingularity&) = default;
};

/// Canonical representative; throws non_isolated if any weight is divisible
/// by r.
QuotientSingularity normalize_quotient(int r, std::array<int, 3> raw_weights);

/// Multiset of quotient singularities carried by a general member.
class Basket {
  public:
    Basket() = default;

    void add(const QuotientSingularity& q, int count = 1);
    const std::vector<std::pair<QuotientSingularity, int>>& entries() const { return e_; }
    bool empty() const { return e_.empty(); }

    /// sum over the basket of (r - 1), the quantity entering the elephant
    /// invariant.
    int index_sum() const;
    /// sum over the basket of (r - 1)/r, the Blache correction term.
    Rational blache_correction() const;

    std::string str() const; // "{ 2 x 1/2(1,1,1), 1/6(1,1,5) }"

    friend bool operator==(const Basket&, const Basket&) = default;

  private:
    std::vector<std::pair<QuotientSingularity, int>> e_; // sorted by singularity
};

/// One singular stratum of the ambient space: the locus where exactly the
/// coordinates with weight divisible by q survive.
struct SingularStratum {
    int q = 0;                // common factor, >= 2; equals gcd of the member weights
    std::vector<int> members; // coordinate indices, ascending
};

/// All singular strata of the ambient, ordered by descending q. A candidate q
/// is kept only when it equals the gcd of every weight it divides; finer
/// divisors reappear as their own strata.
std::vector<SingularStratum> singular_strata(const WeightedSpace& ambient);

/// Basket of a general quasismooth complete intersection of the given
/// multidegree, by stratum-by-stratum analysis: monomial existence decides
/// which coordinate points lie on X and which variable each equation
/// eliminates; weighted Bezout counts stratum points, with deeper strata
/// subtracted at their own index. Throws not_terminal when the singular
/// locus is positive-dimensional, ambiguity when elimination certificates
/// disagree, inconsistency when a count fails to be a non-negative integer.
Basket compute_basket_ci(const WeightedSpace& ambient, const std::vector<int>& degrees);

/// Hypersurface case of the above (five weights, one degree).
Basket compute_basket_hypersurface(const WeightedSpace& ambient, int degree);

} // namespace fano
