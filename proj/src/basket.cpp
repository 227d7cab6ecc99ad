#include "fano/basket.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "fano/family.hpp"

namespace fano {

bool QuotientSingularity::is_terminal() const {
    for (int w : weights)
        if (std::gcd(w, r) != 1)
            return false;
    return weights[0] == 1 && (weights[1] + weights[2]) % r == 0;
}

std::string QuotientSingularity::str() const {
    std::ostringstream os;
    os << "1/" << r << "(" << weights[0] << "," << weights[1] << "," << weights[2] << ")";
    return os.str();
}

QuotientSingularity normalize_quotient(int r, std::array<int, 3> raw) {
    if (r < 2)
        raise(Errc::invalid_argument, "quotient index must be >= 2");
    std::array<int, 3> base{};
    for (int i = 0; i < 3; ++i) {
        base[i] = ((raw[i] % r) + r) % r;
        if (base[i] == 0)
            raise(Errc::non_isolated, "weight " + std::to_string(raw[i]) +
                                          " divisible by index " + std::to_string(r));
    }
    // orbit under multiplication by units mod r; canonical form prefers the
    // terminal presentation 1/r(1,a,r-a), then lexicographic order
    std::optional<std::array<int, 3>> best, best_terminal;
    for (int u = 1; u < r; ++u) {
        if (std::gcd(u, r) != 1)
            continue;
        std::array<int, 3> t{};
        for (int i = 0; i < 3; ++i)
            t[i] = (base[i] * u) % r;
        std::sort(t.begin(), t.end());
        if (!best || t < *best)
            best = t;
        if (t[0] == 1 && (t[1] + t[2]) % r == 0 && (!best_terminal || t < *best_terminal))
            best_terminal = t;
    }
    return {r, best_terminal ? *best_terminal : *best};
}

void Basket::add(const QuotientSingularity& q, int count) {
    if (count < 1)
        raise(Errc::invalid_argument, "basket multiplicity must be >= 1");
    for (auto& [s, c] : e_) {
        if (s == q) {
            c += count;
            return;
        }
    }
    e_.emplace_back(q, count);
    std::sort(e_.begin(), e_.end());
}

int Basket::index_sum() const {
    int s = 0;
    for (const auto& [q, c] : e_)
        s += (q.r - 1) * c;
    return s;
}

Rational Basket::blache_correction() const {
    Rational s(0);
    for (const auto& [q, c] : e_)
        s += Rational(BigInt(q.r - 1) * c, BigInt(q.r));
    return s;
}

std::string Basket::str() const {
    if (e_.empty())
        return "{}";
    std::ostringstream os;
    os << "{ ";
    for (size_t i = 0; i < e_.size(); ++i) {
        if (i)
            os << ", ";
        if (e_[i].second > 1)
            os << e_[i].second << " x ";
        os << e_[i].first.str();
    }
    os << " }";
    return os.str();
}

std::vector<SingularStratum> singular_strata(const WeightedSpace& ambient) {
    const auto& w = ambient.weights();
    std::set<int> candidates;
    for (int a : w)
        for (int q = 2; q <= a; ++q)
            if (a % q == 0)
                candidates.insert(q);
    std::vector<SingularStratum> out;
    for (auto it = candidates.rbegin(); it != candidates.rend(); ++it) {
        int q = *it;
        SingularStratum s;
        s.q = q;
        int g = 0;
        for (size_t i = 0; i < w.size(); ++i)
            if (w[i] % q == 0) {
                s.members.push_back(static_cast<int>(i));
                g = std::gcd(g, w[i]);
            }
        if (g == q) // otherwise every point of the stratum has a larger stabiliser
            out.push_back(std::move(s));
    }
    return out;
}

namespace {

/// Exponent vectors e >= 0 with sum e_i * weights_i == degree.
void enumerate_monomials(const std::vector<int>& weights, int degree, size_t i,
                         std::vector<int>& acc, std::vector<std::vector<int>>& out) {
    if (degree < 0)
        return;
    if (i + 1 == weights.size()) {
        if (degree % weights[i] == 0) {
            acc.push_back(degree / weights[i]);
            out.push_back(acc);
            acc.pop_back();
        }
        return;
    }
    for (int e = 0; e * weights[i] <= degree; ++e) {
        acc.push_back(e);
        enumerate_monomials(weights, degree - e * weights[i], i + 1, acc, out);
        acc.pop_back();
    }
}

std::vector<std::vector<int>> monomials(const std::vector<int>& weights, int degree) {
    std::vector<std::vector<int>> out;
    if (degree < 0 || weights.empty())
        return out;
    std::vector<int> acc;
    enumerate_monomials(weights, degree, 0, acc, out);
    return out;
}

bool monomial_exists(const std::vector<int>& weights, int degree) {
    return !monomials(weights, degree).empty();
}

/// All ways to pick one distinct eliminated variable per equation; every
/// consistent assignment must give the same singularity type.
QuotientSingularity resolve_type(int q, const std::vector<int>& outside_weights,
                                 const std::vector<std::vector<int>>& candidate_sets,
                                 const std::string& where) {
    std::set<QuotientSingularity> types;
    std::vector<int> pick;
    auto rec = [&](auto&& self, size_t level) -> void {
        if (level == candidate_sets.size()) {
            std::vector<int> tw;
            for (size_t j = 0; j < outside_weights.size(); ++j)
                if (std::find(pick.begin(), pick.end(), static_cast<int>(j)) == pick.end())
                    tw.push_back(outside_weights[j]);
            if (tw.size() != 3)
                raise(Errc::inconsistency, "transverse dimension wrong at " + where);
            types.insert(normalize_quotient(q, {tw[0], tw[1], tw[2]}));
            return;
        }
        for (int j : candidate_sets[level]) {
            if (std::find(pick.begin(), pick.end(), j) != pick.end())
                continue;
            pick.push_back(j);
            self(self, level + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);
    if (types.empty())
        raise(Errc::ambiguity, "no monomial certificate eliminates variables at " + where);
    if (types.size() > 1)
        raise(Errc::ambiguity, "elimination certificates disagree at " + where);
    return *types.begin();
}

} // namespace

Basket compute_basket_ci(const WeightedSpace& ambient, const std::vector<int>& degrees) {
    const auto& w = ambient.weights();
    const int c = static_cast<int>(degrees.size());
    if (static_cast<int>(w.size()) != c + 4)
        raise(Errc::invalid_argument, "a 3-fold cut by " + std::to_string(c) +
                                          " equations needs " + std::to_string(c + 4) +
                                          " weights");

    auto strata = singular_strata(ambient); // descending q
    std::map<int, Rational> counts;         // points with stabiliser exactly q
    Basket basket;

    for (const auto& st : strata) {
        const int q = st.q;
        const int m = static_cast<int>(st.members.size());
        std::vector<int> sw;
        for (int i : st.members)
            sw.push_back(w[i]);
        std::vector<int> outside_idx;
        std::vector<int> outside_w;
        for (size_t i = 0; i < w.size(); ++i)
            if (std::find(st.members.begin(), st.members.end(), static_cast<int>(i)) ==
                st.members.end()) {
                outside_idx.push_back(static_cast<int>(i));
                outside_w.push_back(w[i]);
            }
        const std::string where = "stratum " + std::to_string(q) + " of " + ambient.str();

        std::vector<std::vector<std::vector<int>>> restr; // per-equation stratum monomials
        for (int d : degrees)
            restr.push_back(monomials(sw, d));
        int active = 0;
        for (const auto& ms : restr)
            if (!ms.empty())
                ++active;

        if (m == 1) {
            // coordinate point; on X iff no equation has a pure power there
            if (active > 0) {
                counts[q] = Rational(0);
                continue;
            }
            std::vector<std::vector<int>> cand(static_cast<size_t>(c));
            for (int e = 0; e < c; ++e)
                for (size_t j = 0; j < outside_w.size(); ++j) {
                    int rem = degrees[static_cast<size_t>(e)] - outside_w[j];
                    if (rem >= 0 && rem % q == 0)
                        cand[static_cast<size_t>(e)].push_back(static_cast<int>(j));
                }
            basket.add(resolve_type(q, outside_w, cand, where), 1);
            counts[q] = Rational(1);
        } else if (m == 2) {
            if (active == 0)
                raise(Errc::not_terminal, "X contains the curve " + where);
            if (active > 1) {
                // more equations than the stratum dimension: generic intersection empty
                counts[q] = Rational(0);
                continue;
            }
            // one equation cuts along the edge; interior zeros of its restriction
            size_t e_act = 0;
            while (restr[e_act].empty())
                ++e_act;
            int amin = restr[e_act][0][0], amax = amin;
            for (const auto& mono : restr[e_act]) {
                amin = std::min(amin, mono[0]);
                amax = std::max(amax, mono[0]);
            }
            int step = sw[1] / std::gcd(sw[0], sw[1]);
            int interior = (amax - amin) / step;
            // equations vanishing on the edge eliminate one transverse variable each
            std::vector<std::vector<int>> cand;
            for (int e = 0; e < c; ++e) {
                if (e == static_cast<int>(e_act))
                    continue;
                std::vector<int> cs;
                for (size_t j = 0; j < outside_w.size(); ++j)
                    if (monomial_exists(sw, degrees[static_cast<size_t>(e)] - outside_w[j]))
                        cs.push_back(static_cast<int>(j));
                cand.push_back(std::move(cs));
            }
            if (interior > 0)
                basket.add(resolve_type(q, outside_w, cand, where), interior);
            counts[q] = Rational(interior);
        } else if (m == 3) {
            if (c < 2 || active < c)
                raise(Errc::not_terminal, "positive-dimensional singular locus on " + where);
            // weighted Bezout on the plane, then peel off points that belong
            // to deeper strata, weighted by their local multiplicity
            BigInt dn = 1, dw = 1;
            for (int d : degrees)
                dn *= d;
            for (int x : sw)
                dw *= x;
            Rational n_orb(dn, dw);
            for (const auto& st2 : strata) {
                if (st2.q <= q || st2.q % q != 0)
                    continue;
                auto it = counts.find(st2.q);
                if (it == counts.end() || it->second.is_zero())
                    continue;
                // multiplicity of each deeper point in the plane intersection
                BigInt mult = 1;
                if (st2.members.size() == 2) {
                    for (int e = 0; e < c; ++e) {
                        std::vector<int> sub{w[st2.members[0]], w[st2.members[1]]};
                        if (monomial_exists(sub, degrees[static_cast<size_t>(e)]))
                            continue; // meets the sub-edge transversally
                        // vanishes on the sub-edge: order = least power of the
                        // complementary plane variable
                        int comp = -1;
                        for (size_t k = 0; k < st.members.size(); ++k)
                            if (std::find(st2.members.begin(), st2.members.end(),
                                          st.members[k]) == st2.members.end())
                                comp = static_cast<int>(k);
                        int kmin = -1;
                        for (const auto& mono : restr[static_cast<size_t>(e)]) {
                            int v = mono[static_cast<size_t>(comp)];
                            kmin = kmin < 0 ? v : std::min(kmin, v);
                        }
                        mult *= kmin;
                    }
                } else if (st2.members.size() == 1) {
                    for (int e = 0; e < c; ++e) {
                        int kmin = -1;
                        for (const auto& mono : restr[static_cast<size_t>(e)]) {
                            int v = 0;
                            for (size_t k = 0; k < st.members.size(); ++k)
                                if (st.members[k] != st2.members[0])
                                    v += mono[k];
                            kmin = kmin < 0 ? v : std::min(kmin, v);
                        }
                        mult *= kmin;
                    }
                }
                n_orb -= it->second * Rational(mult) / Rational(st2.q);
            }
            Rational nq = n_orb * Rational(q);
            if (!nq.is_integer() || nq < Rational(0))
                raise(Errc::inconsistency,
                      "stratum count " + nq.str() + " on " + where + " is not a whole number");
            int n = static_cast<int>(nq.to_integer());
            if (n > 0) {
                if (outside_w.size() != 3)
                    raise(Errc::inconsistency, "transverse dimension wrong at " + where);
                basket.add(normalize_quotient(q, {outside_w[0], outside_w[1], outside_w[2]}), n);
            }
            counts[q] = nq;
        } else {
            raise(Errc::not_terminal,
                  "singular stratum of dimension " + std::to_string(m - 1) + " in " + where);
        }
    }
    return basket;
}

Basket compute_basket_hypersurface(const WeightedSpace& ambient, int degree) {
    if (ambient.weights().size() != 5)
        raise(Errc::invalid_argument, "hypersurface 3-fold needs 5 weights");
    return compute_basket_ci(ambient, {degree});
}

} // namespace fano
