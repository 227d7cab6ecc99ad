#include "fano/family.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace fano {

WeightedSpace::WeightedSpace(std::vector<int> weights) : w_(std::move(weights)) {
    std::sort(w_.begin(), w_.end());
}

int WeightedSpace::weight_sum() const { return std::accumulate(w_.begin(), w_.end(), 0); }

int WeightedSpace::count_weight(int value) const {
    return static_cast<int>(std::count(w_.begin(), w_.end(), value));
}

bool WeightedSpace::all_weights_one() const {
    return !w_.empty() && w_.back() == 1;
}

std::string WeightedSpace::str() const {
    std::ostringstream os;
    os << "P(";
    for (size_t i = 0; i < w_.size(); ++i)
        os << (i ? "," : "") << w_[i];
    os << ")";
    return os.str();
}

EquationModel EquationModel::ci(std::vector<int> degrees) {
    EquationModel m;
    m.kind = ModelKind::complete_intersection;
    m.degrees = std::move(degrees);
    std::sort(m.degrees.begin(), m.degrees.end());
    return m;
}

EquationModel EquationModel::pfaffian(std::vector<int> degrees) {
    EquationModel m;
    m.kind = ModelKind::pfaffian;
    m.degrees = std::move(degrees);
    std::sort(m.degrees.begin(), m.degrees.end());
    return m;
}

ProjectionKind projection_kind_from_string(const std::string& s) {
    if (s == "I")
        return ProjectionKind::type_I;
    if (s == "II1")
        return ProjectionKind::type_II1;
    if (s == "IV")
        return ProjectionKind::type_IV;
    raise(Errc::parse, "unknown projection type '" + s + "'");
}

std::string to_string(ProjectionKind k) {
    switch (k) {
    case ProjectionKind::type_I: return "I";
    case ProjectionKind::type_II1: return "II1";
    case ProjectionKind::type_IV: return "IV";
    }
    return "?";
}

bool FamilyRecord::has_flag(const std::string& f) const {
    return std::find(flags.begin(), flags.end(), f) != flags.end();
}

std::string FamilyRecord::id() const {
    std::string s = std::to_string(grdb);
    if (!variant.empty())
        s += ":" + variant;
    return s;
}

ValidationReport validate_family(const FamilyRecord& r) {
    ValidationReport rep;
    auto bad = [&](const std::string& msg) { rep.violations.push_back(msg); };

    const auto& w = r.ambient.weights();
    if (w.size() < 5)
        bad("ambient must have at least 5 weights");
    if (!w.empty() && w.front() < 1)
        bad("weights must be positive");
    int g = 0;
    for (int a : w)
        g = std::gcd(g, a);
    if (g != 1)
        bad("weights have a common factor " + std::to_string(g));
    if (r.codim >= 1 && static_cast<int>(w.size()) != r.codim + 4)
        bad("weight count " + std::to_string(w.size()) + " does not match codim " +
            std::to_string(r.codim));
    if (r.index < 1)
        bad("index must be positive");
    if (r.h11 < 1)
        bad("h11 must be >= 1");

    switch (r.model.kind) {
    case ModelKind::complete_intersection: {
        for (int d : r.model.degrees)
            if (d < 2)
                bad("equation degree " + std::to_string(d) + " < 2");
        int sum_d = std::accumulate(r.model.degrees.begin(), r.model.degrees.end(), 0);
        if (r.ambient.weight_sum() - sum_d != r.index)
            bad("index identity fails: sum(a) - sum(d) = " +
                std::to_string(r.ambient.weight_sum() - sum_d) + " != " +
                std::to_string(r.index));
        if (r.codim >= 1 && static_cast<int>(r.model.degrees.size()) != r.codim)
            bad("CI degree count does not match codim");
        break;
    }
    case ModelKind::pfaffian: {
        if (r.model.degrees.size() != 5) {
            bad("pfaffian model needs exactly 5 degrees");
            break;
        }
        int sum_d = std::accumulate(r.model.degrees.begin(), r.model.degrees.end(), 0);
        if (sum_d % 2 != 0)
            bad("pfaffian degree sum is odd");
        else if (sum_d / 2 - r.ambient.weight_sum() != -r.index)
            bad("pfaffian index identity fails: k - sum(a) = " +
                std::to_string(sum_d / 2 - r.ambient.weight_sum()) + " != " +
                std::to_string(-r.index));
        break;
    }
    case ModelKind::external:
        break;
    }

    for (const auto& p : r.projections) {
        if (p.r < 2)
            bad("projection centre index " + std::to_string(p.r) + " < 2");
        if (p.nodes < 1)
            bad("projection with " + std::to_string(p.nodes) + " nodes");
        if (p.a) {
            if (*p.a < 1 || *p.a >= p.r || std::gcd(*p.a, p.r) != 1)
                bad("centre parameter a=" + std::to_string(*p.a) + " invalid for r=" +
                    std::to_string(p.r));
        }
        if (p.target == r.grdb && r.variant.empty())
            bad("projection targets its own row");
    }

    if (r.basket) {
        for (const auto& [q, cnt] : r.basket->entries()) {
            if (cnt < 1)
                bad("basket multiplicity < 1");
            if (q.r < 2)
                bad("basket entry with index < 2");
            for (int x : q.weights)
                if (x % q.r == 0)
                    bad("basket entry " + q.str() + " has weight divisible by its index");
        }
    }
    return rep;
}

PowerSeries hilbert_series_ci(const WeightedSpace& ambient, const std::vector<int>& degrees,
                              int order) {
    return expand_product_quotient(degrees, ambient.weights(), order);
}

PowerSeries hilbert_series_pfaffian(const WeightedSpace& ambient,
                                    const std::vector<int>& pf_degrees, int order) {
    if (pf_degrees.size() != 5)
        raise(Errc::model, "pfaffian model needs exactly 5 degrees");
    int sum_d = std::accumulate(pf_degrees.begin(), pf_degrees.end(), 0);
    if (sum_d % 2 != 0)
        raise(Errc::model, "pfaffian degree sum is odd");
    int k = sum_d / 2;
    if (k - ambient.weight_sum() >= 0)
        raise(Errc::validation, "pfaffian adjunction number is not sub-anticanonical");

    // numerator 1 - sum t^{d_i} + sum t^{k-d_i} - t^k over prod (1-t^{a_i})
    PowerSeries numer(order);
    auto bump = [&](int exp, int delta) {
        if (exp >= 0 && exp <= order)
            numer.at(exp) += Rational(delta);
    };
    bump(0, 1);
    for (int d : pf_degrees) {
        bump(d, -1);
        bump(k - d, 1);
    }
    bump(k, -1);
    PowerSeries denom = expand_product_quotient({}, ambient.weights(), order);
    return numer * denom;
}

PowerSeries hilbert_series(const FamilyRecord& r, int order) {
    switch (r.model.kind) {
    case ModelKind::complete_intersection:
        return hilbert_series_ci(r.ambient, r.model.degrees, order);
    case ModelKind::pfaffian:
        return hilbert_series_pfaffian(r.ambient, r.model.degrees, order);
    case ModelKind::external:
        raise(Errc::unsupported, "record " + r.id() + " has no computable model");
    }
    raise(Errc::unsupported, "unreachable");
}

int degree_one_sections(const FamilyRecord& r) {
    if (r.model.kind == ModelKind::external) {
        // generators are minimal, so degree-1 sections are the weight-1 variables
        return r.ambient.count_weight(1);
    }
    return static_cast<int>(hilbert_series(r, 1).coefficient(1).to_integer());
}

int genus(const FamilyRecord& r) {
    if (r.index != 1)
        raise(Errc::unsupported_index,
              "genus is defined here only for index 1, record " + r.id() + " has index " +
                  std::to_string(r.index));
    return degree_one_sections(r) - 2;
}

int euler_from_hodge(int h11, int h21) {
    if (h11 < 1 || h21 < 0)
        raise(Errc::invalid_argument, "hodge numbers out of range");
    return 2 + 2 * h11 - 2 * h21;
}

} // namespace fano
