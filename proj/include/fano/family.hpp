#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fano/basket.hpp"
#include "fano/power_series.hpp"

namespace fano {

/// Ambient weighted projective space, weights kept sorted ascending.
class WeightedSpace {
  public:
    WeightedSpace() = default;
    explicit WeightedSpace(std::vector<int> weights);

    const std::vector<int>& weights() const { return w_; }
    int dimension() const { return static_cast<int>(w_.size()) - 1; }
    int weight_sum() const;
    int count_weight(int value) const;
    bool all_weights_one() const;

    std::string str() const; // P(a0,...,an)

  private:
    std::vector<int> w_;
};

enum class ModelKind { complete_intersection, pfaffian, external };

/// How the family's equations are presented. External rows carry no degree
/// data and participate only through catalogued expected values.
struct EquationModel {
    ModelKind kind = ModelKind::external;
    std::vector<int> degrees; // CI: one per equation; Pfaffian: the five Pfaffian degrees

    static EquationModel ci(std::vector<int> degrees);
    static EquationModel pfaffian(std::vector<int> degrees);
    static EquationModel external() { return {}; }
};

enum class ProjectionKind { type_I, type_II1, type_IV };

ProjectionKind projection_kind_from_string(const std::string& s);
std::string to_string(ProjectionKind k);

/// One Gorenstein projection listed for a family: centre 1/r(1,a,r-a),
/// node count of the image, and the target family. The parameter a is stored
/// only where the ambient shape determines it.
struct ProjectionStep {
    ProjectionKind kind = ProjectionKind::type_I;
    int r = 0;
    std::optional<int> a;
    int nodes = 0;
    long long target = 0;
};

struct ExpectedValues {
    std::optional<int> h21, e, h1t;
};

/// One catalogue row.
struct FamilyRecord {
    long long grdb = 0;
    std::string variant;     // distinguishes deformation families sharing a Hilbert series
    int codim = 0;
    WeightedSpace ambient;
    EquationModel model;
    int index = 1;
    std::optional<Basket> basket; // shipped only where it cannot be computed
    std::string basket_provenance;
    int h11 = 1;
    std::optional<int> alpha; // catalogued elephant invariant, overrides the basket formula
    std::vector<ProjectionStep> projections;
    ExpectedValues expected;
    std::vector<std::string> flags;

    bool has_flag(const std::string& f) const;
    std::string id() const; // "grdb" or "grdb:variant"
};

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// Structural checks: weight well-formedness, the anticanonical index identity
/// (sum a - sum d = m for CI, (sum pf)/2 - sum a = -m for Pfaffians),
/// projection step sanity. Never mutates, never throws.
ValidationReport validate_family(const FamilyRecord& r);

/// Hilbert series of a weighted complete intersection:
/// prod (1-t^{d_j}) / prod (1-t^{a_i}).
PowerSeries hilbert_series_ci(const WeightedSpace& ambient, const std::vector<int>& degrees,
                              int order);

/// Hilbert series of a codimension-3 Pfaffian family with the standard
/// 5x5 resolution: (1 - sum t^{d_i} + sum t^{k-d_i} - t^k) / prod (1-t^{a_i}),
/// k = (sum d_i)/2.
PowerSeries hilbert_series_pfaffian(const WeightedSpace& ambient,
                                    const std::vector<int>& pf_degrees, int order);

/// Hilbert series of a record with a computable model.
PowerSeries hilbert_series(const FamilyRecord& r, int order);

/// h^0 of the polarising class, i.e. the t^1 coefficient of the Hilbert
/// series. Equals the number of weight-1 generators, which is what external
/// rows fall back to.
int degree_one_sections(const FamilyRecord& r);

/// g = P_1 - 2; only defined for index-1 families.
int genus(const FamilyRecord& r);

/// e = 2 + 2*h11 - 2*h21.
int euler_from_hodge(int h11, int h21);

} // namespace fano
