#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "fano/catalog.hpp"

namespace fano {

/// Node count of the image of a Type I projection of a codimension-2 family:
/// n = d1*d2 / (a*(r-a)). Must divide exactly.
int nodes_type1_codim2(int d1, int d2, int r, int a);

/// Recover the centre parameter a of a Type I projection from the ambient
/// shape P(1, a, r-a, d1-r, d2-r, r). Nullopt when the weights do not fit
/// that shape.
std::optional<int> derive_type1_centre(const WeightedSpace& ambient,
                                       const std::vector<int>& degrees, int r);

/// Crossing a conifold transition with n nodes: e(X) = e(Y) + 2n - 2.
int conifold_euler_update(int e_target, int nodes);

/// h21(X) = h21(Y) - n + 1; caller asserts equal h11 on both ends.
int conifold_h21_update(int h21_target, int nodes);

enum class BaseKind { hypersurface, classical_ci, blache_ci };

/// A family's invariants resolved by walking its projection chain down to a
/// computable base.
struct CascadeResult {
    std::vector<RowKey> path; // from the family itself down to the base
    BaseKind base_kind = BaseKind::hypersurface;
    int e = 0;
    int h21 = 0; // always via e and this family's h11; equals the fold when ranks match
    bool h21_by_fold = true; // false once a family with h11 != 1 appears on the path
};

/// Resolves cascades against a fixed catalogue, memoising results.
/// Safe for concurrent resolution (single-assignment cache).
class CascadeResolver {
  public:
    explicit CascadeResolver(const Catalog& catalog) : catalog_(catalog) {}

    /// Base cases: a codimension-1 hypersurface (residue calculus), a
    /// complete intersection in ordinary projective space (Chern class
    /// integral), or a projection-less weighted CI (orbifold Euler number
    /// plus basket). Rows with several centres must agree along every path.
    CascadeResult resolve(const RowKey& key);
    CascadeResult resolve(long long grdb);

  private:
    CascadeResult resolve_inner(const RowKey& key, std::vector<RowKey>& in_progress);
    CascadeResult resolve_target(long long grdb, std::vector<RowKey>& in_progress);

    const Catalog& catalog_;
    std::mutex mu_;
    std::map<RowKey, CascadeResult> cache_;
};

} // namespace fano
