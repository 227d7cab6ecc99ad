// End-to-end acceptance run over the shipped catalogue. Each numbered
// criterion prints one PASS/FAIL line; the process exits nonzero if any
// fails. Expected wall time is a few seconds.

#include <iostream>
#include <numeric>
#include <set>
#include <sstream>

#include "fano/hodge.hpp"
#include "fano/moduli.hpp"
#include "fano/orbifold.hpp"
#include "fano/projection.hpp"
#include "fano/verify.hpp"

using namespace fano;

#ifndef FANO_DATA_FILE
#define FANO_DATA_FILE "data/fano.jsonl"
#endif

namespace {

int failures = 0;

void report(int number, const std::string& what, bool ok, const std::string& note = "") {
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << number << ": " << what;
    if (!note.empty())
        std::cout << "  [" << note << "]";
    std::cout << "\n";
    if (!ok)
        ++failures;
}

int expected_h21(const FamilyRecord& r) { return r.expected.h21.value(); }
int expected_e(const FamilyRecord& r) { return r.expected.e.value(); }

} // namespace

int main() {
    Catalog cat = load_catalog_file(FANO_DATA_FILE);
    CascadeResolver resolver(cat);

    auto rows_of_codim = [&](int c) {
        return cat.query([c](const FamilyRecord& r) { return r.codim == c; });
    };
    auto codim1 = rows_of_codim(1), codim2 = rows_of_codim(2), codim3 = rows_of_codim(3),
         codim4 = rows_of_codim(4);

    // 1. residue-calculus h21 for every hypersurface row, exactly
    {
        int checked = 0;
        bool ok = codim1.size() == 95;
        std::string note;
        for (const auto* r : codim1) {
            int h21 = h21_hypersurface(r->ambient.weights(), r->model.degrees.at(0));
            if (h21 != expected_h21(*r)) {
                ok = false;
                note = r->id() + " computed " + std::to_string(h21);
                break;
            }
            ++checked;
        }
        auto anchor = [&](long long id, int want) {
            const FamilyRecord* r = cat.find(id);
            return r && h21_hypersurface(r->ambient.weights(), r->model.degrees.at(0)) == want;
        };
        ok = ok && anchor(293, 120) && anchor(20521, 30) && anchor(337, 49);
        report(1, "all 95 hypersurface h21 values reproduced exactly", ok,
               note.empty() ? std::to_string(checked) + " rows" : note);
    }

    // 2. Euler characteristic column for every row with a computed h21
    {
        int checked = 0;
        bool ok = true;
        std::string note;
        auto check_e = [&](const FamilyRecord& r, int e) {
            if (e != expected_e(r)) {
                ok = false;
                if (note.empty())
                    note = r.id() + " computed " + std::to_string(e);
            } else {
                ++checked;
            }
        };
        for (const auto* r : codim1)
            check_e(*r, euler_from_hodge(
                            1, h21_hypersurface(r->ambient.weights(), r->model.degrees.at(0))));
        for (const auto* rows : {&codim2, &codim3})
            for (const auto* r : *rows) {
                if (!r->projections.empty() ||
                    (r->model.kind == ModelKind::complete_intersection)) {
                    CascadeResult res = resolver.resolve(RowKey{r->grdb, r->variant});
                    check_e(*r, res.e);
                    if (res.h21 != expected_h21(*r)) {
                        ok = false;
                        if (note.empty())
                            note = r->id() + " cascade h21 " + std::to_string(res.h21);
                    }
                }
            }
        auto anchor = [&](long long id, int want) {
            return resolver.resolve(id).e == want;
        };
        ok = ok && anchor(293, -236) && anchor(20522, -40) && anchor(20523, -30) &&
             anchor(6858, -58) && checked >= 95 + 85 + 67;
        report(2, "e column reproduced for every computed row (codim 1 direct, 2-3 cascades)",
               ok, std::to_string(checked) + " rows");
    }

    // 3. Blache cross-check on every complete intersection row
    {
        int checked = 0;
        bool ok = true;
        std::string note;
        for (const auto* rows : {&codim1, &codim2, &codim3})
            for (const auto* r : *rows) {
                if (r->model.kind != ModelKind::complete_intersection)
                    continue;
                Rational eo = euler_orbifold_ci(r->ambient, r->model.degrees);
                Basket b = r->ambient.all_weights_one()
                               ? Basket{}
                               : compute_basket_ci(r->ambient, r->model.degrees);
                for (const auto& [q, cnt] : b.entries())
                    if (!q.is_terminal()) {
                        ok = false;
                        if (note.empty())
                            note = r->id() + " non-terminal " + q.str();
                    }
                int e = euler_topological(eo, b);
                if (e != expected_e(*r)) {
                    ok = false;
                    if (note.empty())
                        note = r->id() + " blache " + std::to_string(e);
                } else {
                    ++checked;
                }
            }
        Rational x28 = euler_orbifold_ci(WeightedSpace({1, 4, 6, 7, 11}), {28});
        ok = ok && x28.str() == "-6385/66" &&
             euler_topological(x28, compute_basket_hypersurface(WeightedSpace({1, 4, 6, 7, 11}),
                                                                28)) == -94 &&
             checked >= 95 + 85;
        report(3, "orbifold Euler number plus basket correction matches e on every CI row", ok,
               std::to_string(checked) + " rows");
    }

    // 4. node formula on the codimension-2 Type I rows
    {
        int checked = 0;
        bool ok = true;
        std::string note;
        std::set<int> anchor_counts;
        for (const auto* r : codim2) {
            if (r->model.kind != ModelKind::complete_intersection)
                continue;
            bool any_type1 = false;
            for (const auto& p : r->projections) {
                if (p.kind != ProjectionKind::type_I)
                    continue;
                any_type1 = true;
                auto a = derive_type1_centre(r->ambient, r->model.degrees, p.r);
                if (!a || nodes_type1_codim2(r->model.degrees[0], r->model.degrees[1], p.r,
                                             *a) != p.nodes) {
                    ok = false;
                    if (note.empty())
                        note = r->id() + " centre 1/" + std::to_string(p.r);
                } else {
                    anchor_counts.insert(p.nodes);
                }
            }
            if (any_type1)
                ++checked;
        }
        ok = ok && checked == 66 && anchor_counts.count(9) && anchor_counts.count(12) &&
             anchor_counts.count(15) && anchor_counts.count(28);
        report(4, "node counts recomputed on all 66 Type I codimension-2 rows", ok,
               std::to_string(checked) + " rows");
    }

    // 5. rows listing several centres agree along every path
    {
        int multi = 0;
        bool ok = true;
        std::string note;
        for (const auto* rows : {&codim2, &codim3})
            for (const auto* r : *rows) {
                if (r->projections.size() < 2)
                    continue;
                ++multi;
                try {
                    CascadeResult res = resolver.resolve(RowKey{r->grdb, r->variant});
                    if (res.e != expected_e(*r) || res.h21 != expected_h21(*r)) {
                        ok = false;
                        if (note.empty())
                            note = r->id();
                    }
                } catch (const Error& ex) {
                    ok = false; // resolver throws when paths disagree
                    if (note.empty())
                        note = r->id() + ": " + ex.what();
                }
            }
        ok = ok && multi >= 40;
        report(5, "multi-centre cascades agree along all paths", ok,
               std::to_string(multi) + " rows with 2-3 centres");
    }

    // 6. the five text-verified moduli anchors plus the codimension-4 table
    {
        bool ok = true;
        std::string note;
        auto check_h1t = [&](const RowKey& key, int want) {
            const FamilyRecord* r = cat.find(key);
            if (!r) {
                ok = false;
                note = key.str() + " missing";
                return;
            }
            Basket b;
            if (r->model.kind == ModelKind::complete_intersection)
                b = compute_basket_ci(r->ambient, r->model.degrees);
            else if (r->basket)
                b = *r->basket;
            int h21 = expected_h21(*r);
            ModuliResult m = moduli_for(*r, b, h21);
            if (m.h1_tangent != want) {
                ok = false;
                if (note.empty())
                    note = key.str() + " computed " + std::to_string(m.h1_tangent);
            }
        };
        check_h1t(RowKey{3508, ""}, 34);
        check_h1t(RowKey{37, ""}, 23);
        check_h1t(RowKey{392, ""}, 23);
        check_h1t(RowKey{24097, "Tom1"}, 21);
        check_h1t(RowKey{24097, "Jer12"}, 19);
        check_h1t(RowKey{24097, "Jer15"}, 20);
        check_h1t(RowKey{24078, "Tom1"}, 22);
        check_h1t(RowKey{24078, "Tom5"}, 23);
        check_h1t(RowKey{24078, "Jer12"}, 21);
        report(6, "moduli anchors (3508, 37, 392, six codimension-4 families)", ok, note);
    }

    // 7. oracle identity on every hypersurface row; printed column compared
    //    as a report with the known divergences
    {
        bool identity_ok = true;
        int divergences = 0;
        bool row_20521_divergence = false;
        std::string note;
        for (const auto* r : codim1) {
            const auto& w = r->ambient.weights();
            int d = r->model.degrees.at(0);
            int oracle = jacobian_moduli_oracle(w, d);
            int h21 = h21_hypersurface(w, d);
            Basket b = compute_basket_ci(r->ambient, {d});
            ModuliResult m = moduli_for(*r, b, h21);
            if (oracle != m.h1_tangent) {
                identity_ok = false;
                if (note.empty())
                    note = r->id() + " oracle " + std::to_string(oracle) + " formula " +
                           std::to_string(m.h1_tangent);
            }
            if (oracle != r->expected.h1t.value()) {
                ++divergences;
                if (r->grdb == 20521 && oracle == 45 && *r->expected.h1t == 43)
                    row_20521_divergence = true;
            }
        }
        bool ok = identity_ok && row_20521_divergence;
        report(7, "jacobian oracle equals h21 + alpha - 1 on all 95 rows; printed column "
                  "divergences reported",
               ok, std::to_string(divergences) + " documented divergences");
    }

    // 8. property suites: symmetry, non-negativity, integrality, round trip,
    //    determinism
    {
        bool ok = true;
        std::string note;
        for (const auto* r : codim1) {
            const auto& w = r->ambient.weights();
            int d = r->model.degrees.at(0);
            int sum_a = std::accumulate(w.begin(), w.end(), 0);
            int sigma = 5 * d - 2 * sum_a;
            PowerSeries m = milnor_series(w, d, sigma);
            for (int k = 0; k <= sigma; ++k)
                if (m.coefficient(k) != m.coefficient(sigma - k)) {
                    ok = false;
                    note = r->id() + " symmetry fails at " + std::to_string(k);
                    break;
                }
        }
        for (const auto& [key, r] : cat.rows()) {
            if (r.model.kind == ModelKind::external)
                continue;
            PowerSeries h = hilbert_series(r, 30);
            for (int k = 0; k <= 30; ++k) {
                const Rational& c = h.coefficient(k);
                if (!c.is_integer() || c < Rational(0)) {
                    ok = false;
                    note = key.str() + " hilbert coefficient at " + std::to_string(k);
                    break;
                }
            }
        }
        {
            std::string dumped = export_catalog(cat);
            std::istringstream in(dumped);
            Catalog again = load_catalog(in);
            if (export_catalog(again) != dumped) {
                ok = false;
                note = "round trip not stable";
            }
        }
        {
            VerifyOptions o1;
            o1.jobs = 1;
            VerifyOptions o8;
            o8.jobs = 8;
            if (render_text(verify_all(cat, o1)) != render_text(verify_all(cat, o8))) {
                ok = false;
                note = "report not deterministic across parallelism";
            }
        }
        report(8, "milnor symmetry, hilbert non-negativity, round trip, determinism", ok, note);
    }

    // headline: the full harness over every field has no unflagged mismatch
    // outside the documented deformation-count column
    {
        VerifyOptions opt;
        opt.fields = {Field::h21, Field::e, Field::nodes, Field::basket};
        VerificationReport rep = verify_all(cat, opt);
        bool ok = rep.unflagged_mismatches == 0 && rep.mismatches == 0;
        report(0, "full harness (h21, e, nodes, basket) runs clean", ok, rep.summary());
    }

    std::cout << (failures == 0 ? "ALL CRITERIA PASS" : "FAILURES: " + std::to_string(failures))
              << "\n";
    return failures == 0 ? 0 : 1;
}
