#include "fano/verify.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <optional>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "fano/hodge.hpp"
#include "fano/moduli.hpp"
#include "fano/orbifold.hpp"
#include "fano/projection.hpp"

namespace fano {

const char* field_name(Field f) {
    switch (f) {
    case Field::h21: return "h21";
    case Field::e: return "e";
    case Field::h1t: return "h1t";
    case Field::nodes: return "nodes";
    case Field::basket: return "basket";
    }
    return "?";
}

const char* status_name(Status s) {
    switch (s) {
    case Status::match: return "match";
    case Status::mismatch: return "mismatch";
    case Status::skipped: return "skipped";
    case Status::unsupported: return "unsupported";
    }
    return "?";
}

namespace {

struct RowOutcome {
    std::vector<ReportEntry> entries;
};

std::string fmt(int v) { return std::to_string(v); }

/// Everything computed once per row and shared between field checks.
struct RowComputation {
    std::optional<Basket> basket;          // computed for CI rows
    std::string basket_error;
    std::optional<int> e;                  // route consensus
    std::optional<int> h21;
    std::string route;                     // how e/h21 were obtained
    std::string route_error;
    bool routes_disagree = false;
    std::string disagreement;
};

RowComputation compute_row(const FamilyRecord& r, CascadeResolver& resolver) {
    RowComputation out;
    const bool is_ci = r.model.kind == ModelKind::complete_intersection;

    if (is_ci) {
        try {
            out.basket = r.ambient.all_weights_one()
                             ? Basket{}
                             : compute_basket_ci(r.ambient, r.model.degrees);
        } catch (const Error& ex) {
            out.basket_error = ex.what();
        }
    }

    // candidate routes for (e, h21); all present routes must agree
    std::vector<std::pair<std::string, std::pair<int, std::optional<int>>>> routes;
    try {
        if (r.codim == 1 && is_ci) {
            int h21 = h21_hypersurface(r.ambient.weights(), r.model.degrees.at(0));
            routes.push_back({"residue", {euler_from_hodge(r.h11, h21), h21}});
        }
        if (is_ci && out.basket) {
            Rational eo = euler_orbifold_ci(r.ambient, r.model.degrees);
            int e = euler_topological(eo, *out.basket);
            routes.push_back({"chern", {e, std::nullopt}});
        }
        if (!r.projections.empty()) {
            CascadeResult c = resolver.resolve(RowKey{r.grdb, r.variant});
            routes.push_back({"cascade", {c.e, c.h21}});
        }
    } catch (const Error& ex) {
        out.route_error = ex.what();
    }

    if (!routes.empty()) {
        int e0 = routes.front().second.first;
        for (const auto& [name, val] : routes) {
            if (val.first != e0) {
                out.routes_disagree = true;
                std::ostringstream os;
                for (const auto& [n2, v2] : routes)
                    os << n2 << "=" << v2.first << " ";
                out.disagreement = os.str();
            }
        }
        if (!out.routes_disagree) {
            out.e = e0;
            out.h21 = (2 + 2 * r.h11 - e0) / 2;
            // direct h21 routes must also agree with the value forced by e
            for (const auto& [name, val] : routes)
                if (val.second && *val.second != *out.h21) {
                    out.routes_disagree = true;
                    out.disagreement = name + " h21=" + fmt(*val.second) +
                                       " vs from-e " + fmt(*out.h21);
                    out.e.reset();
                    out.h21.reset();
                    break;
                }
            std::ostringstream os;
            for (size_t i = 0; i < routes.size(); ++i)
                os << (i ? "+" : "") << routes[i].first;
            out.route = os.str();
        }
    }
    return out;
}

void check_value(RowOutcome& out, const FamilyRecord& r, Field f, std::optional<int> computed,
                 std::optional<int> printed, const std::string& detail) {
    ReportEntry e;
    e.key = RowKey{r.grdb, r.variant};
    e.field = f;
    e.detail = detail;
    if (computed)
        e.computed = fmt(*computed);
    if (printed)
        e.printed = fmt(*printed);
    if (!computed) {
        e.status = Status::unsupported;
    } else if (!printed) {
        e.status = Status::match; // nothing catalogued to contradict
    } else {
        e.status = *computed == *printed ? Status::match : Status::mismatch;
    }
    out.entries.push_back(std::move(e));
}

void skip_entry(RowOutcome& out, const FamilyRecord& r, Field f, std::optional<int> printed,
                const std::string& why) {
    ReportEntry e;
    e.key = RowKey{r.grdb, r.variant};
    e.field = f;
    e.status = Status::skipped;
    e.detail = why;
    if (printed)
        e.printed = fmt(*printed);
    out.entries.push_back(std::move(e));
}

RowOutcome verify_row(const FamilyRecord& r, const VerifyOptions& opt,
                      CascadeResolver& resolver) {
    RowOutcome out;
    RowComputation c = compute_row(r, resolver);
    const std::string flag_note =
        r.flags.empty() ? std::string{} : "flag " + r.flags.front();

    if (opt.fields.count(Field::h21)) {
        if (r.has_flag("exclude_euler_check"))
            skip_entry(out, r, Field::h21, r.expected.h21, "flag exclude_euler_check");
        else if (c.routes_disagree)
            check_value(out, r, Field::h21, std::nullopt, r.expected.h21,
                        "routes disagree: " + c.disagreement);
        else if (c.h21)
            check_value(out, r, Field::h21, c.h21, r.expected.h21, c.route);
        else if (!r.flags.empty())
            skip_entry(out, r, Field::h21, r.expected.h21, flag_note);
        else
            check_value(out, r, Field::h21, std::nullopt, r.expected.h21,
                        c.route_error.empty() ? "no computation route" : c.route_error);
    }

    if (opt.fields.count(Field::e)) {
        if (r.has_flag("exclude_euler_check"))
            skip_entry(out, r, Field::e, r.expected.e, "flag exclude_euler_check");
        else if (c.routes_disagree)
            check_value(out, r, Field::e, std::nullopt, r.expected.e,
                        "routes disagree: " + c.disagreement);
        else if (c.e)
            check_value(out, r, Field::e, c.e, r.expected.e, c.route);
        else if (!r.flags.empty())
            skip_entry(out, r, Field::e, r.expected.e, flag_note);
        else
            check_value(out, r, Field::e, std::nullopt, r.expected.e,
                        c.route_error.empty() ? "no computation route" : c.route_error);
    }

    if (opt.fields.count(Field::nodes)) {
        // only the codimension-2 Type I count is recomputable from first principles
        if (r.codim == 2 && r.model.kind == ModelKind::complete_intersection) {
            for (const auto& p : r.projections) {
                if (p.kind != ProjectionKind::type_I)
                    continue;
                std::string where =
                    "centre 1/" + fmt(p.r) + " -> " + std::to_string(p.target);
                try {
                    auto a = derive_type1_centre(r.ambient, r.model.degrees, p.r);
                    if (!a)
                        raise(Errc::inconsistency, "ambient does not fit the projection shape");
                    if (p.a && *p.a != *a)
                        raise(Errc::inconsistency,
                              "catalogued centre parameter a=" + fmt(*p.a) +
                                  " differs from derived a=" + fmt(*a));
                    int n = nodes_type1_codim2(r.model.degrees[0], r.model.degrees[1], p.r, *a);
                    check_value(out, r, Field::nodes, n, p.nodes, where);
                } catch (const Error& ex) {
                    check_value(out, r, Field::nodes, std::nullopt, p.nodes,
                                where + ": " + ex.what());
                }
            }
        }
    }

    if (opt.fields.count(Field::h1t)) {
        // a flagged euler chain also disqualifies its h21 as an input here
        std::optional<int> h21 = (c.h21 && !r.has_flag("exclude_euler_check"))
                                     ? c.h21
                                     : r.expected.h21;
        const Basket* basket = c.basket ? &*c.basket : (r.basket ? &*r.basket : nullptr);
        if (!h21) {
            check_value(out, r, Field::h1t, std::nullopt, r.expected.h1t, "h21 unavailable");
        } else if (!basket && !r.alpha) {
            check_value(out, r, Field::h1t, std::nullopt, r.expected.h1t,
                        c.basket_error.empty() ? "no basket data" : c.basket_error);
        } else {
            try {
                ModuliResult m = moduli_for(r, basket ? *basket : Basket{}, *h21);
                std::string detail = "alpha=" + fmt(m.alpha) +
                                     (m.alpha_from_catalog ? " (catalogued)" : "") +
                                     (m.elephant_exists ? "" : ", no elephant");
                check_value(out, r, Field::h1t, m.h1_tangent, r.expected.h1t, detail);
            } catch (const Error& ex) {
                check_value(out, r, Field::h1t, std::nullopt, r.expected.h1t, ex.what());
            }
        }
    }

    if (opt.fields.count(Field::basket)) {
        ReportEntry e;
        e.key = RowKey{r.grdb, r.variant};
        e.field = Field::basket;
        if (c.basket) {
            e.computed = c.basket->str();
            // certified by the orbifold Euler identity when the e routes closed
            if (c.routes_disagree) {
                e.status = Status::mismatch;
                e.detail = "euler routes disagree: " + c.disagreement;
            } else if (c.e) {
                e.status = Status::match;
                e.detail = "validated against the orbifold Euler characteristic";
            } else {
                e.status = Status::match;
                e.detail = "computed; no Euler cross-check available";
            }
        } else if (!c.basket_error.empty()) {
            e.status = Status::mismatch;
            e.detail = c.basket_error;
        } else if (r.basket) {
            e.printed = r.basket->str();
            e.status = Status::skipped;
            e.detail = r.basket_provenance.empty() ? "catalogued"
                                                   : "catalogued (" + r.basket_provenance + ")";
        } else {
            e.status = Status::unsupported;
            e.detail = "no equations to analyse";
        }
        out.entries.push_back(std::move(e));
    }

    return out;
}

} // namespace

VerificationReport verify_all(const Catalog& catalog, const VerifyOptions& options) {
    std::vector<const FamilyRecord*> rows;
    rows.reserve(catalog.rows().size());
    for (const auto& [key, rec] : catalog.rows())
        rows.push_back(&rec);

    CascadeResolver resolver(catalog);
    std::vector<RowOutcome> outcomes(rows.size());

    int jobs = std::max(1, options.jobs);
    if (jobs == 1) {
        for (size_t i = 0; i < rows.size(); ++i)
            outcomes[i] = verify_row(*rows[i], options, resolver);
    } else {
        std::atomic<size_t> next{0};
        auto worker = [&] {
            for (;;) {
                size_t i = next.fetch_add(1);
                if (i >= rows.size())
                    return;
                outcomes[i] = verify_row(*rows[i], options, resolver);
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t)
            pool.emplace_back(worker);
        for (auto& t : pool)
            t.join();
    }

    VerificationReport rep;
    for (size_t i = 0; i < rows.size(); ++i) {
        for (auto& e : outcomes[i].entries) {
            switch (e.status) {
            case Status::match: ++rep.matches; break;
            case Status::mismatch:
                ++rep.mismatches;
                if (rows[i]->flags.empty())
                    ++rep.unflagged_mismatches;
                break;
            case Status::skipped: ++rep.skipped; break;
            case Status::unsupported: ++rep.unsupported; break;
            }
            rep.entries.push_back(std::move(e));
        }
    }
    return rep;
}

std::string VerificationReport::summary() const {
    std::ostringstream os;
    os << "entries: " << entries.size() << "  match: " << matches
       << "  mismatch: " << mismatches << "  skipped: " << skipped
       << "  unsupported: " << unsupported;
    return os.str();
}

std::string render_text(const VerificationReport& rep, bool only_problems) {
    std::ostringstream os;
    for (const auto& e : rep.entries) {
        if (only_problems && e.status == Status::match)
            continue;
        os << e.key.str() << "\t" << field_name(e.field) << "\t"
           << (e.computed.empty() ? "-" : e.computed) << "\t"
           << (e.printed.empty() ? "-" : e.printed) << "\t" << status_name(e.status);
        if (!e.detail.empty())
            os << "\t" << e.detail;
        os << "\n";
    }
    os << rep.summary() << "\n";
    return os.str();
}

std::string render_json(const VerificationReport& rep) {
    nlohmann::ordered_json j;
    j["entries"] = nlohmann::ordered_json::array();
    for (const auto& e : rep.entries) {
        nlohmann::ordered_json je;
        je["grdb"] = e.key.grdb;
        if (!e.key.variant.empty())
            je["variant"] = e.key.variant;
        je["field"] = field_name(e.field);
        if (!e.computed.empty())
            je["computed"] = e.computed;
        if (!e.printed.empty())
            je["printed"] = e.printed;
        je["status"] = status_name(e.status);
        if (!e.detail.empty())
            je["detail"] = e.detail;
        j["entries"].push_back(je);
    }
    j["summary"] = {{"match", rep.matches},
                    {"mismatch", rep.mismatches},
                    {"skipped", rep.skipped},
                    {"unsupported", rep.unsupported}};
    return j.dump(2) + "\n";
}

std::string render_csv(const VerificationReport& rep) {
    std::ostringstream os;
    os << "grdb,field,computed,printed,status\n";
    for (const auto& e : rep.entries)
        os << e.key.str() << "," << field_name(e.field) << "," << e.computed << ","
           << e.printed << "," << status_name(e.status) << "\n";
    return os.str();
}

void write_results_file(const std::string& catalog_path, const Catalog& catalog,
                        const VerificationReport& rep) {
    nlohmann::ordered_json j;
    j["source_digest"] = catalog.source_digest();
    nlohmann::ordered_json rows = nlohmann::ordered_json::object();
    for (const auto& e : rep.entries) {
        if (e.computed.empty())
            continue;
        rows[e.key.str()][field_name(e.field)] = e.computed;
    }
    j["computed"] = rows;
    std::ofstream out(catalog_path + ".results.json");
    out << j.dump(2) << "\n";
}

} // namespace fano
