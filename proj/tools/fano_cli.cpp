// Command-line front end: invariants of weighted Fano 3-folds and the
// catalogue verification harness.
//
//   fano hodge   --weights 1,5,6,22,33 --degrees 66
//   fano euler   --weights 1,4,6,7,11 --degrees 28 --orbifold
//   fano cascade --grdb 20523 --catalog data/fano.jsonl
//   fano verify  --catalog data/fano.jsonl --fields h21,e --jobs 4
//
// Exit status: 0 clean, 1 verification mismatches, 2 bad input.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fano/hodge.hpp"
#include "fano/moduli.hpp"
#include "fano/orbifold.hpp"
#include "fano/projection.hpp"
#include "fano/verify.hpp"

using namespace fano;
using nlohmann::ordered_json;

namespace {

std::vector<Field> parse_fields(const std::string& s) {
    std::vector<Field> out;
    std::string cur;
    for (char ch : s + ",") {
        if (ch != ',') {
            cur += ch;
            continue;
        }
        if (cur.empty())
            continue;
        if (cur == "h21")
            out.push_back(Field::h21);
        else if (cur == "e")
            out.push_back(Field::e);
        else if (cur == "h1t")
            out.push_back(Field::h1t);
        else if (cur == "nodes")
            out.push_back(Field::nodes);
        else if (cur == "basket")
            out.push_back(Field::basket);
        else
            raise(Errc::invalid_argument, "unknown field '" + cur + "'");
        cur.clear();
    }
    return out;
}

std::vector<int> parse_ints(const std::string& s) {
    std::vector<int> out;
    std::string cur;
    for (char ch : s + ",") {
        if (ch == ',') {
            if (!cur.empty())
                out.push_back(std::stoi(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    return out;
}

ordered_json basket_json(const Basket& b) {
    ordered_json jb = ordered_json::array();
    for (const auto& [q, cnt] : b.entries()) {
        ordered_json je;
        je["r"] = q.r;
        je["w"] = q.weights;
        je["count"] = cnt;
        jb.push_back(je);
    }
    return jb;
}

void emit(const ordered_json& j, const std::string& format,
          const std::function<void()>& text_fn) {
    if (format == "json")
        std::cout << j.dump(2) << "\n";
    else
        text_fn();
}

struct Common {
    std::string weights_s, degrees_s, pfaffian_s, catalog_path, format = "text", report_path;
    std::string variant;
    long long grdb = 0;
    int truncate = 30;
    int jobs = 1;
};

WeightedSpace need_weights(const Common& c) {
    if (c.weights_s.empty())
        raise(Errc::invalid_argument, "--weights is required");
    return WeightedSpace(parse_ints(c.weights_s));
}

int run(int argc, char** argv) {
    CLI::App app{"invariants of quasismooth Fano 3-folds given by weights and degrees"};
    app.require_subcommand(1);
    Common c;

    auto add_common = [&](CLI::App* sub, bool with_catalog = false) {
        sub->add_option("--weights", c.weights_s, "ambient weights a0,a1,...");
        sub->add_option("--degrees", c.degrees_s, "equation degrees d1,d2,...");
        sub->add_option("--pfaffian", c.pfaffian_s, "five Pfaffian degrees");
        sub->add_option("--format", c.format, "text|json|csv")->default_val("text");
        sub->add_option("--truncate", c.truncate, "series truncation order");
        if (with_catalog) {
            sub->add_option("--catalog", c.catalog_path, "catalogue JSONL path");
            sub->add_option("--grdb", c.grdb, "catalogue identifier");
            sub->add_option("--variant", c.variant, "family label when one id covers several");
            sub->add_option("--jobs", c.jobs, "verification worker threads");
            sub->add_option("--report", c.report_path, "write the report here");
        }
    };

    auto* hodge = app.add_subcommand("hodge", "Hodge numbers of a hypersurface");
    add_common(hodge);
    auto* basket_cmd = app.add_subcommand("basket", "quotient-singularity basket");
    add_common(basket_cmd);
    auto* hilb = app.add_subcommand("hilb", "Hilbert series");
    add_common(hilb);
    auto* euler = app.add_subcommand("euler", "Euler characteristics");
    bool orbifold_flag = false;
    add_common(euler);
    euler->add_flag("--orbifold", orbifold_flag, "also print the orbifold Euler number");
    auto* nodes = app.add_subcommand("nodes", "Type I node count d1*d2/(a*(r-a))");
    int node_r = 0;
    add_common(nodes);
    nodes->add_option("--centre", node_r, "centre index r")->required();
    auto* cascade = app.add_subcommand("cascade", "resolve a projection cascade");
    add_common(cascade, true);
    auto* moduli_cmd = app.add_subcommand("moduli", "deformation count h1(T_X)");
    add_common(moduli_cmd, true);
    auto* query = app.add_subcommand("query", "select catalogue rows");
    int q_codim = 0;
    std::string q_flag;
    add_common(query, true);
    query->add_option("--codim", q_codim, "filter by codimension");
    query->add_option("--flag", q_flag, "filter by flag");
    auto* verify = app.add_subcommand("verify", "verify the catalogue");
    std::string fields_s = "h21,e,h1t,nodes,basket";
    add_common(verify, true);
    verify->add_option("--fields", fields_s, "comma list of h21,e,h1t,nodes,basket");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e); // prints help, exit 0
    } catch (const CLI::ParseError& e) {
        app.exit(e); // prints the error and usage hint
        return 2;
    }

    if (hodge->parsed()) {
        WeightedSpace w = need_weights(c);
        auto degs = parse_ints(c.degrees_s);
        if (degs.size() != 1 || w.weights().size() != 5)
            raise(Errc::invalid_argument, "hodge expects 5 weights and one degree");
        int h21 = h21_hypersurface(w.weights(), degs[0]);
        HodgeDiamond d = hodge_diamond(1, h21);
        Basket b = compute_basket_hypersurface(w, degs[0]);
        ordered_json j{{"h21", h21}, {"h11", 1}, {"e", d.euler()}, {"basket", basket_json(b)}};
        emit(j, c.format, [&] {
            std::cout << "h21 = " << h21 << "\ne = " << d.euler()
                      << "\nbasket = " << b.str() << "\ndiamond:\n"
                      << d.str();
        });
        return 0;
    }
    if (basket_cmd->parsed()) {
        WeightedSpace w = need_weights(c);
        Basket b = compute_basket_ci(w, parse_ints(c.degrees_s));
        ordered_json j{{"basket", basket_json(b)}, {"index_sum", b.index_sum()}};
        emit(j, c.format, [&] {
            std::cout << "basket = " << b.str() << "\nsum(r-1) = " << b.index_sum() << "\n";
        });
        return 0;
    }
    if (hilb->parsed()) {
        WeightedSpace w = need_weights(c);
        PowerSeries s = c.pfaffian_s.empty()
                            ? hilbert_series_ci(w, parse_ints(c.degrees_s), c.truncate)
                            : hilbert_series_pfaffian(w, parse_ints(c.pfaffian_s), c.truncate);
        ordered_json coeffs = ordered_json::array();
        for (int k = 0; k <= s.truncation_order(); ++k)
            coeffs.push_back(s.coefficient(k).str());
        ordered_json j{{"series", coeffs}};
        emit(j, c.format, [&] { std::cout << s.str() << "\n"; });
        return 0;
    }
    if (euler->parsed()) {
        WeightedSpace w = need_weights(c);
        auto degs = parse_ints(c.degrees_s);
        Rational eo = euler_orbifold_ci(w, degs);
        Basket b = w.all_weights_one() ? Basket{} : compute_basket_ci(w, degs);
        int e = euler_topological(eo, b);
        ordered_json j{{"e", e}};
        if (orbifold_flag) {
            j["e_orb"] = eo.str();
            j["basket"] = basket_json(b);
        }
        emit(j, c.format, [&] {
            if (orbifold_flag)
                std::cout << "e_orb = " << eo.str() << "\nbasket = " << b.str() << "\n";
            std::cout << "e = " << e << "\n";
        });
        return 0;
    }
    if (nodes->parsed()) {
        WeightedSpace w = need_weights(c);
        auto degs = parse_ints(c.degrees_s);
        auto a = derive_type1_centre(w, degs, node_r);
        if (!a)
            raise(Errc::invalid_argument, "weights do not fit the Type I projection shape");
        int n = nodes_type1_codim2(degs.at(0), degs.at(1), node_r, *a);
        ordered_json j{{"r", node_r}, {"a", *a}, {"nodes", n}};
        emit(j, c.format, [&] {
            std::cout << "centre 1/" << node_r << "(1," << *a << "," << node_r - *a
                      << ")\nnodes = " << n << "\n";
        });
        return 0;
    }

    // subcommands below need the catalogue
    if (c.catalog_path.empty())
        raise(Errc::invalid_argument, "--catalog is required");
    Catalog cat = load_catalog_file(c.catalog_path);

    if (cascade->parsed()) {
        CascadeResolver resolver(cat);
        CascadeResult res = c.variant.empty() ? resolver.resolve(c.grdb)
                                              : resolver.resolve(RowKey{c.grdb, c.variant});
        ordered_json path = ordered_json::array();
        for (const auto& k : res.path)
            path.push_back(k.str());
        ordered_json j{{"path", path},
                       {"e", res.e},
                       {"h21", res.h21},
                       {"base", res.base_kind == BaseKind::hypersurface ? "hypersurface"
                                : res.base_kind == BaseKind::classical_ci ? "classical_ci"
                                                                          : "blache_ci"}};
        emit(j, c.format, [&] {
            std::cout << "path = ";
            for (size_t i = 0; i < res.path.size(); ++i)
                std::cout << (i ? " -> " : "") << res.path[i].str();
            std::cout << "\ne = " << res.e << "\nh21 = " << res.h21 << "\n";
        });
        return 0;
    }
    if (moduli_cmd->parsed()) {
        const FamilyRecord* rec = c.variant.empty() ? cat.find(c.grdb)
                                                     : cat.find(RowKey{c.grdb, c.variant});
        if (!rec)
            raise(Errc::missing_target, "no unique record " + std::to_string(c.grdb) +
                                            (c.variant.empty() ? "" : ":" + c.variant));
        std::optional<Basket> b;
        if (rec->model.kind == ModelKind::complete_intersection)
            b = rec->ambient.all_weights_one() ? Basket{}
                                               : compute_basket_ci(rec->ambient, rec->model.degrees);
        else if (rec->basket)
            b = rec->basket;
        if (!b && !rec->alpha)
            raise(Errc::unsupported, "no basket data for record " + rec->id());
        std::optional<int> h21;
        if (rec->codim == 1 && rec->model.kind == ModelKind::complete_intersection)
            h21 = h21_hypersurface(rec->ambient.weights(), rec->model.degrees.at(0));
        else if (!rec->projections.empty()) {
            CascadeResolver resolver(cat);
            h21 = resolver.resolve(RowKey{rec->grdb, rec->variant}).h21;
        } else {
            h21 = rec->expected.h21;
        }
        if (!h21)
            raise(Errc::unsupported, "h21 unavailable for record " + rec->id());
        ModuliResult m = moduli_for(*rec, b ? *b : Basket{}, *h21);
        ordered_json j{{"h21", *h21},
                       {"alpha", m.alpha},
                       {"h0_elephant", m.h0_elephant},
                       {"elephant_exists", m.elephant_exists},
                       {"h1_tangent", m.h1_tangent}};
        emit(j, c.format, [&] {
            std::cout << "h21 = " << *h21 << "\nalpha = " << m.alpha
                      << "\nh1(T_X) = " << m.h1_tangent << "\n";
        });
        return 0;
    }
    if (query->parsed()) {
        auto rowsel = cat.query([&](const FamilyRecord& r) {
            if (c.grdb && r.grdb != c.grdb)
                return false;
            if (q_codim && r.codim != q_codim)
                return false;
            if (!q_flag.empty() && !r.has_flag(q_flag))
                return false;
            return true;
        });
        if (c.format == "json") {
            for (const auto* r : rowsel)
                std::cout << record_to_json(*r) << "\n";
        } else {
            for (const auto* r : rowsel)
                std::cout << r->id() << "\t" << "codim " << r->codim << "\t"
                          << r->ambient.str() << "\n";
            std::cout << rowsel.size() << " rows\n";
        }
        return 0;
    }
    if (verify->parsed()) {
        VerifyOptions opt;
        opt.fields.clear();
        for (const auto& f : parse_fields(fields_s))
            opt.fields.insert(f);
        opt.jobs = c.jobs;
        VerificationReport rep = verify_all(cat, opt);
        std::string rendered = c.format == "json" ? render_json(rep)
                               : c.format == "csv" ? render_csv(rep)
                                                   : render_text(rep);
        if (!c.report_path.empty()) {
            std::ofstream out(c.report_path);
            out << rendered;
            std::cout << rep.summary() << "\n";
        } else {
            std::cout << rendered;
        }
        write_results_file(c.catalog_path, cat, rep);
        for (const auto& w : cat.warnings())
            std::cerr << "warning: " << w << "\n";
        return rep.unflagged_mismatches > 0 ? 1 : 0;
    }
    return 2;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const Error& ex) {
        std::cerr << "error (" << errc_name(ex.code()) << "): " << ex.what() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
}
