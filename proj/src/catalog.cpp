#include "fano/catalog.hpp"

#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

#include <json.hpp>

namespace fano {

using nlohmann::ordered_json;

const FamilyRecord* Catalog::find(const RowKey& key) const {
    auto it = rows_.find(key);
    return it == rows_.end() ? nullptr : &it->second;
}

const FamilyRecord* Catalog::find(long long grdb) const {
    auto all = find_all(grdb);
    return all.size() == 1 ? all[0] : nullptr;
}

std::vector<const FamilyRecord*> Catalog::find_all(long long grdb) const {
    std::vector<const FamilyRecord*> out;
    for (auto it = rows_.lower_bound(RowKey{grdb, ""}); it != rows_.end(); ++it) {
        if (it->first.grdb != grdb)
            break;
        out.push_back(&it->second);
    }
    return out;
}

std::vector<const FamilyRecord*>
Catalog::query(const std::function<bool(const FamilyRecord&)>& pred) const {
    std::vector<const FamilyRecord*> out;
    for (const auto& [key, rec] : rows_)
        if (pred(rec))
            out.push_back(&rec);
    return out; // map iteration order is already the stable key order
}

namespace {

// FNV-1a; enough to fingerprint the source bytes for the results cache
std::string fnv1a_digest(const std::string& bytes) {
    unsigned long long h = 14695981039346656037ull;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

FamilyRecord record_from_json(const ordered_json& j, int line_no) {
    auto ctx = [&](const std::string& msg) {
        return "line " + std::to_string(line_no) + ": " + msg;
    };
    FamilyRecord r;
    try {
        r.grdb = j.at("grdb").get<long long>();
        r.variant = j.value("variant", std::string{});
        r.codim = j.at("codim").get<int>();
        r.ambient = WeightedSpace(j.at("weights").get<std::vector<int>>());
        const auto& jm = j.at("model");
        std::string kind = jm.at("type").get<std::string>();
        if (kind == "ci")
            r.model = EquationModel::ci(jm.at("degrees").get<std::vector<int>>());
        else if (kind == "pfaffian")
            r.model = EquationModel::pfaffian(jm.at("degrees").get<std::vector<int>>());
        else if (kind == "external")
            r.model = EquationModel::external();
        else
            raise(Errc::parse, ctx("unknown model type '" + kind + "'"));
        r.index = j.value("index", 1);
        if (j.contains("basket")) {
            Basket b;
            for (const auto& je : j.at("basket")) {
                auto ws = je.at("w").get<std::vector<int>>();
                if (ws.size() != 3)
                    raise(Errc::parse, ctx("basket entry needs 3 weights"));
                b.add(normalize_quotient(je.at("r").get<int>(), {ws[0], ws[1], ws[2]}),
                      je.value("count", 1));
            }
            r.basket = std::move(b);
            r.basket_provenance = j.value("basket_provenance", std::string{});
        }
        r.h11 = j.value("h11", 1);
        if (j.contains("alpha"))
            r.alpha = j.at("alpha").get<int>();
        if (j.contains("projections")) {
            for (const auto& jp : j.at("projections")) {
                ProjectionStep p;
                p.kind = projection_kind_from_string(jp.at("type").get<std::string>());
                p.r = jp.at("r").get<int>();
                if (jp.contains("a"))
                    p.a = jp.at("a").get<int>();
                p.nodes = jp.at("nodes").get<int>();
                p.target = jp.at("target").get<long long>();
                r.projections.push_back(p);
            }
        }
        if (j.contains("expected")) {
            const auto& je = j.at("expected");
            if (je.contains("h21"))
                r.expected.h21 = je.at("h21").get<int>();
            if (je.contains("e"))
                r.expected.e = je.at("e").get<int>();
            if (je.contains("h1t"))
                r.expected.h1t = je.at("h1t").get<int>();
        }
        if (j.contains("flags"))
            r.flags = j.at("flags").get<std::vector<std::string>>();
    } catch (const ordered_json::exception& ex) {
        raise(Errc::parse, ctx(ex.what()));
    }
    return r;
}

} // namespace

std::string record_to_json(const FamilyRecord& r) {
    ordered_json j;
    j["grdb"] = r.grdb;
    if (!r.variant.empty())
        j["variant"] = r.variant;
    j["codim"] = r.codim;
    j["weights"] = r.ambient.weights();
    ordered_json jm;
    switch (r.model.kind) {
    case ModelKind::complete_intersection:
        jm["type"] = "ci";
        jm["degrees"] = r.model.degrees;
        break;
    case ModelKind::pfaffian:
        jm["type"] = "pfaffian";
        jm["degrees"] = r.model.degrees;
        break;
    case ModelKind::external:
        jm["type"] = "external";
        break;
    }
    j["model"] = jm;
    if (r.index != 1)
        j["index"] = r.index;
    if (r.basket) {
        ordered_json jb = ordered_json::array();
        for (const auto& [q, cnt] : r.basket->entries()) {
            ordered_json je;
            je["r"] = q.r;
            je["w"] = q.weights;
            je["count"] = cnt;
            jb.push_back(je);
        }
        j["basket"] = jb;
        if (!r.basket_provenance.empty())
            j["basket_provenance"] = r.basket_provenance;
    }
    if (r.h11 != 1)
        j["h11"] = r.h11;
    if (r.alpha)
        j["alpha"] = *r.alpha;
    if (!r.projections.empty()) {
        ordered_json jp = ordered_json::array();
        for (const auto& p : r.projections) {
            ordered_json je;
            je["type"] = to_string(p.kind);
            je["r"] = p.r;
            if (p.a)
                je["a"] = *p.a;
            je["nodes"] = p.nodes;
            je["target"] = p.target;
            jp.push_back(je);
        }
        j["projections"] = jp;
    }
    ordered_json je;
    if (r.expected.h21)
        je["h21"] = *r.expected.h21;
    if (r.expected.e)
        je["e"] = *r.expected.e;
    if (r.expected.h1t)
        je["h1t"] = *r.expected.h1t;
    if (!je.empty())
        j["expected"] = je;
    if (!r.flags.empty())
        j["flags"] = r.flags;
    return j.dump();
}

Catalog load_catalog(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string bytes = buf.str();

    Catalog c;
    c.digest_ = fnv1a_digest(bytes);

    std::istringstream lines(bytes);
    std::string line;
    int line_no = 0;
    std::map<RowKey, FamilyRecord> rows;
    while (std::getline(lines, line)) {
        ++line_no;
        if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        ordered_json j;
        try {
            j = ordered_json::parse(line);
        } catch (const ordered_json::exception& ex) {
            raise(Errc::parse, "line " + std::to_string(line_no) + ": " + ex.what());
        }
        FamilyRecord r = record_from_json(j, line_no);
        auto rep = validate_family(r);
        if (!rep.ok())
            raise(Errc::validation, "line " + std::to_string(line_no) + ", record " + r.id() +
                                        ": " + rep.violations.front());
        RowKey key{r.grdb, r.variant};
        if (rows.count(key))
            raise(Errc::parse,
                  "line " + std::to_string(line_no) + ": duplicate id " + key.str());
        rows.emplace(key, std::move(r));
    }
    // dangling projection targets are warnings, not load failures
    for (const auto& [key, rec] : rows) {
        for (const auto& p : rec.projections) {
            bool found = false;
            for (auto it = rows.lower_bound(RowKey{p.target, ""}); it != rows.end(); ++it) {
                if (it->first.grdb != p.target)
                    break;
                found = true;
            }
            if (!found)
                c.warnings_.push_back("record " + key.str() + " projects to missing target " +
                                      std::to_string(p.target));
        }
    }
    c.rows_ = std::move(rows);
    return c;
}

Catalog load_catalog_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        raise(Errc::parse, "cannot open catalogue '" + path + "'");
    return load_catalog(in);
}

std::string export_catalog(const Catalog& c) {
    std::string out;
    for (const auto& [key, rec] : c.rows()) {
        out += record_to_json(rec);
        out += '\n';
    }
    return out;
}

} // namespace fano
