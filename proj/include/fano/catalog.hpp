#pragma once

#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "fano/family.hpp"

namespace fano {

/// Catalogue key. Deformation families occasionally share a Hilbert-series
/// identifier and are told apart by a family label.
struct RowKey {
    long long grdb = 0;
    std::string variant;

    std::string str() const {
        return variant.empty() ? std::to_string(grdb) : std::to_string(grdb) + ":" + variant;
    }
    friend bool operator==(const RowKey&, const RowKey&) = default;
    friend auto operator<=>(const RowKey&, const RowKey&) = default;
};

/// Immutable after load; rows validated on the way in, load is all-or-nothing.
class Catalog {
  public:
    const std::map<RowKey, FamilyRecord>& rows() const { return rows_; }
    const FamilyRecord* find(const RowKey& key) const;
    const FamilyRecord* find(long long grdb) const; // unique match or null
    std::vector<const FamilyRecord*> find_all(long long grdb) const;

    const std::vector<std::string>& warnings() const { return warnings_; }
    const std::string& source_digest() const { return digest_; }

    std::vector<const FamilyRecord*>
    query(const std::function<bool(const FamilyRecord&)>& pred) const;

    friend Catalog load_catalog(std::istream& in);

  private:
    std::map<RowKey, FamilyRecord> rows_;
    std::vector<std::string> warnings_; // dangling projection targets and the like
    std::string digest_;
};

/// Parse JSON-lines records, validate each, resolve projection targets.
/// Throws Errc::parse / Errc::validation with a line number on bad input.
Catalog load_catalog(std::istream& in);
Catalog load_catalog_file(const std::string& path);

/// Canonical serialization: one record per line, fixed key order, rows sorted
/// by key. load(export(c)) == c.
std::string export_catalog(const Catalog& c);

std::string record_to_json(const FamilyRecord& r);

} // namespace fano
