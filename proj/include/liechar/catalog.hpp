#pragma once

#include "liechar/jsonio.hpp"

#include <cstdint>
#include <string>

namespace liechar {

struct CatalogPair {
    CartanType type;
    std::vector<std::vector<long long>> subsystem;  // simple roots, root coords
    std::string label;                              // "TYPE/[...]" for reports
};

struct CatalogEndo {
    CartanType type;
    std::vector<std::vector<long long>> k_simple;
    std::vector<std::vector<long long>> h_simple;
    int sign_q = 1;
    std::string label;
};

// Parsed catalog file. Entries are re-validated (validate_subsystem /
// build_endoscopic_datum) when suites instantiate them, so bad root
// combinatorics fail loudly at run time, not silently at parse time.
struct CatalogFile {
    std::vector<CatalogPair> pairs;
    std::vector<CatalogEndo> endoscopy;
    Caps caps;
    std::uint64_t seed = 20260811;
};

// Strict parse: unknown keys anywhere are rejected.
CatalogFile parse_catalog(const std::string& json_text);
CatalogFile load_catalog_file(const std::string& path);

}  // namespace liechar
