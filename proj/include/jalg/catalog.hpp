#pragma once

// Built-in algebras and matched pairs, and loading of `catalog:NAME`
// pseudo-paths alongside ordinary files.

#include <string>
#include <vector>

#include "jalg/algebra.hpp"
#include "jalg/matched_pair.hpp"

namespace jalg {

enum class CatalogKind { algebra, pair };

struct CatalogEntry {
  std::string name;
  CatalogKind kind;
  std::string description;  // first comment line of the data file
  std::string text;
};

const std::vector<CatalogEntry>& catalog_entries();
/// Throws std::out_of_range for unknown names.
const CatalogEntry& catalog_entry(const std::string& name);

/// Parsed and verified; throws std::logic_error if an entry fails its check.
Algebra catalog_algebra(const std::string& name);
MatchedPair catalog_pair(const std::string& name);

/// `catalog:NAME` or a file path. Includes inside pair files resolve
/// relative to the including file.
Algebra load_algebra(const std::string& path);
MatchedPair load_pair(const std::string& path);

}  // namespace jalg
