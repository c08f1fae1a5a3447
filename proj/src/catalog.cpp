#include "jalg/catalog.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string_view>
#include <utility>

#include "jalg/io.hpp"

namespace jalg {

namespace detail {
const std::vector<std::pair<std::string_view, std::string_view>>& catalog_sources();
}

namespace {

constexpr std::string_view kPrefix = "catalog:";

std::string describe(std::string_view text) {
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    if (line.rfind("# ", 0) == 0) return line.substr(2);
  }
  return "";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

bool is_catalog(const std::string& path) { return path.rfind(kPrefix, 0) == 0; }

MatchedPair parse_pair_at(const std::string& text, const std::filesystem::path& dir) {
  return parse_pair(text, [dir](const std::string& ref) {
    if (is_catalog(ref)) return load_algebra(ref);
    const std::filesystem::path p(ref);
    return load_algebra((p.is_absolute() ? p : dir / p).string());
  });
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> out;
    for (const auto& [file, text] : detail::catalog_sources()) {
      const std::filesystem::path p(file);
      const auto kind = p.extension() == ".jpair" ? CatalogKind::pair : CatalogKind::algebra;
      out.push_back({p.stem().string(), kind, describe(text), std::string(text)});
    }
    return out;
  }();
  return entries;
}

const CatalogEntry& catalog_entry(const std::string& name) {
  for (const auto& e : catalog_entries()) {
    if (e.name == name) return e;
  }
  throw std::out_of_range("unknown catalog entry '" + name + "'");
}

Algebra catalog_algebra(const std::string& name) {
  const auto& e = catalog_entry(name);
  if (e.kind != CatalogKind::algebra) throw std::invalid_argument("catalog entry '" + name + "' is a matched pair");
  Algebra a = parse_algebra(e.text);
  if (!verify_jordan(a)) throw std::logic_error("catalog algebra '" + name + "' is not Jordan");
  return a;
}

MatchedPair catalog_pair(const std::string& name) {
  const auto& e = catalog_entry(name);
  if (e.kind != CatalogKind::pair) throw std::invalid_argument("catalog entry '" + name + "' is an algebra");
  MatchedPair mp = parse_pair_at(e.text, {});
  if (!verify_pair(mp)) throw std::logic_error("catalog pair '" + name + "' is not matched");
  return mp;
}

Algebra load_algebra(const std::string& path) {
  if (is_catalog(path)) return catalog_algebra(path.substr(kPrefix.size()));
  return parse_algebra(read_file(path));
}

MatchedPair load_pair(const std::string& path) {
  if (is_catalog(path)) return catalog_pair(path.substr(kPrefix.size()));
  return parse_pair_at(read_file(path), std::filesystem::path(path).parent_path());
}

}  // namespace jalg
