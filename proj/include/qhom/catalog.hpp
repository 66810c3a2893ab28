#pragma once

#include "qhom/pd_code.hpp"
#include "qhom/structure.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace qhom {

enum class EntryKind { Quandle, Biquandle, Link };

std::string_view to_string(EntryKind kind);

struct CatalogEntry {
  std::string name;
  EntryKind kind;
  /// Relative to the catalog directory.
  std::filesystem::path path;
  std::string note;
};

/// The shipped data directory: $QHOM_DATA if set, else the build-time default.
std::filesystem::path default_data_dir();

class Catalog {
 public:
  /// Reads `dir/catalog.json`.
  static Catalog load(const std::filesystem::path& dir = default_data_dir());

  const std::vector<CatalogEntry>& entries() const noexcept { return entries_; }
  const CatalogEntry* find(std::string_view name) const;
  const std::filesystem::path& directory() const noexcept { return dir_; }
  std::filesystem::path full_path(const CatalogEntry& e) const { return dir_ / e.path; }

  /// Entry text, parsed and validated. Throws on unknown names.
  Structure structure(std::string_view name) const;
  Quandle quandle(std::string_view name) const;
  Biquandle biquandle(std::string_view name) const;
  PDCode link(std::string_view name) const;

 private:
  const CatalogEntry& require(std::string_view name) const;

  std::filesystem::path dir_;
  std::vector<CatalogEntry> entries_;
};

/// A command-line argument: a catalog name, or else a file path.
struct ResolvedInput {
  std::string name;
  std::filesystem::path path;
  std::string text;
};

ResolvedInput resolve_input(const Catalog& catalog, const std::string& arg);

}  // namespace qhom
