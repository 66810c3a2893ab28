#include "qhom/catalog.hpp"

#include "qhom/error.hpp"
#include "qhom/table_io.hpp"

#include <json.hpp>

#include <cstdlib>

#ifndef QHOM_DEFAULT_DATA_DIR
#define QHOM_DEFAULT_DATA_DIR "data"
#endif

namespace qhom {

std::string_view to_string(EntryKind kind) {
  switch (kind) {
    case EntryKind::Quandle: return "quandle";
    case EntryKind::Biquandle: return "biquandle";
    case EntryKind::Link: return "link";
  }
  return "?";
}

std::filesystem::path default_data_dir() {
  if (const char* env = std::getenv("QHOM_DATA"); env && *env) return env;
  return QHOM_DEFAULT_DATA_DIR;
}

Catalog Catalog::load(const std::filesystem::path& dir) {
  Catalog c;
  c.dir_ = dir;
  const auto text = read_text_file(dir / "catalog.json");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::FormatError, "catalog.json: " + std::string(e.what()));
  }
  for (const auto& item : doc.at("entries")) {
    CatalogEntry e;
    e.name = item.at("name").get<std::string>();
    const auto kind = item.at("kind").get<std::string>();
    if (kind == "quandle") e.kind = EntryKind::Quandle;
    else if (kind == "biquandle") e.kind = EntryKind::Biquandle;
    else if (kind == "link") e.kind = EntryKind::Link;
    else throw Error(ErrorCode::FormatError, "catalog entry " + e.name + ": unknown kind " + kind);
    e.path = item.at("path").get<std::string>();
    e.note = item.value("note", "");
    c.entries_.push_back(std::move(e));
  }
  return c;
}

const CatalogEntry* Catalog::find(std::string_view name) const {
  for (const auto& e : entries_)
    if (e.name == name) return &e;
  return nullptr;
}

const CatalogEntry& Catalog::require(std::string_view name) const {
  if (const auto* e = find(name)) return *e;
  throw Error(ErrorCode::FormatError, "no catalog entry named " + std::string(name));
}

Structure Catalog::structure(std::string_view name) const {
  return read_structure(read_text_file(full_path(require(name))));
}

Quandle Catalog::quandle(std::string_view name) const {
  return read_quandle(read_text_file(full_path(require(name))));
}

Biquandle Catalog::biquandle(std::string_view name) const {
  return read_biquandle(read_text_file(full_path(require(name))));
}

PDCode Catalog::link(std::string_view name) const {
  return parse_pd(read_text_file(full_path(require(name))));
}

ResolvedInput resolve_input(const Catalog& catalog, const std::string& arg) {
  if (const auto* e = catalog.find(arg)) {
    auto path = catalog.full_path(*e);
    return {arg, path, read_text_file(path)};
  }
  std::filesystem::path path(arg);
  if (!std::filesystem::is_regular_file(path))
    throw Error(ErrorCode::FormatError, arg + " is neither a catalog name nor a readable file");
  return {path.filename().string(), path, read_text_file(path)};
}

}  // namespace qhom
