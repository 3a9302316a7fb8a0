// Catalog of computed complexes: a flat directory of JSON files, each named
// by the SHA-256 of its own canonical content.

#ifndef SWC_CATALOG_HPP_
#define SWC_CATALOG_HPP_

#include <cstddef>
#include <string>

#include "json.hpp"

#include "swc/coxeter.hpp"
#include "swc/simplicial.hpp"
#include "swc/subword.hpp"

namespace swc {

  struct CatalogEntry {
    std::string system;
    Word        word;
    Word        rho_word;
    std::string family;  // "cluster", "multicluster" or "custom"
    std::size_t k = 1;
    FVector     f_vector;
    bool        spherical   = false;
    std::size_t facet_count = 0;
    // hex SHA-256 of canonical_dump(content_json())
    std::string content_hash;

    nlohmann::json content_json() const;
    nlohmann::json to_json() const;
  };

  CatalogEntry make_catalog_entry(CoxeterSystem const& sys,
                                  SubwordSpec const&   spec,
                                  std::string const&   family,
                                  std::size_t          k = 1);

  std::string sha256_hex(std::string const& bytes);

  // Writes <dir>/<hash>.json, creating dir if needed; returns the path.
  std::string write_catalog_entry(CatalogEntry const& e, std::string const& dir);

  // Directory from SWC_CATALOG_DIR, or "catalog".
  std::string default_catalog_dir();

}  // namespace swc

#endif  // SWC_CATALOG_HPP_
