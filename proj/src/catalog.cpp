#include "swc/catalog.hpp"

#include <openssl/evp.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "swc/errors.hpp"
#include "swc/json_io.hpp"

namespace swc {

  nlohmann::json CatalogEntry::content_json() const {
    return {{"system", system},
            {"word", word},
            {"rho_word", rho_word},
            {"family", family},
            {"k", k},
            {"f_vector", f_vector.counts},
            {"spherical", spherical},
            {"facet_count", facet_count}};
  }

  nlohmann::json CatalogEntry::to_json() const {
    auto j            = content_json();
    j["content_hash"] = content_hash;
    return j;
  }

  CatalogEntry make_catalog_entry(CoxeterSystem const& sys,
                                  SubwordSpec const&   spec,
                                  std::string const&   family,
                                  std::size_t          k) {
    auto const   X = subword_complex(sys, spec);
    CatalogEntry e;
    e.system       = sys.descriptor();
    e.word         = spec.word;
    e.rho_word     = sys.reduced_word(spec.rho);
    e.family       = family;
    e.k            = k;
    e.f_vector     = f_vector(X);
    e.spherical    = is_spherical(sys, spec);
    e.facet_count  = X.num_facets();
    e.content_hash = sha256_hex(json_io::canonical_dump(e.content_json()));
    return e;
  }

  std::string sha256_hex(std::string const& bytes) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int  len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr)
        != 1) {
      throw std::runtime_error("SHA-256 failed");
    }
    static constexpr char hex[] = "0123456789abcdef";
    std::string           out;
    for (unsigned int i = 0; i < len; ++i) {
      out += hex[digest[i] >> 4];
      out += hex[digest[i] & 0xF];
    }
    return out;
  }

  std::string write_catalog_entry(CatalogEntry const& e, std::string const& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
      throw InputError("cannot create catalog directory " + dir + ": "
                       + ec.message());
    }
    auto const    path = (std::filesystem::path(dir) / (e.content_hash + ".json")).string();
    std::ofstream out(path, std::ios::binary);
    if (!out) {
      throw InputError("cannot write " + path);
    }
    out << json_io::canonical_dump(e.to_json());
    return path;
  }

  std::string default_catalog_dir() {
    if (char const* env = std::getenv("SWC_CATALOG_DIR"); env != nullptr && *env) {
      return env;
    }
    return "catalog";
  }

}  // namespace swc
