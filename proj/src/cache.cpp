#include "laplace_prolate/cache.hpp"

#include <bit>
#include <cstdio>
#include <cstdlib>
#include <json.hpp>

#include "laplace_prolate/errors.hpp"
#include "laplace_prolate/io.hpp"

namespace laplace_prolate {

namespace {

using nlohmann::json;

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

double real_field(const json& obj, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end() || !it->is_string()) {
    throw CacheError(std::string("cache: missing real field '") + key + "'");
  }
  const auto v = io::parse_shortest(it->get<std::string>());
  if (!v) throw CacheError(std::string("cache: bad number in '") + key + "'");
  return *v;
}

int int_field(const json& obj, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end() || !it->is_number_integer()) {
    throw CacheError(std::string("cache: missing integer field '") + key + "'");
  }
  return it->get<int>();
}

json payload_of(const Spectrum& s) {
  json records = json::array();
  for (int n = 0; n < s.size(); ++n) {
    const EigenPair& p = s.pairs[n];
    json coeffs = json::array();
    for (double d : p.coeffs) coeffs.push_back(io::shortest(d));
    records.push_back({{"n", p.n},
                       {"parity", parity_offset(p.parity)},
                       {"chi", io::shortest(p.chi)},
                       {"nu", io::shortest(s.nu[n])},
                       {"log_nu", io::shortest(s.log_nu[n])},
                       {"coeffs", std::move(coeffs)}});
  }
  const int trunc = s.pairs.empty() ? 0 : s.pairs.front().trunc_order;
  return {{"c", io::shortest(s.params.c())},
          {"alpha", io::shortest(s.params.alpha())},
          {"trunc_order", trunc},
          {"records", std::move(records)}};
}

}  // namespace

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string cache_serialize(const Spectrum& spectrum) {
  const json payload = payload_of(spectrum);
  const json doc = {{"format_version", kCacheFormatVersion},
                    {"checksum", hex64(fnv1a64(payload.dump()))},
                    {"payload", payload}};
  return doc.dump(1) + "\n";
}

Spectrum cache_deserialize(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw CacheError(std::string("cache: unreadable file: ") + e.what());
  }
  if (!doc.is_object()) throw CacheError("cache: top level is not an object");
  const int version = int_field(doc, "format_version");
  if (version != kCacheFormatVersion) {
    throw CacheError("cache: format_version " + std::to_string(version) + ", expected " +
                     std::to_string(kCacheFormatVersion));
  }
  const auto pit = doc.find("payload");
  const auto cit = doc.find("checksum");
  if (pit == doc.end() || cit == doc.end() || !cit->is_string()) {
    throw CacheError("cache: missing payload or checksum");
  }
  const json& payload = *pit;
  if (hex64(fnv1a64(payload.dump())) != cit->get<std::string>()) {
    throw CacheError("cache: checksum mismatch");
  }

  try {
    Spectrum s;
    s.params = ProblemParams(real_field(payload, "c"), real_field(payload, "alpha"));
    const int trunc = int_field(payload, "trunc_order");
    const auto rit = payload.find("records");
    if (rit == payload.end() || !rit->is_array()) throw CacheError("cache: missing records");
    for (const json& r : *rit) {
      EigenPair p;
      p.params = s.params;
      p.n = int_field(r, "n");
      if (p.n != s.size()) throw CacheError("cache: records out of order");
      const int parity = int_field(r, "parity");
      if (parity != p.n % 2) throw CacheError("cache: parity does not match n");
      p.parity = parity_of(p.n);
      p.chi = real_field(r, "chi");
      p.trunc_order = trunc;
      const auto dit = r.find("coeffs");
      if (dit == r.end() || !dit->is_array()) throw CacheError("cache: missing coeffs");
      for (const json& d : *dit) {
        if (!d.is_string()) throw CacheError("cache: coefficient is not a string");
        const auto v = io::parse_shortest(d.get<std::string>());
        if (!v) throw CacheError("cache: bad coefficient");
        p.coeffs.push_back(*v);
      }
      s.nu.push_back(real_field(r, "nu"));
      s.log_nu.push_back(real_field(r, "log_nu"));
      s.pairs.push_back(std::move(p));
    }
    return s;
  } catch (const DomainError& e) {
    throw CacheError(std::string("cache: invalid parameters: ") + e.what());
  }
}

void cache_save(const Spectrum& spectrum, const std::filesystem::path& path) {
  io::write_atomically(path, cache_serialize(spectrum));
}

Spectrum cache_load(const std::filesystem::path& path) {
  return cache_deserialize(io::read_file(path));
}

std::filesystem::path cache_directory() {
  if (const char* env = std::getenv("LAPLACE_PROLATE_CACHE_DIR"); env && *env) return env;
  return "laplace_prolate_cache";
}

std::filesystem::path cache_file_for(const ProblemParams& params) {
  return cache_directory() / ("spectrum_c" + hex64(std::bit_cast<std::uint64_t>(params.c())) +
                              "_alpha" +
                              hex64(std::bit_cast<std::uint64_t>(params.alpha())) + ".json");
}

Spectrum cached_spectrum(const ProblemParams& params, int n_max, bool* from_cache) {
  const std::filesystem::path path = cache_file_for(params);
  std::error_code ec;
  if (std::filesystem::exists(path, ec)) {
    Spectrum s = cache_load(path);
    if (s.params == params && s.size() > n_max) {
      s.pairs.resize(static_cast<std::size_t>(n_max) + 1);
      s.nu.resize(static_cast<std::size_t>(n_max) + 1);
      s.log_nu.resize(static_cast<std::size_t>(n_max) + 1);
      if (from_cache) *from_cache = true;
      return s;
    }
  }
  Spectrum s = build_spectrum(params, n_max);
  std::filesystem::create_directories(path.parent_path(), ec);
  if (ec) throw CacheError("cannot create " + path.parent_path().string());
  cache_save(s, path);
  if (from_cache) *from_cache = false;
  return s;
}

}  // namespace laplace_prolate
