#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "laplace_prolate/spectrum.hpp"

namespace laplace_prolate {

inline constexpr int kCacheFormatVersion = 1;

/// JSON text of a spectrum cache file:
///   {"checksum": "<fnv1a64 hex of payload>", "format_version": 1, "payload": {...}}
/// with every real stored as its shortest round-trip decimal string.
std::string cache_serialize(const Spectrum& spectrum);

/// Inverse of cache_serialize. Throws CacheError on malformed text, a version
/// mismatch, or a checksum failure.
Spectrum cache_deserialize(std::string_view text);

void cache_save(const Spectrum& spectrum, const std::filesystem::path& path);
Spectrum cache_load(const std::filesystem::path& path);

/// 64-bit FNV-1a.
std::uint64_t fnv1a64(std::string_view bytes);

/// $LAPLACE_PROLATE_CACHE_DIR if set, otherwise ./laplace_prolate_cache.
std::filesystem::path cache_directory();

/// File name keyed on the exact bits of c and alpha.
std::filesystem::path cache_file_for(const ProblemParams& params);

/// Loads the cached spectrum for `params` if it holds at least n_max + 1
/// eigenvalues; otherwise computes it and stores it. Sets *from_cache when
/// given.
Spectrum cached_spectrum(const ProblemParams& params, int n_max, bool* from_cache = nullptr);

}  // namespace laplace_prolate
