#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace resdil {

/// A PRNG stream keyed by (seed, name). Each randomized search draws from its
/// own named stream so adding a search never shifts the numbers another sees.
inline std::mt19937_64 named_stream(std::uint64_t seed, std::string_view name) {
  std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
  for (const char c : name) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32)};
  return std::mt19937_64(seq);
}

}  // namespace resdil
