#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace frf {

inline constexpr const char* kVersion = "0.1.0";

// One-line statement of the numeric conventions used in every report.
inline constexpr const char* kConventionBanner =
    "energy E(f,f)=sum_{x<y} c_xy (f(x)-f(y))^2; nu(F_w)=Tr Q_w (plain trace "
    "over the b coordinate harmonics); Tr Z_w=1";

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Definition/cell-structure inconsistencies (bad gluing, floating interior, ...).
struct StructuralError : Error {
  using Error::Error;
};

// Ill-conditioned or singular linear algebra beyond tolerance.
struct NumericalError : Error {
  using Error::Error;
};

// Bad arguments at an API or CLI boundary.
struct UsageError : Error {
  using Error::Error;
};

// FNV-1a, used for cache keys and the fractal hash stamped into reports.
inline std::uint64_t fnv1a(std::string_view data, std::uint64_t seed = 0xcbf29ce484222325ull) {
  std::uint64_t h = seed;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

// SplitMix64. Cheap, deterministic across platforms; used to derive
// per-sample RNG streams from (seed, index).
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t s) : state(s) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  // uniform in [0,1)
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

}  // namespace frf
