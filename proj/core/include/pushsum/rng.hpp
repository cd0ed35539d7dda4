#pragma once

#include <cstdint>

namespace pushsum {

/// SplitMix64 mixing step. Used to derive independent deterministic
/// streams from (seed, stream, index) triples without shared state, so
/// any quantity of a run can be recomputed in isolation.
inline std::uint64_t splitmix64(std::uint64_t x)
{
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Top 53 bits of a word mapped to a double in [0, 1).
inline double to_unit_double(std::uint64_t bits)
{
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

/// Stateless uniform draw in [0, 1) for a (seed, stream, index) triple.
/// The same triple always yields the same value on every platform,
/// which keeps runs replayable under any record stride.
inline double uniform_at(std::uint64_t seed, std::uint64_t stream, std::uint64_t index)
{
  std::uint64_t h = splitmix64(seed ^ 0x632be59bd9b4e019ULL);
  h = splitmix64(h ^ stream);
  h = splitmix64(h ^ index);
  return to_unit_double(h);
}

} // namespace pushsum
