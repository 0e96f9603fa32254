#pragma once

#include <cstdint>
#include <random>

namespace twoexperts {

// splitmix64, used to decorrelate user seeds and per-trial stream indices.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Stream `index` of the generator family identified by `seed`. Independent
// streams let Monte Carlo trials run in any order (or in parallel) while
// producing identical per-trial results.
inline std::mt19937_64 make_stream(std::uint64_t seed, std::uint64_t index = 0) {
  return std::mt19937_64(splitmix64(seed ^ splitmix64(index)));
}

}  // namespace twoexperts
