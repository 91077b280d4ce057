#pragma once
#include <cstdint>
#include <random>

namespace topoedge {

using Rng = std::mt19937_64;

// splitmix64 finalizer, used to derive independent stream seeds from
// (run seed, stream tag, step). Keeping each consumer on its own stream means
// e.g. the lambda draw never perturbs the dropout masks, which the method
// degeneration identities rely on.
constexpr uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr uint64_t derive_seed(uint64_t seed, uint64_t stream, uint64_t step = 0) {
  return splitmix64(splitmix64(splitmix64(seed) ^ stream) ^ step);
}

inline Rng make_rng(uint64_t seed, uint64_t stream, uint64_t step = 0) {
  return Rng(derive_seed(seed, stream, step));
}

// Stream tags.
namespace stream {
inline constexpr uint64_t kInit = 1;
inline constexpr uint64_t kDropout = 2;
inline constexpr uint64_t kLambda = 3;
inline constexpr uint64_t kWedge = 4;
inline constexpr uint64_t kSplit = 5;
inline constexpr uint64_t kGenerator = 6;
inline constexpr uint64_t kSubsample = 7;
}  // namespace stream

// Beta(a, b) via two gamma draws.
inline double sample_beta(double a, double b, Rng& rng) {
  std::gamma_distribution<double> ga(a, 1.0), gb(b, 1.0);
  double x = ga(rng);
  double y = gb(rng);
  return x / (x + y);
}

}  // namespace topoedge
