#include "commgan/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace commgan {

namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

// splitmix64 finalizer; bijective on 64-bit words.
std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id)
    : seed_(seed), stream_id_(stream_id), counter_(0) {
  // For a fixed seed, distinct stream ids map to distinct keys.
  key_ = mix64(mix64(seed + kGolden) + stream_id);
}

std::uint64_t RngStream::next_u64() {
  ++counter_;
  return mix64(key_ + counter_ * kGolden);
}

double RngStream::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::uniform(double lo, double hi) {
  return lo + (hi - lo) * uniform();
}

double RngStream::normal() {
  // Box-Muller, cosine branch only: exactly two counters per draw.
  const double u1 = static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;  // (0, 1]
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

int RngStream::uniform_int(int bound) {
  if (bound <= 0) {
    throw std::domain_error("RngStream::uniform_int: bound must be positive");
  }
  const auto wide = static_cast<unsigned __int128>(next_u64()) *
                    static_cast<unsigned __int128>(bound);
  return static_cast<int>(wide >> 64);
}

RngStream RngStream::substream(std::uint64_t stream_id) const {
  return RngStream(seed_, stream_id);
}

}  // namespace commgan
