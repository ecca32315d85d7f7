#pragma once

#include <cstdint>

namespace commgan {

// Counter-based random stream: every output is a pure function of
// (seed, stream id, counter), so identical construction replays the
// identical sequence and distinct stream ids never share state.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed, std::uint64_t stream_id = 0);

  std::uint64_t next_u64();
  double uniform();                          // [0, 1)
  double uniform(double lo, double hi);      // [lo, hi); lo == hi pins the value
  double normal();                           // standard Gaussian, consumes 2 counters
  int uniform_int(int bound);                // [0, bound)

  // Fresh stream with the same seed and a new stream id. Stream ids are
  // a process-wide convention; see rng_streams below.
  RngStream substream(std::uint64_t stream_id) const;

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_id_; }
  std::uint64_t counter() const { return counter_; }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::uint64_t counter_;
  std::uint64_t key_;
};

// Well-known stream ids. Training owns the low ids, the CLI the high ones.
namespace rng_streams {
inline constexpr std::uint64_t kWeightInit = 1;
inline constexpr std::uint64_t kTrainLoop = 2;
inline constexpr std::uint64_t kEpochEval = 3;
inline constexpr std::uint64_t kChannelDraw = 100;
inline constexpr std::uint64_t kFinalEval = 101;
inline constexpr std::uint64_t kConstellation = 102;
inline constexpr std::uint64_t kBaseline = 103;
}  // namespace rng_streams

}  // namespace commgan
