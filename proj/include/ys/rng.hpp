#pragma once

#include <cstdint>
#include <random>

namespace ys {

/// A seeded random stream. Identical (seed, stream_id) pairs reproduce identical
/// draw sequences; distinct stream ids are seeded through std::seed_seq so that
/// replications can run on independent streams.
class RngStream {
 public:
  RngStream() : RngStream(1, 0) {}
  RngStream(std::uint64_t seed, std::uint64_t stream_id);

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream_id() const noexcept { return stream_id_; }

  /// Same stream id, seed scrambled with `salt`. Used to give each consumer
  /// (data generation, sampler) of one replication its own stream.
  RngStream derive(std::uint64_t salt) const;

  /// Uniform on the open interval (0, 1), 53-bit resolution.
  double uniform();
  /// Exponential with the given rate.
  double exponential(double rate);
  /// Gamma with the given shape and rate.
  double gamma(double shape, double rate);

  std::mt19937_64& engine() noexcept { return engine_; }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::mt19937_64 engine_;
};

}  // namespace ys
