#pragma once

#include <cstdint>

namespace rtmdid {

/// Counter-based random stream. Each draw mixes an affine 64-bit counter, so
/// a given (seed, stream_id) pair produces the same sequence regardless of
/// thread scheduling or how many other streams are in flight. One stream per
/// Monte Carlo replication keeps results independent of execution order.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed, std::uint64_t stream_id = 0);

  std::uint64_t next_u64();
  double uniform();              // [0, 1)
  double normal();               // standard normal, Marsaglia polar method
  double chi_square(double df);  // df > 0, finite
  double gamma(double shape);    // unit scale, shape > 0

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_id_; }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::uint64_t state_;
  double cached_normal_ = 0.0;
  bool has_cached_normal_ = false;
};

}  // namespace rtmdid
