#ifndef BIGSURV_RNG_HPP
#define BIGSURV_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

namespace bigsurv {

// splitmix64 finalizer; used to key independent streams.
std::uint64_t mix64(std::uint64_t z);

// Derives the seed of an independent substream from a master seed and up to
// three stream coordinates (e.g. study id, replication index, phase).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a,
                          std::uint64_t b = 0, std::uint64_t c = 0);

// Inverse of the standard normal CDF (Wichura's AS241, double precision).
double inverse_normal_cdf(double p);

// Reproducible random stream. All variates are produced by inverse-CDF from
// the mt19937_64 uniform stream, so sequences are bit-identical across
// platforms for a given seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Unbiased uniform integer in [0, bound); bound >= 1.
  std::uint64_t below(std::uint64_t bound);

  // Uniform on the open interval (0,1).
  double uniform() {
    return (static_cast<double>(engine_() >> 11) + 0.5) *
           (1.0 / 9007199254740992.0);  // 2^-53
  }

  // Standard normal via inverse CDF.
  double normal() { return inverse_normal_cdf(uniform()); }

  // Exponential with mean 1 via inverse CDF.
  double exponential();

  // Sorted simple random sample without replacement of k indices out of
  // 0..m-1 (selection sampling; each subset equally likely).
  std::vector<std::uint32_t> sample_without_replacement(std::uint32_t m,
                                                        std::uint32_t k);

  // In-place Fisher-Yates shuffle.
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace bigsurv

#endif
