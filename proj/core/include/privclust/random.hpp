#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace privclust {

// Seeded random stream. Built on mt19937_64 with hand-written conversions so
// the sequence does not depend on the standard library's distribution code.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform on [0, 1) with 53 random bits.
  double uniform();
  // Standard normal via Box-Muller; caches the second variate.
  double normal();
  // Uniform integer on [0, n). n must be > 0.
  std::size_t index(std::size_t n);
  // k distinct indices from [0, n), in draw order (partial Fisher-Yates).
  std::vector<std::size_t> sample_without_replacement(std::size_t n, std::size_t k);
  void shuffle(std::vector<std::size_t>& v);

  std::uint64_t next_u64() { return engine_(); }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

// Independent stream seed for (master, tag, index). The tag separates
// purposes ("tech", "priv", method names) so adding a consumer never shifts
// another consumer's stream.
std::uint64_t derive_seed(std::uint64_t master, std::string_view tag, std::uint64_t index = 0);

}  // namespace privclust
