#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <string_view>
#include <unordered_map>

namespace ponsim {

/// Seeded random source with named substreams. Each substream is an
/// independent mt19937_64 whose seed is derived from (root seed, name),
/// so adding or reordering substreams never perturbs the others.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t seed() const { return seed_; }

  /// Returns the engine for `name`, creating it on first use.
  std::mt19937_64& substream(std::string_view name);

  /// Stable 64-bit seed derivation for (root, name); exposed for tests.
  static std::uint64_t derive(std::uint64_t root, std::string_view name);

 private:
  std::uint64_t seed_;
  std::unordered_map<std::string, std::unique_ptr<std::mt19937_64>> streams_;
};

}  // namespace ponsim
