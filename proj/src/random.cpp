#include "ponsim/random.hpp"

namespace ponsim {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace

std::uint64_t RandomStream::derive(std::uint64_t root, std::string_view name) {
  return splitmix64(root ^ splitmix64(fnv1a(name)));
}

std::mt19937_64& RandomStream::substream(std::string_view name) {
  auto it = streams_.find(std::string(name));
  if (it == streams_.end()) {
    auto eng = std::make_unique<std::mt19937_64>(derive(seed_, name));
    it = streams_.emplace(std::string(name), std::move(eng)).first;
  }
  return *it->second;
}

}  // namespace ponsim
