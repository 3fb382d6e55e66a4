#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace orbcat {

// Error raised on invalid user input (bad tables, bad descriptors, caps).
class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Deterministic PRNG (splitmix64). Seeded checks must reproduce bit-for-bit
// across runs and platforms, so we avoid std:: distributions.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, n)
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) throw error("Rng::below(0)");
    std::uint64_t limit = ~std::uint64_t(0) - (~std::uint64_t(0) % n);
    std::uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return v % n;
  }

  int range(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = below(i);
      std::swap(v[i - 1], v[j]);
    }
  }

  // derive an independent stream, e.g. per test instance
  Rng fork(std::uint64_t salt) {
    return Rng(next() ^ (salt * 0x9e3779b97f4a7c15ULL + 0x165667b19e3779f9ULL));
  }

private:
  std::uint64_t state_;
};

// sorted-vector sets of small ints
inline bool sorted_contains(const std::vector<int>& v, int x) {
  return std::binary_search(v.begin(), v.end(), x);
}

inline void sort_unique(std::vector<int>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

inline bool is_subset(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (int x : v) {
      h ^= static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

inline std::uint64_t pair_key(int a, int b) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
         static_cast<std::uint64_t>(static_cast<std::uint32_t>(b));
}

std::vector<std::string> split(const std::string& s, char sep);
std::string trim(const std::string& s);

}  // namespace orbcat
