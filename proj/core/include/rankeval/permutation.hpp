#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rankeval {

/// An element of the symmetric group S_n: a bijection of {1..n}.
/// image()[i-1] holds the 1-based value assigned to position i.
/// Instances are immutable after construction.
class Permutation {
 public:
  /// Validates that `image` is a bijection of {1..n}; throws
  /// std::invalid_argument otherwise (n = image.size() must be >= 1).
  static Permutation from_image(std::vector<std::int32_t> image);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(image_.size()); }

  /// Value at 1-based position i.
  std::int32_t operator()(int i) const { return image_[static_cast<std::size_t>(i) - 1]; }

  std::span<const std::int32_t> image() const { return image_; }

  bool operator==(const Permutation& other) const = default;

 private:
  struct Unchecked {};
  Permutation(std::vector<std::int32_t> image, Unchecked) : image_(std::move(image)) {}

  std::vector<std::int32_t> image_;

  friend Permutation compose(const Permutation&, const Permutation&);
  friend Permutation inverse(const Permutation&);
  friend Permutation make_swap(int, struct SwapSpec);
  friend class PermutationSampler;
  friend std::vector<Permutation> enumerate_group(int, int);
};

/// A transposition (i j): exchanges exactly the two elements i and j.
struct SwapSpec {
  int i = 0;
  int j = 0;
  int width() const { return i < j ? j - i : i - j; }
};

/// (sigma o nu)(x) = sigma(nu(x)).  Both operands must share n.
Permutation compose(const Permutation& sigma, const Permutation& nu);

Permutation inverse(const Permutation& sigma);

/// Builds the transposition permutation for `spec` inside S_n.
Permutation make_swap(int n, SwapSpec spec);

/// The prefix (sigma(1), ..., sigma(k)); values may exceed k.
std::vector<std::int32_t> prefix(const Permutation& sigma, int k);

inline constexpr int kDefaultEnumerateLimit = 8;

/// All n! elements of S_n in lexicographic image order.  Rejects n above
/// `limit` since the output grows factorially.
std::vector<Permutation> enumerate_group(int n, int limit = kDefaultEnumerateLimit);

/// Deterministic uniform sampling.  Draw d of a (n, seed) stream depends
/// only on (seed, d), so campaigns can be partitioned across workers
/// without changing any output.
class PermutationSampler {
 public:
  PermutationSampler(int n, std::uint64_t seed);

  Permutation draw(std::uint64_t index) const;

 private:
  int n_;
  std::uint64_t seed_;
};

std::vector<Permutation> sample_uniform(int n, std::int64_t count, std::uint64_t seed);

/// Text format used by the CLI and fixture files: comma-separated 1-based
/// image on one line, e.g. "2,1,3,4,5".
Permutation parse_permutation(std::string_view text);
std::string format_permutation(const Permutation& sigma);

}  // namespace rankeval
