#include "rankeval/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

#include "rankeval/rng.hpp"

namespace rankeval {

namespace {

constexpr std::uint64_t kSampleTag = 0x7065726d73616d70ULL;  // "permsamp"

void require(bool ok, const char* message) {
  if (!ok) throw std::invalid_argument(message);
}

}  // namespace

Permutation Permutation::from_image(std::vector<std::int32_t> image) {
  const auto n = image.size();
  require(n >= 1, "permutation: length must be >= 1");
  std::vector<char> seen(n + 1, 0);
  for (std::int32_t v : image) {
    require(v >= 1 && static_cast<std::size_t>(v) <= n,
            "permutation: values must lie in 1..n");
    require(!seen[static_cast<std::size_t>(v)], "permutation: duplicate value");
    seen[static_cast<std::size_t>(v)] = 1;
  }
  return Permutation(std::move(image), Unchecked{});
}

Permutation Permutation::identity(int n) {
  require(n >= 1, "identity: n must be >= 1");
  std::vector<std::int32_t> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 1);
  return Permutation(std::move(image), Unchecked{});
}

Permutation compose(const Permutation& sigma, const Permutation& nu) {
  if (sigma.size() != nu.size())
    throw std::invalid_argument("compose: operands have different lengths");
  const int n = sigma.size();
  std::vector<std::int32_t> image(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i)
    image[static_cast<std::size_t>(i) - 1] = sigma(nu(i));
  return Permutation(std::move(image), Permutation::Unchecked{});
}

Permutation inverse(const Permutation& sigma) {
  const int n = sigma.size();
  std::vector<std::int32_t> image(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i)
    image[static_cast<std::size_t>(sigma(i)) - 1] = static_cast<std::int32_t>(i);
  return Permutation(std::move(image), Permutation::Unchecked{});
}

Permutation make_swap(int n, SwapSpec spec) {
  if (n < 1) throw std::invalid_argument("swap: n must be >= 1");
  if (spec.i < 1 || spec.i > n || spec.j < 1 || spec.j > n)
    throw std::invalid_argument("swap: indices out of range");
  if (spec.i == spec.j) throw std::invalid_argument("swap: indices must differ");
  std::vector<std::int32_t> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 1);
  std::swap(image[static_cast<std::size_t>(spec.i) - 1],
            image[static_cast<std::size_t>(spec.j) - 1]);
  return Permutation(std::move(image), Permutation::Unchecked{});
}

std::vector<std::int32_t> prefix(const Permutation& sigma, int k) {
  if (k < 1 || k > sigma.size())
    throw std::invalid_argument("prefix: k out of range 1..n");
  auto img = sigma.image();
  return std::vector<std::int32_t>(img.begin(), img.begin() + k);
}

std::vector<Permutation> enumerate_group(int n, int limit) {
  if (n < 1) throw std::invalid_argument("enumerate: n must be >= 1");
  if (n > limit)
    throw std::length_error("enumerate: n exceeds the exhaustive limit (" +
                            std::to_string(limit) + ")");
  std::vector<std::int32_t> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(image, Permutation::Unchecked{}));
  } while (std::next_permutation(image.begin(), image.end()));
  return out;
}

PermutationSampler::PermutationSampler(int n, std::uint64_t seed)
    : n_(n), seed_(seed) {
  if (n < 1) throw std::invalid_argument("sampler: n must be >= 1");
}

Permutation PermutationSampler::draw(std::uint64_t index) const {
  SplitMix64 rng(stream_key(seed_, kSampleTag, index));
  std::vector<std::int32_t> image(static_cast<std::size_t>(n_));
  std::iota(image.begin(), image.end(), 1);
  // Fisher-Yates with unbiased bounded draws.
  for (std::size_t i = image.size() - 1; i > 0; --i) {
    const std::size_t j = static_cast<std::size_t>(rng.below(i + 1));
    std::swap(image[i], image[j]);
  }
  return Permutation(std::move(image), Permutation::Unchecked{});
}

std::vector<Permutation> sample_uniform(int n, std::int64_t count,
                                        std::uint64_t seed) {
  if (count < 0) throw std::invalid_argument("sample_uniform: negative count");
  PermutationSampler sampler(n, seed);
  std::vector<Permutation> out;
  out.reserve(static_cast<std::size_t>(count));
  for (std::int64_t d = 0; d < count; ++d)
    out.push_back(sampler.draw(static_cast<std::uint64_t>(d)));
  return out;
}

Permutation parse_permutation(std::string_view text) {
  std::vector<std::int32_t> image;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = text.find(',', pos);
    if (next == std::string_view::npos) next = text.size();
    std::string_view token = text.substr(pos, next - pos);
    // trim spaces
    while (!token.empty() && (token.front() == ' ' || token.front() == '\t'))
      token.remove_prefix(1);
    while (!token.empty() && (token.back() == ' ' || token.back() == '\t' ||
                              token.back() == '\n' || token.back() == '\r'))
      token.remove_suffix(1);
    std::int32_t value = 0;
    const auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
      throw std::invalid_argument("permutation: bad token '" +
                                  std::string(token) + "'");
    image.push_back(value);
    if (next == text.size()) break;
    pos = next + 1;
  }
  return Permutation::from_image(std::move(image));
}

std::string format_permutation(const Permutation& sigma) {
  std::string out;
  for (int i = 1; i <= sigma.size(); ++i) {
    if (i > 1) out.push_back(',');
    out += std::to_string(sigma(i));
  }
  return out;
}

}  // namespace rankeval
