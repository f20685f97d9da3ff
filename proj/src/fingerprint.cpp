#include "sparse_ssa/fingerprint.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "sparse_ssa/errors.hpp"

namespace sparse_ssa {

std::uint64_t mod61::pow(std::uint64_t base, std::uint64_t exp) noexcept {
  std::uint64_t result = 1;
  base %= kPrime;
  while (exp) {
    if (exp & 1) result = mul(result, base);
    base = mul(base, base);
    exp >>= 1;
  }
  return result;
}

FingerprintIndex::FingerprintIndex(const Text& text, std::size_t samples,
                                   std::uint64_t seed)
    : text_(text.bytes()) {
  const std::size_t n = text_.size();
  if (samples < 1 || samples > n)
    throw ContractError("fingerprint sample count s=" + std::to_string(samples) +
                        " outside [1, " + std::to_string(n) + "]");

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> pick(1, mod61::kPrime - 1);
  base_ = pick(rng);
  base_inverse_ = mod61::pow(base_, mod61::kPrime - 2);

  stride_ = (n + samples - 1) / samples;
  const std::size_t anchors = n / stride_;
  prefix_.reserve(anchors + 1);
  power_.reserve(anchors + 1);

  std::uint64_t stride_power = 1;
  for (std::size_t k = 0; k < stride_; ++k)
    stride_power = mod61::mul(stride_power, base_);

  // Single left-to-right pass.
  prefix_.push_back(0);
  power_.push_back(1);
  std::uint64_t h = 0;
  for (std::size_t k = 0; k < n; ++k) {
    h = mod61::add(mod61::mul(h, base_), text_[k]);
    if ((k + 1) % stride_ == 0) {
      prefix_.push_back(h);
      power_.push_back(mod61::mul(power_.back(), stride_power));
    }
  }
  full_prefix_ = h;
}

std::uint64_t FingerprintIndex::power(std::size_t exp) const {
  if (exp > text_.size())
    throw ContractError("power exponent " + std::to_string(exp) +
                        " exceeds text length");
  std::uint64_t r = power_[exp / stride_];
  for (std::size_t k = exp % stride_; k > 0; --k) r = mod61::mul(r, base_);
  return r;
}

std::uint64_t FingerprintIndex::prefix_at_anchor(std::size_t q) const noexcept {
  return q % stride_ == 0 ? prefix_[q / stride_] : full_prefix_;
}

std::size_t FingerprintIndex::prefix_cost(std::size_t x) const noexcept {
  const std::size_t lower = x / stride_ * stride_;
  const std::size_t upper = std::min(lower + stride_, text_.size());
  return std::min(x - lower, upper - x);
}

// phi(1, x) for x in [0, n]; phi(1, 0) = 0.
std::uint64_t FingerprintIndex::prefix(std::size_t x,
                                       std::size_t* letter_reads) const noexcept {
  const std::size_t lower = x / stride_ * stride_;
  const std::size_t upper = std::min(lower + stride_, text_.size());
  const std::size_t forward = x - lower;
  const std::size_t backward = upper - x;

  if (forward <= backward) {
    std::uint64_t h = prefix_at_anchor(lower);
    for (std::size_t k = lower; k < x; ++k)
      h = mod61::add(mod61::mul(h, base_), text_[k]);
    if (letter_reads) *letter_reads += forward;
    return h;
  }

  // phi(1, x) = (phi(1, upper) - phi(x + 1, upper)) * r^-(upper - x)
  std::uint64_t tail = 0;
  std::uint64_t unshift = 1;
  for (std::size_t k = x; k < upper; ++k) {
    tail = mod61::add(mod61::mul(tail, base_), text_[k]);
    unshift = mod61::mul(unshift, base_inverse_);
  }
  if (letter_reads) *letter_reads += backward;
  return mod61::mul(mod61::sub(prefix_at_anchor(upper), tail), unshift);
}

Fingerprint FingerprintIndex::fingerprint(std::size_t pos, std::size_t len,
                                          std::size_t* letter_reads) const {
  const std::size_t n = text_.size();
  if (pos < 1 || pos > n)
    throw ContractError("fingerprint start " + std::to_string(pos) +
                        " outside [1, " + std::to_string(n) + "]");
  if (len < 1) throw ContractError("fingerprint length must be >= 1");

  const std::size_t window = std::min(len, n - pos + 1);
  const std::size_t last = pos + window - 1;

  const std::size_t via_prefixes = prefix_cost(pos - 1) + prefix_cost(last);
  if (window <= via_prefixes) {
    std::uint64_t h = 0;
    for (std::size_t k = pos - 1; k < last; ++k)
      h = mod61::add(mod61::mul(h, base_), text_[k]);
    if (letter_reads) *letter_reads += window;
    return {h, window};
  }

  const std::uint64_t right = prefix(last, letter_reads);
  const std::uint64_t left = prefix(pos - 1, letter_reads);
  return {mod61::sub(right, mod61::mul(left, power(window))), window};
}

}  // namespace sparse_ssa
