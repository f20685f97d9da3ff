#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "sparse_ssa/text.hpp"

namespace sparse_ssa {

/// Arithmetic modulo the Mersenne prime 2^61 - 1.
namespace mod61 {

inline constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

inline std::uint64_t reduce(unsigned __int128 x) noexcept {
  std::uint64_t lo = static_cast<std::uint64_t>(x) & kPrime;
  std::uint64_t hi = static_cast<std::uint64_t>(x >> 61);
  std::uint64_t r = lo + hi;
  // x < 2^122, so lo + hi < 2^62 and a second fold leaves r <= 2^61.
  r = (r & kPrime) + (r >> 61);
  return r >= kPrime ? r - kPrime : r;
}

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b) noexcept {
  return reduce(static_cast<unsigned __int128>(a) * b);
}

inline std::uint64_t add(std::uint64_t a, std::uint64_t b) noexcept {
  std::uint64_t r = a + b;
  return r >= kPrime ? r - kPrime : r;
}

inline std::uint64_t sub(std::uint64_t a, std::uint64_t b) noexcept {
  return a >= b ? a - b : a + kPrime - b;
}

std::uint64_t pow(std::uint64_t base, std::uint64_t exp) noexcept;

}  // namespace mod61

/// Karp-Rabin fingerprint of a (possibly clamped) window.
struct Fingerprint {
  std::uint64_t value = 0;
  std::size_t window_len = 0;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

/// Sampled prefix-fingerprint table over a text.
///
/// Stores phi(1, t * stride) and r^(t * stride) for t = 0..n/stride, where
/// stride = ceil(n / s), plus phi(1, n). A window fingerprint is assembled
/// from two prefix fingerprints, each reached from the nearer stored anchor
/// (forwards by Horner steps, backwards through r^-1), so a query touches at
/// most min(len, stride) letters.
///
/// The index keeps a view of the text bytes; the Text must outlive it.
class FingerprintIndex {
 public:
  FingerprintIndex(const Text& text, std::size_t samples, std::uint64_t seed);

  /// phi(pos, min(pos + len - 1, n)). `pos` is 1-based. When
  /// `letter_reads` is non-null the number of text letters touched by this
  /// query is added to it.
  Fingerprint fingerprint(std::size_t pos, std::size_t len,
                          std::size_t* letter_reads = nullptr) const;

  /// r^exp mod p for exp in [0, n].
  std::uint64_t power(std::size_t exp) const;

  std::uint64_t modulus() const noexcept { return mod61::kPrime; }
  std::uint64_t base() const noexcept { return base_; }
  std::size_t stride() const noexcept { return stride_; }
  std::size_t text_length() const noexcept { return text_.size(); }

  /// Number of stored prefix samples phi(1, t * stride), t >= 1.
  std::size_t sample_count() const noexcept { return prefix_.size() - 1; }

  /// phi(1, t * stride) for t in [0, sample_count()].
  std::uint64_t sampled_prefix(std::size_t t) const { return prefix_.at(t); }

  /// r^(t * stride) for t in [0, sample_count()].
  std::uint64_t sampled_power(std::size_t t) const { return power_.at(t); }

 private:
  std::uint64_t prefix_at_anchor(std::size_t q) const noexcept;
  std::size_t prefix_cost(std::size_t x) const noexcept;
  std::uint64_t prefix(std::size_t x, std::size_t* letter_reads) const noexcept;

  std::span<const std::uint8_t> text_;
  std::uint64_t base_;
  std::uint64_t base_inverse_;
  std::size_t stride_;
  std::vector<std::uint64_t> prefix_;
  std::vector<std::uint64_t> power_;
  std::uint64_t full_prefix_;  // phi(1, n)
};

}  // namespace sparse_ssa
