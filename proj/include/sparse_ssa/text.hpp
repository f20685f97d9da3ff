#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string_view>
#include <vector>

namespace sparse_ssa {

// Text positions, suffix ids and group ids are 1-based throughout the
// library. Containers (SSA, SLCP, PositionSet) use ordinary 0-based C++
// indexing for their slots; the values they hold are 1-based positions.

/// Read-only byte string T[1..n], n >= 1.
class Text {
 public:
  explicit Text(std::vector<std::uint8_t> bytes);

  static Text from_string(std::string_view s);

  std::size_t size() const noexcept { return bytes_.size(); }

  /// Letter at 1-based position `pos`. No bounds check.
  std::uint8_t operator[](std::size_t pos) const noexcept {
    return bytes_[pos - 1];
  }

  /// Letter at 1-based position `pos`; throws ContractError if out of range.
  std::uint8_t at(std::size_t pos) const;

  std::span<const std::uint8_t> bytes() const noexcept { return bytes_; }

 private:
  std::vector<std::uint8_t> bytes_;
};

/// b distinct 1-based positions of a text of length n.
class PositionSet {
 public:
  /// Validates every entry against [1, n] and distinctness.
  PositionSet(std::vector<std::size_t> positions, std::size_t n);

  std::size_t size() const noexcept { return positions_.size(); }
  std::size_t text_length() const noexcept { return n_; }

  /// 0-based slot access: operator[](0) is the paper-style A[1].
  std::size_t operator[](std::size_t slot) const noexcept {
    return positions_[slot];
  }

  std::span<const std::size_t> positions() const noexcept {
    return positions_;
  }

 private:
  std::vector<std::size_t> positions_;
  std::size_t n_;
};

/// Reads the whole file as raw bytes. Throws LoadError / ValidationError.
Text load_text(const std::filesystem::path& path);

/// Writes raw bytes; counterpart of load_text.
void save_text(const std::filesystem::path& path, const Text& text);

/// One decimal 1-based position per line; LF or CRLF. Blank lines are
/// ignored.
PositionSet load_positions(const std::filesystem::path& path, std::size_t n);

/// Parses the positions file format from an in-memory buffer.
PositionSet parse_positions(std::string_view content, std::size_t n);

/// b distinct positions drawn uniformly from [1, n]; deterministic in seed.
PositionSet sample_positions(std::size_t n, std::size_t b, std::uint64_t seed);

/// Uniform random text over the first `sigma` byte values starting at 'a'
/// when sigma <= 26, else over [0, sigma).
Text random_text(std::size_t n, unsigned sigma, std::uint64_t seed);

}  // namespace sparse_ssa
