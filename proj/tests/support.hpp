#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "sparse_ssa/text.hpp"

namespace ssa_test {

inline const std::string kExampleText = "abracadabrarabia";
inline const std::vector<std::size_t> kExamplePositions{1, 3, 8, 10, 11, 13};
inline const std::vector<std::size_t> kExampleSsa{13, 1, 8, 11, 3, 10};
inline const std::vector<std::size_t> kExampleSlcp{0, 2, 4, 1, 0, 2};

// Direct polynomial evaluation of sum T[k] r^(end-k) mod p over the clamped
// window, using plain % reduction (no shared code with the index).
inline std::uint64_t direct_fingerprint(const sparse_ssa::Text& text,
                                        std::size_t pos, std::size_t len,
                                        std::uint64_t r,
                                        std::size_t* window = nullptr) {
  constexpr std::uint64_t p = 2305843009213693951ULL;  // 2^61 - 1
  const std::size_t end = std::min(pos + len - 1, text.size());
  unsigned __int128 h = 0;
  for (std::size_t k = pos; k <= end; ++k) h = (h * r + text[k]) % p;
  if (window) *window = end - pos + 1;
  return static_cast<std::uint64_t>(h);
}

inline std::filesystem::path temp_dir(const std::string& name) {
  const char* env = std::getenv("SSA_TEST_TMP");
  auto base = env ? std::filesystem::path(env)
                  : std::filesystem::temp_directory_path() / "sparse_ssa_tests";
  auto dir = base / name;
  std::filesystem::create_directories(dir);
  return dir;
}

inline void write_file(const std::filesystem::path& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary);
  out << data;
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

struct Instance {
  sparse_ssa::Text text;
  sparse_ssa::PositionSet positions;
  unsigned sigma;
};

/// Random text of length n over `sigma` letters and b random positions.
inline Instance random_instance(std::size_t n, unsigned sigma, std::size_t b,
                                std::uint64_t seed) {
  auto text = sparse_ssa::random_text(n, sigma, seed);
  auto positions = sparse_ssa::sample_positions(n, b, seed * 31 + 7);
  return {std::move(text), std::move(positions), sigma};
}

}  // namespace ssa_test
