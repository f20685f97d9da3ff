#include "sparse_ssa/text.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iterator>
#include <random>
#include <string>
#include <unordered_set>

#include "sparse_ssa/errors.hpp"

namespace sparse_ssa {

Text::Text(std::vector<std::uint8_t> bytes) : bytes_(std::move(bytes)) {
  if (bytes_.empty()) throw ValidationError("text is empty (n must be >= 1)");
}

Text Text::from_string(std::string_view s) {
  return Text(std::vector<std::uint8_t>(s.begin(), s.end()));
}

std::uint8_t Text::at(std::size_t pos) const {
  if (pos < 1 || pos > bytes_.size())
    throw ContractError("text position " + std::to_string(pos) +
                        " outside [1, " + std::to_string(bytes_.size()) + "]");
  return bytes_[pos - 1];
}

PositionSet::PositionSet(std::vector<std::size_t> positions, std::size_t n)
    : positions_(std::move(positions)), n_(n) {
  if (positions_.empty())
    throw ValidationError("position set is empty (b must be >= 1)");
  std::unordered_set<std::size_t> seen;
  seen.reserve(positions_.size());
  for (std::size_t p : positions_) {
    if (p < 1 || p > n)
      throw ValidationError("position " + std::to_string(p) +
                            " out of range [1, " + std::to_string(n) + "]");
    if (!seen.insert(p).second)
      throw ValidationError("duplicate position " + std::to_string(p));
  }
}

Text load_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LoadError("cannot open text file '" + path.string() + "'");
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (in.bad()) throw LoadError("read failure on '" + path.string() + "'");
  if (bytes.empty())
    throw ValidationError("text file '" + path.string() + "' is empty");
  return Text(std::move(bytes));
}

void save_text(const std::filesystem::path& path, const Text& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw LoadError("cannot open '" + path.string() + "' for writing");
  auto bytes = text.bytes();
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw LoadError("write failure on '" + path.string() + "'");
}

PositionSet parse_positions(std::string_view content, std::size_t n) {
  std::vector<std::size_t> positions;
  std::size_t line_no = 0;
  while (!content.empty()) {
    auto eol = content.find('\n');
    auto line = content.substr(0, eol);
    content = eol == std::string_view::npos ? std::string_view{}
                                            : content.substr(eol + 1);
    ++line_no;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' ||
                             line.back() == '\t'))
      line.remove_suffix(1);
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t'))
      line.remove_prefix(1);
    if (line.empty()) continue;

    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), value);
    if (ec != std::errc{} || ptr != line.data() + line.size())
      throw ValidationError("line " + std::to_string(line_no) +
                            ": not a decimal position: '" + std::string(line) + "'");
    positions.push_back(value);
  }
  return PositionSet(std::move(positions), n);
}

PositionSet load_positions(const std::filesystem::path& path, std::size_t n) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LoadError("cannot open positions file '" + path.string() + "'");
  std::string content((std::istreambuf_iterator<char>(in)),
                      std::istreambuf_iterator<char>());
  if (in.bad()) throw LoadError("read failure on '" + path.string() + "'");
  return parse_positions(content, n);
}

PositionSet sample_positions(std::size_t n, std::size_t b, std::uint64_t seed) {
  if (b < 1) throw ValidationError("sample size b must be >= 1");
  if (b > n)
    throw ValidationError("sample size b=" + std::to_string(b) +
                          " exceeds text length n=" + std::to_string(n));
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> out;
  out.reserve(b);
  if (b * 4 >= n) {
    // Dense draw: partial Fisher-Yates over [1, n].
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i + 1;
    for (std::size_t i = 0; i < b; ++i) {
      std::uniform_int_distribution<std::size_t> pick(i, n - 1);
      std::swap(all[i], all[pick(rng)]);
      out.push_back(all[i]);
    }
  } else {
    // Floyd's subset sampling.
    std::unordered_set<std::size_t> chosen;
    chosen.reserve(b * 2);
    for (std::size_t j = n - b + 1; j <= n; ++j) {
      std::uniform_int_distribution<std::size_t> pick(1, j);
      std::size_t t = pick(rng);
      std::size_t v = chosen.insert(t).second ? t : j;
      if (v == j) chosen.insert(j);
      out.push_back(v);
    }
  }
  return PositionSet(std::move(out), n);
}

Text random_text(std::size_t n, unsigned sigma, std::uint64_t seed) {
  if (sigma < 1 || sigma > 256)
    throw ValidationError("alphabet size must be in [1, 256]");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<unsigned> letter(0, sigma - 1);
  const unsigned base = sigma <= 26 ? 'a' : 0;
  std::vector<std::uint8_t> bytes(n);
  for (auto& c : bytes) c = static_cast<std::uint8_t>(base + letter(rng));
  return Text(std::move(bytes));
}

}  // namespace sparse_ssa
