#include "sparse_ssa/io.hpp"

#include <array>
#include <charconv>
#include <istream>
#include <ostream>
#include <string>

#include "sparse_ssa/errors.hpp"

namespace sparse_ssa {

namespace {

constexpr std::array<char, 4> kMagic{'S', 'S', 'A', '1'};

void put_u64(std::ostream& out, std::uint64_t v) {
  std::array<char, 8> bytes;
  for (std::size_t i = 0; i < 8; ++i)
    bytes[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  out.write(bytes.data(), bytes.size());
}

std::uint64_t get_u64(std::istream& in) {
  std::array<unsigned char, 8> bytes;
  if (!in.read(reinterpret_cast<char*>(bytes.data()), bytes.size()))
    throw ValidationError("binary arrays: truncated input");
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < 8; ++i) v |= std::uint64_t{bytes[i]} << (8 * i);
  return v;
}

std::size_t parse_field(std::string_view field, std::size_t line_no) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc{} || ptr != field.data() + field.size())
    throw ValidationError("csv line " + std::to_string(line_no) +
                          ": bad integer '" + std::string(field) + "'");
  return v;
}

}  // namespace

void write_csv(std::ostream& out, const SsaSlcp& arrays) {
  out << "ssa,slcp\n";
  for (std::size_t r = 0; r < arrays.size(); ++r)
    out << arrays.ssa[r] << ',' << arrays.slcp[r] << '\n';
}

SsaSlcp read_csv(std::istream& in) {
  SsaSlcp arrays;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line_no == 1) {
      if (line != "ssa,slcp")
        throw ValidationError("csv: expected header 'ssa,slcp'");
      continue;
    }
    if (line.empty()) continue;
    auto comma = line.find(',');
    if (comma == std::string::npos)
      throw ValidationError("csv line " + std::to_string(line_no) + ": missing comma");
    std::string_view view(line);
    arrays.ssa.push_back(parse_field(view.substr(0, comma), line_no));
    arrays.slcp.push_back(parse_field(view.substr(comma + 1), line_no));
  }
  if (line_no == 0) throw ValidationError("csv: empty input");
  return arrays;
}

void write_bin(std::ostream& out, const SsaSlcp& arrays, std::uint64_t n) {
  out.write(kMagic.data(), kMagic.size());
  put_u64(out, n);
  put_u64(out, arrays.size());
  for (std::size_t r = 0; r < arrays.size(); ++r) {
    put_u64(out, arrays.ssa[r]);
    put_u64(out, arrays.slcp[r]);
  }
}

BinaryArrays read_bin(std::istream& in) {
  std::array<char, 4> magic;
  if (!in.read(magic.data(), magic.size()) || magic != kMagic)
    throw ValidationError("binary arrays: bad magic (expected SSA1)");
  BinaryArrays result;
  result.n = get_u64(in);
  const std::uint64_t b = get_u64(in);
  for (std::uint64_t r = 0; r < b; ++r) {
    result.arrays.ssa.push_back(get_u64(in));
    result.arrays.slcp.push_back(get_u64(in));
  }
  return result;
}

}  // namespace sparse_ssa
