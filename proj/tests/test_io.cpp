#include <doctest.h>

#include <random>
#include <sstream>

#include "sparse_ssa/errors.hpp"
#include "sparse_ssa/io.hpp"
#include "support.hpp"

using namespace sparse_ssa;

namespace {

SsaSlcp example() { return {ssa_test::kExampleSsa, ssa_test::kExampleSlcp}; }

}  // namespace

TEST_CASE("csv layout") {
  std::ostringstream out;
  write_csv(out, example());
  CHECK(out.str() == "ssa,slcp\n13,0\n1,2\n8,4\n11,1\n3,0\n10,2\n");
}

TEST_CASE("binary layout") {
  std::ostringstream out;
  write_bin(out, SsaSlcp{{13, 1}, {0, 2}}, 16);
  const std::string bytes = out.str();
  REQUIRE(bytes.size() == 4 + 8 + 8 + 2 * 16);
  CHECK(bytes.substr(0, 4) == "SSA1");
  CHECK(bytes[4] == 16);
  CHECK(bytes[12] == 2);
  CHECK(bytes[20] == 13);
  CHECK(bytes[36] == 1);
  CHECK(bytes[44] == 2);
  for (std::size_t i : {5u, 11u, 13u, 19u, 21u, 27u}) CHECK(bytes[i] == 0);
}

TEST_CASE("round trips reproduce the arrays") {
  std::mt19937_64 rng(1);
  for (int round = 0; round < 50; ++round) {
    SsaSlcp a;
    const std::size_t b = 1 + rng() % 100;
    for (std::size_t i = 0; i < b; ++i) {
      a.ssa.push_back(rng() >> (rng() % 64));
      a.slcp.push_back(i == 0 ? 0 : rng() >> (rng() % 64));
    }
    std::stringstream csv;
    write_csv(csv, a);
    CHECK(read_csv(csv) == a);

    std::stringstream bin;
    write_bin(bin, a, 12345);
    BinaryArrays back = read_bin(bin);
    CHECK(back.n == 12345);
    CHECK(back.arrays == a);
  }
}

TEST_CASE("malformed inputs") {
  std::istringstream no_header("13,0\n");
  CHECK_THROWS_AS(read_csv(no_header), ValidationError);
  std::istringstream bad_field("ssa,slcp\n13,x\n");
  CHECK_THROWS_AS(read_csv(bad_field), ValidationError);
  std::istringstream bad_magic("SSA2xxxxxxxxxxxxxxxx");
  CHECK_THROWS_AS(read_bin(bad_magic), ValidationError);

  std::ostringstream out;
  write_bin(out, example(), 16);
  std::istringstream truncated(out.str().substr(0, 40));
  CHECK_THROWS_AS(read_bin(truncated), ValidationError);
}
