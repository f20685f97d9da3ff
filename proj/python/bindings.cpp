#include <optional>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sparse_ssa/driver.hpp"
#include "sparse_ssa/errors.hpp"
#include "sparse_ssa/fingerprint.hpp"
#include "sparse_ssa/oracle.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace sparse_ssa;

namespace {

Text to_text(const py::bytes& data) {
  return Text::from_string(static_cast<std::string>(data));
}

RunConfig make_config(std::uint64_t seed, std::optional<std::size_t> s,
                      std::optional<unsigned> j_start) {
  RunConfig cfg;
  cfg.seed = seed;
  cfg.samples = s;
  cfg.j_start_override = j_start;
  return cfg;
}

py::tuple arrays(const SsaSlcp& a) { return py::make_tuple(a.ssa, a.slcp); }

}  // namespace

PYBIND11_MODULE(_sparse_ssa, m) {
  m.doc() = "Sparse suffix array and sparse LCP array construction";

  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<ContractError>(m, "ContractError", PyExc_ValueError);

  m.def(
      "main_algo",
      [](const py::bytes& text, std::vector<std::size_t> positions, std::uint64_t seed,
         std::optional<std::size_t> s, std::optional<unsigned> j_start) {
        Text t = to_text(text);
        PositionSet p(std::move(positions), t.size());
        return arrays(main_algo(t, p, make_config(seed, s, j_start)));
      },
      "text"_a, "positions"_a, "seed"_a = 1, "s"_a = py::none(), "j_start"_a = py::none(),
      "main_algo(text, positions, seed=1, s=None, j_start=None) -> (ssa, slcp)");

  m.def(
      "parameterized_algo",
      [](const py::bytes& text, std::vector<std::size_t> positions, std::uint64_t seed,
         std::optional<std::size_t> s, std::optional<unsigned> j_start) {
        Text t = to_text(text);
        PositionSet p(std::move(positions), t.size());
        ParamResult r = parameterized_algo(t, p, make_config(seed, s, j_start));
        py::dict stats("ell"_a = r.stats.ell, "j_start"_a = r.stats.j_start,
                       "b_prime"_a = r.stats.b_prime,
                       "second_pass_ran"_a = r.stats.second_pass_ran,
                       "resorted_ranks"_a = r.stats.resorted_ranks);
        return py::make_tuple(r.arrays.ssa, r.arrays.slcp, stats);
      },
      "text"_a, "positions"_a, "seed"_a = 1, "s"_a = py::none(), "j_start"_a = py::none(),
      "parameterized_algo(...) -> (ssa, slcp, stats)");

  m.def(
      "naive_ssa_slcp",
      [](const py::bytes& text, std::vector<std::size_t> positions) {
        Text t = to_text(text);
        return arrays(naive_ssa_slcp(t, PositionSet(std::move(positions), t.size())));
      },
      "text"_a, "positions"_a);

  m.def(
      "compute_b_prime",
      [](const std::vector<std::size_t>& slcp, std::size_t ell) {
        return compute_b_prime(slcp, ell);
      },
      "slcp"_a, "ell"_a);

  m.def(
      "sample_positions",
      [](std::size_t n, std::size_t b, std::uint64_t seed) {
        PositionSet p = sample_positions(n, b, seed);
        return std::vector<std::size_t>(p.positions().begin(), p.positions().end());
      },
      "n"_a, "b"_a, "seed"_a);

  m.def(
      "fingerprint",
      [](const py::bytes& text, std::size_t pos, std::size_t length, std::size_t s,
         std::uint64_t seed) {
        Text t = to_text(text);
        FingerprintIndex idx(t, s, seed);
        Fingerprint fp = idx.fingerprint(pos, length);
        return py::make_tuple(fp.value, fp.window_len, idx.base());
      },
      "text"_a, "pos"_a, "length"_a, "s"_a = 1, "seed"_a = 1,
      "fingerprint(text, pos, length, s=1, seed=1) -> (value, window_len, base)");
}
