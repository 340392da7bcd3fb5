#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "rkmatch/bench.hpp"
#include "rkmatch/cli.hpp"
#include "rkmatch/datagen.hpp"
#include "rkmatch/hash.hpp"
#include "rkmatch/match.hpp"
#include "rkmatch/parallel.hpp"

namespace py = pybind11;

namespace {

// Accepts str or bytes; str is encoded as UTF-8.
std::string as_bytes(const py::object& obj) {
  if (py::isinstance<py::bytes>(obj)) {
    return obj.cast<std::string>();
  }
  if (py::isinstance<py::str>(obj)) {
    return obj.cast<std::string>();
  }
  if (py::isinstance<py::bytearray>(obj) || py::isinstance<py::memoryview>(obj)) {
    return py::bytes(obj).cast<std::string>();
  }
  throw py::type_error("expected bytes or str");
}

rk::Dim3 to_dim3(const std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>& t) {
  return {std::get<0>(t), std::get<1>(t), std::get<2>(t)};
}

py::tuple from_dim3(const rk::Dim3& d) { return py::make_tuple(d.x, d.y, d.z); }

}  // namespace

PYBIND11_MODULE(_rkmatch, m) {
  m.doc() = "Rabin-Karp exact string matching with a grid/block/thread parallel engine";

  py::register_exception<rk::bench::CorrectnessError>(m, "CorrectnessError", PyExc_RuntimeError);

  m.def("hash_full", [](const py::object& b) { return rk::hash_full(as_bytes(b)).value; },
        "Shift-add hash of a byte string", py::arg("data"));
  m.def(
      "hash_window",
      [](const py::object& text, std::size_t offset, std::size_t length) {
        return rk::hash_window(as_bytes(text), offset, length).value;
      },
      py::arg("text"), py::arg("offset"), py::arg("length"));
  m.def(
      "roll",
      [](std::uint64_t prev, unsigned char outgoing, unsigned char incoming, std::size_t length) {
        return rk::roll(rk::HashValue{prev}, outgoing, incoming, length).value;
      },
      py::arg("prev"), py::arg("outgoing"), py::arg("incoming"), py::arg("length"));

  py::class_<rk::MatchResult>(m, "MatchResult")
      .def_readonly("text_length", &rk::MatchResult::text_length)
      .def_readonly("pattern_length", &rk::MatchResult::pattern_length)
      .def_readonly("offsets", &rk::MatchResult::offsets)
      .def("to_bitmap", &rk::MatchResult::to_bitmap)
      .def("__eq__", [](const rk::MatchResult& a, const rk::MatchResult& b) { return a == b; })
      .def("__len__", [](const rk::MatchResult& r) { return r.offsets.size(); })
      .def("__repr__", [](const rk::MatchResult& r) {
        std::ostringstream os;
        os << "MatchResult(n=" << r.text_length << ", m=" << r.pattern_length
           << ", matches=" << r.offsets.size() << ")";
        return os.str();
      });

  py::class_<rk::SearchStats>(m, "SearchStats")
      .def(py::init<>())
      .def_readonly("windows", &rk::SearchStats::windows)
      .def_readonly("hash_hits", &rk::SearchStats::hash_hits)
      .def_readonly("verify_failures", &rk::SearchStats::verify_failures);

  m.def(
      "search_naive",
      [](const py::object& text, const py::object& pattern) {
        const std::string t = as_bytes(text);
        const std::string p = as_bytes(pattern);
        py::gil_scoped_release release;
        return rk::search_naive(t, p);
      },
      py::arg("text"), py::arg("pattern"));
  m.def(
      "search_sequential",
      [](const py::object& text, const py::object& pattern, rk::SearchStats* stats) {
        const std::string t = as_bytes(text);
        const std::string p = as_bytes(pattern);
        py::gil_scoped_release release;
        return rk::search_sequential(t, p, stats);
      },
      py::arg("text"), py::arg("pattern"), py::arg("stats") = nullptr);

  py::class_<rk::PatternSet>(m, "PatternSet")
      .def(py::init([](const py::list& patterns) {
             std::vector<std::string> v;
             for (const auto& p : patterns) {
               v.push_back(as_bytes(py::reinterpret_borrow<py::object>(p)));
             }
             return rk::PatternSet(std::move(v));
           }),
           py::arg("patterns"))
      .def("__len__", &rk::PatternSet::size)
      .def("__getitem__",
           [](const rk::PatternSet& s, std::size_t i) {
             if (i >= s.size()) throw py::index_error();
             return py::bytes(s[i]);
           })
      .def("by_length", &rk::PatternSet::by_length);

  m.def(
      "search_multi",
      [](const py::object& text, const rk::PatternSet& patterns, rk::SearchStats* stats) {
        const std::string t = as_bytes(text);
        py::gil_scoped_release release;
        return rk::search_multi(t, patterns, stats);
      },
      py::arg("text"), py::arg("patterns"), py::arg("stats") = nullptr);

  py::class_<rk::LaunchConfig>(m, "LaunchConfig")
      .def(py::init([](const std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>& grid,
                       std::uint32_t block_dim) {
             rk::LaunchConfig cfg{to_dim3(grid), block_dim};
             cfg.validate();
             return cfg;
           }),
           py::arg("grid"), py::arg("block_dim"))
      .def_property_readonly("grid", [](const rk::LaunchConfig& c) { return from_dim3(c.grid); })
      .def_readonly("block_dim", &rk::LaunchConfig::block_dim)
      .def_property_readonly("total_threads", &rk::LaunchConfig::total_threads)
      .def("__eq__", [](const rk::LaunchConfig& a, const rk::LaunchConfig& b) { return a == b; })
      .def("__repr__", [](const rk::LaunchConfig& c) {
        std::ostringstream os;
        os << "LaunchConfig(grid=(" << c.grid.x << ", " << c.grid.y << ", " << c.grid.z
           << "), block_dim=" << c.block_dim << ")";
        return os.str();
      });

  py::class_<rk::ThreadCoord>(m, "ThreadCoord")
      .def(py::init([](const std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>& block_idx,
                       std::uint32_t thread_idx) {
             return rk::ThreadCoord{to_dim3(block_idx), thread_idx};
           }),
           py::arg("block_idx"), py::arg("thread_idx"))
      .def_property_readonly("block_idx",
                             [](const rk::ThreadCoord& c) { return from_dim3(c.block_idx); })
      .def_readonly("thread_idx", &rk::ThreadCoord::thread_idx);

  m.def("offset_of", &rk::offset_of, py::arg("coord"), py::arg("cfg"));
  m.def("plan_launch", &rk::plan_launch, py::arg("n"), py::arg("m"), py::arg("block_dim"),
        py::arg("axis_cap") = rk::kDefaultAxisCap);
  m.def("hash_pattern_host",
        [](const py::object& p) { return rk::hash_pattern_host(as_bytes(p)).value; },
        py::arg("pattern"));
  m.def(
      "search_parallel",
      [](const py::object& text, const py::object& pattern, const rk::LaunchConfig& cfg,
         std::size_t workers, rk::SearchStats* stats) {
        const std::string t = as_bytes(text);
        const std::string p = as_bytes(pattern);
        py::gil_scoped_release release;
        return rk::search_parallel(t, p, cfg, workers, stats);
      },
      py::arg("text"), py::arg("pattern"), py::arg("cfg"), py::arg("workers") = 1,
      py::arg("stats") = nullptr);

  py::class_<rk::DnaSpec>(m, "DnaSpec")
      .def(py::init([](std::uint64_t seed, std::size_t length, const std::string& alphabet) {
             return rk::DnaSpec{seed, length, alphabet};
           }),
           py::arg("seed"), py::arg("length"), py::arg("alphabet") = "ACGT")
      .def_readwrite("seed", &rk::DnaSpec::seed)
      .def_readwrite("length", &rk::DnaSpec::length)
      .def_readwrite("alphabet", &rk::DnaSpec::alphabet);

  m.def(
      "generate",
      [](const rk::DnaSpec& spec) {
        std::string out;
        {
          py::gil_scoped_release release;
          out = rk::generate(spec);
        }
        return py::bytes(out);
      },
      py::arg("spec"));
  m.def(
      "plant",
      [](const py::object& text, const py::object& pattern, const std::vector<std::size_t>& offsets) {
        return py::bytes(rk::plant(as_bytes(text), as_bytes(pattern), offsets));
      },
      py::arg("text"), py::arg("pattern"), py::arg("offsets"));

  m.def("speedup", &rk::bench::speedup, py::arg("t_base_ms"), py::arg("t_par_ms"));
  m.def(
      "sweep",
      [](const std::string& axis, const std::vector<std::uint64_t>& values, std::uint64_t seed,
         std::size_t length, std::size_t pattern_length, std::size_t reps, std::size_t workers,
         std::uint32_t block_dim) {
        rk::bench::SweepParams params;
        params.corpus = rk::DnaSpec{seed, length, "ACGT"};
        params.pattern.length = pattern_length;
        params.reps = reps;
        params.workers = workers;
        params.block_dim = block_dim;
        const rk::bench::Axis a = rk::bench::parse_axis(axis);
        std::string dumped;
        {
          py::gil_scoped_release release;
          dumped = rk::bench::to_json(rk::bench::sweep(a, values, params)).dump();
        }
        return py::module_::import("json").attr("loads")(dumped);
      },
      "Run a timing sweep and return the JSON report as a dict", py::arg("axis"),
      py::arg("values"), py::arg("seed") = 42, py::arg("length") = std::size_t{2} << 20,
      py::arg("pattern_length") = 7, py::arg("reps") = 3, py::arg("workers") = 0,
      py::arg("block_dim") = 256);

  m.def(
      "cli_run",
      [](const std::vector<std::string>& args) {
        std::ostringstream out;
        std::ostringstream err;
        int code = 0;
        {
          py::gil_scoped_release release;
          code = rk::cli::run(args, out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
      },
      "Run the rkmatch command line in-process; returns (exit_code, stdout, stderr)",
      py::arg("args"));
}
