#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "seeds/factorization.hpp"
#include "seeds/predicates.hpp"
#include "seeds/seeds.hpp"

namespace py = pybind11;
using namespace seeds;

namespace {

// str is encoded as UTF-8 bytes; a list of ints is a token text.
using Input = std::variant<py::bytes, std::string, std::vector<Symbol>>;

Text to_text(const Input& in) {
  if (const auto* b = std::get_if<py::bytes>(&in)) return Text::from_bytes(std::string(*b));
  if (const auto* s = std::get_if<std::string>(&in)) return Text::from_bytes(*s);
  return Text(std::get<std::vector<Symbol>>(in));
}

std::vector<Symbol> symbols_of(const Input& in) {
  const Text t = to_text(in);
  return {t.symbols().begin(), t.symbols().end()};
}

std::optional<Pos> gap_or_none(Pos q) {
  if (!is_finite(q)) return std::nullopt;
  return q;
}

struct PyAnalysis {
  std::shared_ptr<const Analysis> a;
  SeedSet seeds;

  explicit PyAnalysis(const Input& in) {
    Text t = to_text(in);
    py::gil_scoped_release release;
    a = std::make_shared<Analysis>(std::move(t));
    seeds = a->all_seeds();
  }

  std::vector<py::dict> quasigaps() const {
    const InducedTree& tr = a->tree();
    std::vector<py::dict> rows;
    for (NodeId v = 1; v < tr.size(); ++v) {
      const Pos len = tr.word_length(v);
      const Pos plen = tr.word_length(tr.parent(v));
      if (len == plen) continue;
      py::dict row;
      row["node"] = v;
      row["pos"] = tr.first(v);
      row["len"] = len;
      row["parent"] = plen;
      row["count"] = tr.count(v);
      row["quasigap"] = gap_or_none(a->quasigaps()[v]);
      rows.push_back(std::move(row));
    }
    return rows;
  }

  std::vector<std::pair<Pos, Pos>> enumerate(std::int64_t limit) const {
    std::vector<std::pair<Pos, Pos>> out;
    seeds.enumerate([&](Pos pos, Pos len) {
      if (limit >= 0 && static_cast<std::int64_t>(out.size()) >= limit) return false;
      out.emplace_back(pos, len);
      return true;
    });
    return out;
  }
};

}  // namespace

PYBIND11_MODULE(_pyseeds, m) {
  m.doc() = "All seeds and shortest seeds of a word in linear time. Positions are 1-based.";

  py::class_<SeedRange>(m, "SeedRange")
      .def_readonly("node", &SeedRange::node)
      .def_readonly("pos", &SeedRange::pos)
      .def_readonly("lo", &SeedRange::lo)
      .def_readonly("hi", &SeedRange::hi)
      .def("__repr__", [](const SeedRange& r) {
        return "SeedRange(node=" + std::to_string(r.node) + ", pos=" + std::to_string(r.pos) +
               ", lo=" + std::to_string(r.lo) + ", hi=" + std::to_string(r.hi) + ")";
      });

  py::class_<PyAnalysis>(m, "Analysis")
      .def(py::init<const Input&>(), py::arg("text"))
      .def_property_readonly("n", [](const PyAnalysis& p) { return p.a->text().size(); })
      .def_property_readonly("seed_count", [](const PyAnalysis& p) { return p.seeds.count(); })
      .def("seed_ranges", [](const PyAnalysis& p) { return p.seeds.ranges(); })
      .def("seeds", &PyAnalysis::enumerate, py::arg("limit") = -1,
           "Seeds as (pos, len) pairs, at most `limit` of them when limit >= 0.")
      .def("shortest_seed", [](const PyAnalysis& p) { return p.seeds.shortest(); })
      .def("all_shortest", [](const PyAnalysis& p) { return p.seeds.all_shortest(); })
      .def("quasigaps", &PyAnalysis::quasigaps);

  m.def("all_seeds", [](const Input& in) { return PyAnalysis(in).enumerate(-1); }, py::arg("text"));
  m.def("shortest_seed", [](const Input& in) { return PyAnalysis(in).seeds.shortest(); },
        py::arg("text"));
  m.def("quasigaps", [](const Input& in) { return PyAnalysis(in).quasigaps(); }, py::arg("text"));
  m.def(
      "factorize",
      [](const Input& in) {
        const Text t = to_text(in);
        std::vector<std::pair<Pos, Pos>> out;
        for (const Factor& f : f_factorize(t, t.whole())) out.emplace_back(f.start, f.length);
        return out;
      },
      py::arg("text"));
  m.def("is_cover", [](const Input& v, const Input& w) { return is_cover(symbols_of(v), to_text(w)); },
        py::arg("v"), py::arg("w"));
  m.def("is_seed", [](const Input& v, const Input& w) { return is_seed(symbols_of(v), to_text(w)); },
        py::arg("v"), py::arg("w"));
  m.def("is_quasiseed",
        [](const Input& v, const Input& w) { return is_quasiseed(symbols_of(v), to_text(w)); },
        py::arg("v"), py::arg("w"));

  py::register_exception<TextError>(m, "TextError", PyExc_ValueError);
}
