// Python module _rectcolor: thin wrappers over the C++ library. Exact numbers
// cross the boundary as canonical strings; the package turns them into Fractions.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <string>
#include <variant>

#include "rectcolor/cliques.hpp"
#include "rectcolor/coloring.hpp"
#include "rectcolor/errors.hpp"
#include "rectcolor/hierarchy.hpp"
#include "rectcolor/io.hpp"
#include "rectcolor/mwisr.hpp"
#include "rectcolor/oracles.hpp"

namespace py = pybind11;
using namespace rectcolor;

namespace {

using Number = std::variant<long long, std::string>;

Scalar to_scalar(const Number& v) {
  if (auto i = std::get_if<long long>(&v)) return Scalar(std::to_string(*i));
  return parse_scalar(std::get<std::string>(v));
}

Instance make_instance(const std::vector<py::tuple>& items) {
  std::vector<Rect> rects;
  for (const py::tuple& t : items) {
    if (t.size() != 5 && t.size() != 6) throw std::invalid_argument("expected (id, x1, y1, x2, y2[, weight])");
    Rect r;
    r.id = t[0].cast<std::string>();
    r.x_lo = to_scalar(t[1].cast<Number>());
    r.y_lo = to_scalar(t[2].cast<Number>());
    r.x_hi = to_scalar(t[3].cast<Number>());
    r.y_hi = to_scalar(t[4].cast<Number>());
    if (t.size() == 6) r.weight = to_scalar(t[5].cast<Number>());
    rects.push_back(std::move(r));
  }
  return Instance(std::move(rects));
}

std::vector<std::string> ids_of(const Instance& inst, const std::vector<int>& idx) {
  std::vector<std::string> out;
  for (int i : idx) out.push_back(inst.rect(i).id);
  return out;
}

Coloring run(const Instance& inst, const std::string& algo) {
  const auto all = inst.all_indices();
  if (algo == "hier") return hierarchical_coloring(inst);
  if (algo == "agb") return agb_coloring(inst, all);
  if (algo == "corner") return corner_coloring(inst, all);
  if (algo == "sparse") return degeneracy_greedy(inst, all);
  if (algo == "warmup-cc") return warmup_color_cc(inst, all);
  if (algo == "warmup-vertical") return warmup_color_vertical(inst, all);
  throw std::invalid_argument("unknown algorithm '" + algo + "'");
}

Coloring from_map(const Instance& inst, const std::map<std::string, int>& colors) {
  Coloring c;
  c.color.assign(inst.size(), -1);
  for (const auto& [id, color] : colors) {
    auto idx = inst.index_of(id);
    if (!idx) throw UnknownId("unknown rectangle id '" + id + "'");
    c.color[*idx] = color;
  }
  return c;
}

py::object pair_or_none(const Instance& inst, const Violation& v) {
  if (!v) return py::none();
  return py::make_tuple(inst.rect(v->first).id, inst.rect(v->second).id);
}

}  // namespace

PYBIND11_MODULE(_rectcolor, m) {
  m.doc() = "Coloring and weighted packing of axis-parallel rectangles.";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<PreconditionViolated>(m, "PreconditionViolated", base.ptr());
  py::register_exception<InternalBoundExceeded>(m, "InternalBoundExceeded", base.ptr());
  py::register_exception<SolverFailure>(m, "SolverFailure", base.ptr());
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<ValidationError>(m, "ValidationError", base.ptr());
  py::register_exception<MissingAssignment>(m, "MissingAssignment", base.ptr());
  py::register_exception<UnknownId>(m, "UnknownId", base.ptr());

  py::class_<Instance>(m, "Instance")
      .def(py::init(&make_instance), py::arg("rects"),
           "Rectangles as (id, x1, y1, x2, y2[, weight]); numbers are ints or exact strings.")
      .def("__len__", &Instance::size)
      .def_property_readonly("ids", [](const Instance& inst) {
        std::vector<std::string> out;
        for (const Rect& r : inst.rects()) out.push_back(r.id);
        return out;
      })
      .def("rect", [](const Instance& inst, int i) {
        const Rect& r = inst.rect(i);
        return py::make_tuple(r.id, to_string(r.x_lo), to_string(r.y_lo), to_string(r.x_hi),
                              to_string(r.y_hi), to_string(r.weight));
      })
      .def("adjacent", &Instance::adjacent)
      .def_property_readonly("heights_distinct", &Instance::heights_distinct);

  m.def("generate", [](const std::string& kind, int n, std::uint64_t seed, long grid, const std::string& weights) {
    GeneratorSpec spec;
    spec.kind = parse_generator_kind(kind);
    spec.n = n;
    spec.seed = seed;
    spec.grid = grid;
    spec.weights = weights == "random" ? WeightMode::UniformRandom : WeightMode::Unit;
    return generate(spec);
  }, py::arg("kind"), py::arg("n"), py::arg("seed"), py::arg("grid") = 10000, py::arg("weights") = "unit");

  m.def("load", [](const std::string& path, bool drop_zero) {
    return load_instance(path, {.drop_zero_weights = drop_zero});
  }, py::arg("path"), py::arg("drop_zero_weights") = false);
  m.def("loads", [](const std::string& text, bool drop_zero) {
    return parse_instance(text, {.drop_zero_weights = drop_zero});
  }, py::arg("text"), py::arg("drop_zero_weights") = false);
  m.def("save", &save_instance, py::arg("instance"), py::arg("path"));
  m.def("dumps", &dump_instance, py::arg("instance"));

  m.def("perturb", &perturb, py::arg("instance"));
  m.def("clique_number", [](const Instance& inst) { return clique_number(inst); }, py::arg("instance"));
  m.def("maximal_cliques", [](const Instance& inst) {
    std::vector<std::vector<std::string>> out;
    for (const Clique& c : maximal_cliques(inst).cliques) out.push_back(ids_of(inst, c.members));
    return out;
  }, py::arg("instance"));

  m.def("color", [](const Instance& inst, const std::string& algo) {
    const Instance p = perturb(inst);
    const Coloring c = run(p, algo);
    std::map<std::string, int> colors;
    for (int i = 0; i < p.size(); ++i) colors[p.rect(i).id] = c.color[i];
    return py::dict(py::arg("algorithm") = algo, py::arg("num_colors") = c.num_colors,
                    py::arg("omega") = clique_number(p), py::arg("colors") = colors);
  }, py::arg("instance"), py::arg("algo") = "hier", "Perturbs, then colors with the named algorithm.");

  m.def("approximate_mwis", [](const Instance& inst, double feas_tol, double opt_tol) {
    const ApproxResult r = approximate_mwis(inst, feas_tol, opt_tol);
    return py::dict(py::arg("chosen") = ids_of(inst, r.chosen), py::arg("weight") = to_string(r.weight),
                    py::arg("w_star") = to_string(r.w_star), py::arg("m") = r.m,
                    py::arg("num_colors") = r.multiset_colors,
                    py::arg("certified_lower_bound") = to_string(r.certified_lower_bound));
  }, py::arg("instance"), py::arg("feas_tol") = kDefaultFeasTol, py::arg("opt_tol") = kDefaultOptTol);

  m.def("exact_mwis", [](const Instance& inst) {
    const MwisSolution s = exact_mwis(inst);
    return py::make_tuple(ids_of(inst, s.chosen), to_string(s.weight));
  }, py::arg("instance"));

  m.def("validate_coloring", [](const Instance& inst, const std::map<std::string, int>& colors) {
    return pair_or_none(inst, validate_coloring(inst, from_map(inst, colors)));
  }, py::arg("instance"), py::arg("colors"), "None when proper, else one clashing pair of ids.");

  m.def("validate_independent", [](const Instance& inst, const std::vector<std::string>& ids) {
    return pair_or_none(inst, validate_independent(inst, std::span<const std::string>(ids)));
  }, py::arg("instance"), py::arg("ids"));

  m.def("render_svg", [](const Instance& inst, std::optional<std::map<std::string, int>> colors,
                         std::optional<std::vector<std::string>> highlight) {
    std::optional<Coloring> c;
    if (colors) c = from_map(inst, *colors);
    std::vector<int> marked;
    if (highlight)
      for (const auto& id : *highlight) {
        auto idx = inst.index_of(id);
        if (!idx) throw UnknownId("unknown rectangle id '" + id + "'");
        marked.push_back(*idx);
      }
    return render_svg(inst, c ? &*c : nullptr, marked);
  }, py::arg("instance"), py::arg("colors") = py::none(), py::arg("highlight") = py::none());
}
