#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "modtop/classes.hpp"
#include "modtop/errors.hpp"
#include "modtop/harness.hpp"
#include "modtop/hom.hpp"
#include "modtop/labels.hpp"
#include "modtop/lattice.hpp"
#include "modtop/space.hpp"

namespace py = pybind11;
using namespace modtop;

namespace {

ClassName class_of(const std::string& s) {
    std::optional<ClassName> c = parse_class(s);
    if (!c) throw input_error("unknown class name: " + s);
    return *c;
}

/// nlohmann -> native python containers, so callers get plain dicts/lists.
/// The handle is deliberately leaked: a static py::object would be destroyed
/// after interpreter finalization.
py::object to_py(const nlohmann::ordered_json& j) {
    static py::handle loads = py::object(py::module_::import("json").attr("loads")).release();
    return loads(j.dump());
}

LatticePtr lattice_of(unsigned ring, const std::vector<unsigned>& orders, unsigned max_elements,
                      unsigned max_submodules) {
    return enumerate_submodules(make_module(make_ring(ring), orders),
                                Caps{max_elements, max_submodules});
}

py::object submodules(unsigned ring, const std::vector<unsigned>& orders, unsigned max_elements,
                      unsigned max_submodules) {
    LatticePtr lat = lattice_of(ring, orders, max_elements, max_submodules);
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (int i = 0; i < lat->size(); ++i) {
        nlohmann::ordered_json s;
        s["id"] = i;
        s["label"] = submodule_label(*lat, i);
        s["order"] = lat->subs[i].count();
        nlohmann::ordered_json cl;
        for (ClassName c : all_classes()) cl[to_string(c)] = is_in_class(*lat, i, c);
        s["classes"] = cl;
        arr.push_back(s);
    }
    return to_py(arr);
}

py::object space_report(unsigned ring, const std::vector<unsigned>& orders,
                        const std::string& cls, unsigned max_elements, unsigned max_submodules) {
    LatticePtr lat = lattice_of(ring, orders, max_elements, max_submodules);
    StructureSpace sp = build_space(lat, class_of(cls));
    SeparationReport sep = separation_report(sp);
    TopReport top = is_top_module(sp);
    nlohmann::ordered_json s;
    nlohmann::ordered_json pts = nlohmann::ordered_json::array();
    for (int p = 0; p < sp.point_count(); ++p) {
        nlohmann::ordered_json e;
        e["id"] = sp.points[p];
        e["label"] = submodule_label(*lat, sp.points[p]);
        pts.push_back(e);
    }
    s["points"] = pts;
    s["separation"] = {{"t0", sep.t0}, {"t1", sep.t1}, {"sober", sep.sober}};
    s["spectral"] = is_spectral(sp);
    s["connected"] = is_connected(sp);
    nlohmann::ordered_json tj;
    tj["is_top"] = top.is_top;
    if (top.witness)
        tj["witness"] = {submodule_label(*lat, top.witness->first),
                         submodule_label(*lat, top.witness->second)};
    s["top"] = tj;
    auto sd = strongly_disconnects(sp);
    if (sd) {
        nlohmann::ordered_json a = nlohmann::ordered_json::array();
        nlohmann::ordered_json b = nlohmann::ordered_json::array();
        for (std::size_t p : sd->first.bits()) a.push_back(p);
        for (std::size_t p : sd->second.bits()) b.push_back(p);
        s["strong_disconnection"] = {{"a", a}, {"b", b}};
    } else {
        s["strong_disconnection"] = nullptr;
    }
    return to_py(s);
}

py::object verify(std::optional<unsigned> ring, std::optional<std::vector<unsigned>> orders,
                  const std::string& cls, std::uint64_t seed, unsigned max_elements,
                  unsigned max_submodules) {
    harness::Corpus corpus;
    if (ring) {
        corpus.modules = {{*ring, orders ? *orders : std::vector<unsigned>{*ring}}};
        corpus.include_homs = false;
    } else {
        if (orders) throw input_error("orders given without a ring");
        corpus = harness::default_corpus();
    }
    corpus.seed = seed;
    corpus.caps = Caps{max_elements, max_submodules};
    if (cls != "all") corpus.only_class = class_of(cls);
    return to_py(harness::report_json(harness::run_all(corpus), corpus));
}

py::object hom_report(unsigned ring, const std::vector<unsigned>& src_orders,
                      const std::vector<unsigned>& dst_orders,
                      const std::vector<std::vector<unsigned>>& images, const std::string& cls,
                      unsigned max_elements, unsigned max_submodules) {
    Ring rg = make_ring(ring);
    Module src = make_module(rg, src_orders);
    Module dst = make_module(rg, dst_orders);
    Hom h = make_hom(src, dst, std::vector<Element>(images.begin(), images.end()));
    Caps caps{max_elements, max_submodules};
    LatticePtr src_lat = enumerate_submodules(src, caps);
    LatticePtr dst_lat = enumerate_submodules(dst, caps);
    ConmapReport rep = verify_conmap(h, class_of(cls), src_lat, dst_lat);
    nlohmann::ordered_json r;
    r["well_defined"] = rep.well_defined;
    r["surjective"] = rep.surjective;
    r["injective"] = h.is_injective();
    r["kernel"] = submodule_label(*src_lat, src_lat->id_of(kernel(h)));
    r["image"] = submodule_label(*dst_lat, dst_lat->id_of(image(h)));
    nlohmann::ordered_json con;
    con["holds"] = rep.contraction.holds;
    if (rep.contraction.witness)
        con["witness"] = submodule_label(*dst_lat, *rep.contraction.witness);
    r["contraction"] = con;
    nlohmann::ordered_json ids = nlohmann::ordered_json::array();
    for (const auto& ic : rep.identities) {
        nlohmann::ordered_json e;
        e["name"] = ic.name;
        e["applicable"] = ic.applicable;
        e["holds"] = ic.holds;
        if (!ic.witness.empty()) e["witness"] = ic.witness;
        ids.push_back(e);
    }
    r["identities"] = ids;
    if (rep.contraction.holds) r["dense"] = rep.dense;
    return to_py(r);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "finite module structure spaces: lattices, classes, topology, verification";
    m.attr("__version__") = "0.1.0";

    py::register_exception<input_error>(m, "InputError", PyExc_ValueError);
    py::register_exception<cap_error>(m, "CapError", PyExc_RuntimeError);

    m.def("class_names", [] {
        std::vector<std::string> names;
        for (ClassName c : all_classes()) names.push_back(to_string(c));
        return names;
    });
    m.def("submodules", &submodules, py::arg("ring"), py::arg("orders"),
          py::arg("max_elements") = Caps{}.max_elements,
          py::arg("max_submodules") = Caps{}.max_submodules,
          "submodule lattice with class membership per submodule");
    m.def("space_report", &space_report, py::arg("ring"), py::arg("orders"), py::arg("cls"),
          py::arg("max_elements") = Caps{}.max_elements,
          py::arg("max_submodules") = Caps{}.max_submodules,
          "topological report of one structure space");
    m.def("verify", &verify, py::arg("ring") = std::nullopt, py::arg("orders") = std::nullopt,
          py::arg("cls") = "all", py::arg("seed") = 0,
          py::arg("max_elements") = Caps{}.max_elements,
          py::arg("max_submodules") = Caps{}.max_submodules,
          "run the statement suite on the default corpus or one module");
    m.def("hom_report", &hom_report, py::arg("ring"), py::arg("src"), py::arg("dst"),
          py::arg("images"), py::arg("cls"), py::arg("max_elements") = Caps{}.max_elements,
          py::arg("max_submodules") = Caps{}.max_submodules,
          "induced-map verification for one homomorphism");
}
