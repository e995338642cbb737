#include "phtype/acceptance.hpp"
#include "phtype/catalog.hpp"
#include "phtype/check.hpp"
#include "phtype/extension.hpp"
#include "phtype/morphism.hpp"
#include "phtype/obstruction.hpp"
#include "phtype/serialize.hpp"
#include "phtype/sums.hpp"
#include "phtype/tables.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace phtype;

namespace {

ExactVector to_vector(const Algebra& a, const std::vector<long>& x) {
    if (static_cast<int>(x.size()) != a.dim_v()) throw std::invalid_argument("vector length must equal dim_v");
    ExactVector v(x.size());
    for (size_t i = 0; i < x.size(); ++i) v[i] = x[i];
    return v;
}

py::tuple verdict(const VerifyResult& r) { return py::make_tuple(r.ok, r.witness); }

}  // namespace

PYBIND11_MODULE(_phtype, m) {
    py::register_exception<UnsupportedSignature>(m, "UnsupportedSignature", PyExc_ValueError);

    py::class_<Algebra, std::shared_ptr<Algebra>>(m, "Algebra")
        .def_property_readonly("signature", [](const Algebra& a) { return py::make_tuple(a.r(), a.s()); })
        .def_property_readonly("dim_v", &Algebra::dim_v)
        .def_property_readonly("dim_z", &Algebra::dim_z)
        .def_property_readonly("module_metric", &Algebra::module_metric)
        .def_property_readonly("v_labels", &Algebra::v_labels)
        .def_property_readonly("z_labels", &Algebra::z_labels)
        .def_property_readonly("name", [](const Algebra& a) { return algebra_name(a); })
        .def("bracket",
             [](const Algebra& a, int i, int j) -> py::object {
                 if (i < 1 || j < 1 || i > a.dim_v() || j > a.dim_v()) throw py::index_error("basis index out of range");
                 auto b = a.basis_bracket(i - 1, j - 1);
                 if (!b) return py::none();
                 return py::make_tuple(b->first + 1, b->second);
             },
             "[v_i, v_j] as (k, sign), 1-based; None when zero")
        .def("checksum", [](const Algebra& a) { return tensor_checksum(a); })
        .def("to_json", [](const Algebra& a) { return algebra_to_json(a).dump(); })
        .def("__repr__", [](const Algebra& a) { return "<Algebra " + algebra_name(a) + ">"; });

    auto cast = [](const AlgebraPtr& a) { return std::const_pointer_cast<Algebra>(a); };

    m.def("catalog_ids", [] {
        std::vector<std::pair<int, int>> out;
        for (auto id : catalog_ids()) out.emplace_back(id.pos, id.neg);
        return out;
    });
    m.def("base_algebra", [cast](int r, int s) { return cast(base_algebra({r, s})); });
    m.def("construct", [cast](int r, int s) { return cast(construct(r, s)); });
    m.def("extend", [cast](const std::shared_ptr<Algebra>& a, const std::string& step) { return cast(extend(a, parse_step(step))); });
    m.def("build_sum", [cast](const std::shared_ptr<Algebra>& a, int mu, int nu) { return cast(build_sum(a, mu, nu)); });
    m.def("from_json", [cast](const std::string& text) { return cast(algebra_from_json(Json::parse(text))); });
    m.def("min_module_dim", &min_module_dim);

    m.def("verify_axioms", [](const Algebra& a) { return verdict(verify_axioms(a)); });
    m.def("verify_clifford", [](const Algebra& a) { return verdict(verify_clifford(a)); });
    m.def("verify_admissible", [](const Algebra& a) { return verdict(verify_admissible(a)); });
    m.def("verify_htype", [](const Algebra& a) { return verdict(verify_htype(a)); });

    m.def("render_table", [](const Algebra& a, const std::string& f) { return render_table(a, parse_table_format(f)); },
          py::arg("a"), py::arg("format") = "md");
    m.def("render_j_table", [](const Algebra& a, const std::string& f) { return render_j_table(a, parse_table_format(f)); },
          py::arg("a"), py::arg("format") = "md");

    m.def("gram_det", [](const Algebra& a, const std::vector<long>& x) { return gram_det(a, to_vector(a, x)).get_str(); });
    m.def("adjoint_rank", [](const Algebra& a, const std::vector<long>& x) {
        return exact_rank(adjoint_matrix(a, to_vector(a, x)).m);
    });

    m.def("canonical_iso", [](const std::shared_ptr<Algebra>& a) -> py::object {
        auto f = canonical_iso(a);
        if (!f) return py::none();
        return py::str(morphism_to_json(*f).dump());
    });
    m.def("check",
          [](int r1, int s1, int r2, int s2, bool aut, bool anti, std::uint64_t seed) {
              auto c = check_isomorphism({r1, s1}, {r2, s2}, CheckOptions{aut, anti, seed});
              return py::make_tuple(certificate_to_json(c).dump(), exit_code(c));
          },
          py::arg("r1"), py::arg("s1"), py::arg("r2"), py::arg("s2"), py::arg("automorphism") = false,
          py::arg("anti") = false, py::arg("seed") = 1);
    m.def("sbg",
          [](const std::shared_ptr<Algebra>& a, int samples, std::uint64_t seed) {
              auto c = a->provenance().kind == Provenance::Kind::SUM ? sum_sbg(a, samples, seed)
                                                                      : sbg_decision(a, samples, seed);
              return certificate_to_json(c).dump();
          },
          py::arg("a"), py::arg("samples") = 100, py::arg("seed") = 1);

    m.def("run_acceptance",
          [](bool quick, std::uint64_t seed) {
              AcceptanceOptions opt;
              opt.quick = quick;
              opt.seed = seed;
              py::list out;
              for (const auto& r : run_acceptance(opt)) {
                  py::dict d;
                  d["criterion"] = r.id;
                  d["title"] = r.title;
                  d["pass"] = r.ok;
                  d["detail"] = r.detail;
                  d["seconds"] = r.seconds;
                  d["line"] = format_result(r);
                  out.append(d);
              }
              return out;
          },
          py::arg("quick") = false, py::arg("seed") = 1);
}
