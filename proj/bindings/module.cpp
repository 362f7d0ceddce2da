#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "facelim/higher_limits.hpp"
#include "facelim/models.hpp"
#include "facelim/report.hpp"
#include "facelim/stanley_reisner.hpp"
#include "facelim/version.hpp"

namespace py = pybind11;
using namespace facelim;

namespace {

Face face_from_labels(const SimplicialComplex& k, const std::vector<std::string>& labels) {
    std::vector<int> idx;
    for (const auto& lab : labels) {
        auto it = std::find(k.labels().begin(), k.labels().end(), lab);
        if (it == k.labels().end()) throw InputError("unknown vertex label '" + lab + "'");
        idx.push_back(static_cast<int>(it - k.labels().begin()));
    }
    return Face::from_indices(idx);
}

std::vector<std::string> face_to_labels(const SimplicialComplex& k, const Face& f) {
    std::vector<std::string> out;
    for (int v : f.vertices()) out.push_back(k.labels()[v]);
    return out;
}

std::vector<std::vector<std::string>> faces_to_labels(const SimplicialComplex& k, const std::vector<Face>& faces) {
    std::vector<std::vector<std::string>> out;
    for (const Face& f : faces) out.push_back(face_to_labels(k, f));
    return out;
}

py::dict summary_dict(const ModuleSummary& s, const CoefficientDomain& dom) {
    py::dict out;
    out["free_rank"] = s.free_rank;
    py::list torsion;
    for (const auto& d : s.torsion) torsion.append(py::int_(py::str(d.get_str())));
    out["torsion"] = torsion;
    out["display"] = s.str(dom);
    return out;
}

py::tuple check_tuple(const CheckResult& r) { return py::make_tuple(r.pass, r.witness); }

ExactMatrix matrix_from_rows(const std::vector<std::vector<long>>& rows, const std::string& domain) {
    return ExactMatrix::from_rows(CoefficientDomain::parse(domain), rows);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact Stanley-Reisner / face-diagram limit calculator";
    m.attr("__version__") = kVersion;

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);

    py::class_<SimplicialComplex>(m, "SimplicialComplex")
        .def_static("from_facets", &SimplicialComplex::from_facets, py::arg("vertices"), py::arg("facets"))
        .def_static("simplex", &SimplicialComplex::simplex, py::arg("m"))
        .def_property_readonly("vertices", &SimplicialComplex::labels)
        .def_property_readonly("face_count", &SimplicialComplex::face_count)
        .def_property_readonly("dim", &SimplicialComplex::dim)
        .def("faces", [](const SimplicialComplex& k) { return faces_to_labels(k, k.faces()); })
        .def("facets", [](const SimplicialComplex& k) { return faces_to_labels(k, k.facets()); })
        .def("has_face",
             [](const SimplicialComplex& k, const std::vector<std::string>& f) {
                 return k.has_face(face_from_labels(k, f));
             })
        .def("link",
             [](const SimplicialComplex& k, const std::vector<std::string>& f) {
                 return link(k, face_from_labels(k, f));
             })
        .def("boundary_of_face",
             [](const SimplicialComplex& k, const std::vector<std::string>& f) {
                 return boundary_of_face(k, face_from_labels(k, f));
             })
        .def("delete_maximal",
             [](const SimplicialComplex& k, const std::vector<std::string>& f) {
                 return delete_maximal(k, face_from_labels(k, f));
             })
        .def("minimal_nonfaces",
             [](const SimplicialComplex& k) { return faces_to_labels(k, minimal_nonfaces(k)); })
        .def("flag_count",
             [](const SimplicialComplex& k, int n) { return static_cast<long>(flags(k, n).size()); })
        .def("__repr__", [](const SimplicialComplex& k) {
            return "<SimplicialComplex on " + std::to_string(k.vertex_count()) + " vertices, " +
                   std::to_string(k.face_count()) + " faces>";
        });

    // exact linear algebra on integer row lists
    m.def(
        "rank",
        [](const std::vector<std::vector<long>>& rows, const std::string& domain) {
            return rank(matrix_from_rows(rows, domain));
        },
        py::arg("rows"), py::arg("domain") = "Q");
    m.def(
        "kernel_rank",
        [](const std::vector<std::vector<long>>& rows, const std::string& domain) {
            return static_cast<long>(kernel_basis(matrix_from_rows(rows, domain)).cols());
        },
        py::arg("rows"), py::arg("domain") = "Q");
    m.def(
        "smith_normal_form",
        [](const std::vector<std::vector<long>>& rows) {
            SmithResult s = smith_normal_form(matrix_from_rows(rows, "Z"));
            py::list factors;
            for (const auto& d : s.invariant_factors) factors.append(py::int_(py::str(d.get_str())));
            return factors;
        },
        py::arg("rows"), "invariant factors of an integer matrix");

    // Stanley-Reisner data
    m.def(
        "hilbert_function",
        [](const SimplicialComplex& k, int j) {
            return hilbert_function({k, CoefficientDomain::rationals()}, j);
        },
        py::arg("k"), py::arg("j"));
    m.def(
        "hilbert_series",
        [](const SimplicialComplex& k) {
            return hilbert_series({k, CoefficientDomain::rationals()}).reduced().str();
        },
        py::arg("k"));
    m.def(
        "sr_basis",
        [](const SimplicialComplex& k, int j) {
            std::vector<std::string> out;
            for (const MultiSet& ms : basis({k, CoefficientDomain::rationals()}, j))
                out.push_back(ms.monomial(k.labels()));
            return out;
        },
        py::arg("k"), py::arg("j"));

    // limits and the collapse machinery
    m.def(
        "limit_rank",
        [](const SimplicialComplex& k, int j, const std::string& domain) {
            return limit(exp_cohomology_diagram(k, j, CoefficientDomain::parse(domain)).contra).rank();
        },
        py::arg("k"), py::arg("j"), py::arg("domain") = "Q");
    m.def(
        "higher_limit",
        [](const SimplicialComplex& k, int j, int i, const std::string& domain) {
            CoefficientDomain dom = CoefficientDomain::parse(domain);
            return summary_dict(higher_limit(exp_cohomology_diagram(k, j, dom).contra, i), dom);
        },
        py::arg("k"), py::arg("j"), py::arg("i"), py::arg("domain") = "Q");
    m.def(
        "bk_table",
        [](const SimplicialComplex& k, int i_max, int j_max, const std::string& domain) {
            CoefficientDomain dom = CoefficientDomain::parse(domain);
            E2Table t = bk_e2_table(k, dom, i_max, j_max);
            py::dict out;
            for (const auto& [key, value] : t.entries)
                out[py::make_tuple(key.first, key.second)] = summary_dict(value, dom);
            return out;
        },
        py::arg("k"), py::arg("i_max"), py::arg("j_max"), py::arg("domain") = "Q");
    m.def(
        "verify_sharpness",
        [](const SimplicialComplex& k, int i_max, int j_max, const std::string& domain) {
            return check_tuple(verify_sharpness(k, CoefficientDomain::parse(domain), i_max, j_max));
        },
        py::arg("k"), py::arg("i_max"), py::arg("j_max"), py::arg("domain") = "Q");
    m.def(
        "fat_check",
        [](const SimplicialComplex& k, int j, const std::string& domain) {
            return check_tuple(is_fat(exp_cohomology_diagram(k, j, CoefficientDomain::parse(domain)).contra));
        },
        py::arg("k"), py::arg("j"), py::arg("domain") = "Q");
    m.def(
        "twin_check",
        [](const SimplicialComplex& k, int j, const std::string& domain) {
            return check_tuple(validate_twin(exp_cohomology_diagram(k, j, CoefficientDomain::parse(domain))));
        },
        py::arg("k"), py::arg("j"), py::arg("domain") = "Q");
    m.def(
        "edge_iso_check",
        [](const SimplicialComplex& k, int j_max, const std::string& domain) {
            return check_tuple(edge_iso_check(k, CoefficientDomain::parse(domain), j_max));
        },
        py::arg("k"), py::arg("j_max"), py::arg("domain") = "Q");

    // rational models
    m.def(
        "ci_detect",
        [](const SimplicialComplex& k) -> py::object {
            std::string why;
            auto p = ci_detect(k, &why);
            if (!p) return py::none();
            return py::cast(faces_to_labels(k, p->lambdas));
        },
        py::arg("k"), "lambda blocks when the complex is a complete intersection, else None");
    m.def(
        "minimal_model",
        [](const SimplicialComplex& k) {
            auto p = ci_detect(k);
            if (!p) throw InputError("not a complete-intersection complex");
            SullivanModel model = minimal_model(*p);
            py::list gens;
            for (const auto& g : model.generators) gens.append(py::make_tuple(g.name, g.degree, g.odd));
            py::list diffs;
            for (size_t i = 0; i < model.differentials.size(); ++i) {
                MultiSet ms(k.vertex_count());
                for (int v : model.differentials[i].vertices()) ms.exponents[v] = 1;
                diffs.append("d w(" + std::to_string(i + 1) + ") = " + ms.monomial(k.labels()));
            }
            py::dict out;
            out["generators"] = gens;
            out["differentials"] = diffs;
            out["d_squared_zero"] = model.d_squared_zero();
            return out;
        },
        py::arg("k"));
    m.def(
        "koszul_check",
        [](const SimplicialComplex& k, int cutoff) {
            auto p = ci_detect(k);
            if (!p) throw InputError("not a complete-intersection complex");
            return check_tuple(koszul_cohomology_check(*p, cutoff));
        },
        py::arg("k"), py::arg("cutoff") = 10);
    m.def(
        "hilbert_ci_identity",
        [](const SimplicialComplex& k, int cutoff) {
            auto p = ci_detect(k);
            if (!p) throw InputError("not a complete-intersection complex");
            return check_tuple(hilbert_ci_identity(*p, cutoff));
        },
        py::arg("k"), py::arg("cutoff") = 10);
    m.def(
        "aut_generators",
        [](const SimplicialComplex& k) {
            auto p = ci_detect(k);
            if (!p) throw InputError("not a complete-intersection complex");
            AutGeneratorSet gens = automorphism_generators(*p);
            py::dict out;
            py::list free_part;
            for (int v : gens.free_vertices) free_part.append(k.labels()[v]);
            out["gl_block_vertices"] = free_part;
            out["lambda_blocks"] = py::cast(faces_to_labels(k, gens.lambda_blocks));
            out["sigma_group_order"] = gens.sigma_group_order;
            py::list names;
            for (const auto& [name, mat] : gens.generators) names.append(name);
            out["generator_names"] = names;
            return out;
        },
        py::arg("k"));

    // document plumbing shared with the CLI
    m.def("digest", [](const std::string& text) { return digest(parse_document(text)); });
    m.def("parse_complex", [](const std::string& text) { return to_complex(parse_document(text)); });
}
