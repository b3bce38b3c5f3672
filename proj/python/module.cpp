#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "facering/complex.hpp"
#include "facering/corpus.hpp"
#include "facering/criteria.hpp"
#include "facering/document.hpp"
#include "facering/error.hpp"
#include "facering/face_ring.hpp"
#include "facering/homology.hpp"
#include "facering/limits.hpp"
#include "facering/regularity.hpp"
#include "facering/report.hpp"

namespace py = pybind11;
using namespace facering;

namespace {

using FaceList = std::vector<std::vector<int>>;

FaceList face_lists(const std::vector<Face>& faces)
{
    FaceList out;
    for (Face f : faces)
        out.push_back(f.vertices());
    return out;
}

py::object json_to_py(const nlohmann::ordered_json& j)
{
    return py::module_::import("json").attr("loads")(j.dump());
}

py::object witness_py(const std::optional<LinkWitness>& w)
{
    if (!w)
        return py::none();
    return py::make_tuple(w->face.vertices(), w->degree);
}

FieldSpec field_of(const std::string& name)
{
    return FieldSpec::parse(name);
}

} // namespace

PYBIND11_MODULE(facering, m)
{
    m.doc() = "Stanley-Reisner rings: Cohen-Macaulay, Gorenstein and Gorenstein* by two routes, plus higher limits";
    m.attr("__version__") = tool_version();

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<ConsistencyError>(m, "ConsistencyError", PyExc_RuntimeError);

    py::class_<SimplicialComplex>(m, "Complex")
        .def(py::init([](int vertices, const FaceList& facets) { return SimplicialComplex::from_facets(vertices, facets); }),
             py::arg("m"), py::arg("facets"))
        .def_property_readonly("m", &SimplicialComplex::vertex_count)
        .def_property_readonly("dim", &SimplicialComplex::dim)
        .def_property_readonly("n", &SimplicialComplex::order)
        .def_property_readonly("f_vector", &SimplicialComplex::f_vector)
        .def_property_readonly("facets", [](const SimplicialComplex& k) { return face_lists(k.facets()); })
        .def_property_readonly("faces", [](const SimplicialComplex& k) { return face_lists(k.faces()); })
        .def_property_readonly("used_vertices", &SimplicialComplex::used_vertices)
        .def("is_pure", &SimplicialComplex::is_pure)
        .def("link", [](const SimplicialComplex& k, const std::vector<int>& s) { return link(k, Face::of(s)); })
        .def("star", [](const SimplicialComplex& k, const std::vector<int>& s) { return star(k, Face::of(s)); })
        .def("delete", [](const SimplicialComplex& k, const std::vector<int>& s) { return full_subcomplex(k, Face::of(s)); })
        .def("join", [](const SimplicialComplex& k, const SimplicialComplex& l) { return join(k, l); })
        .def("minimal_missing_faces", [](const SimplicialComplex& k) { return face_lists(minimal_missing_faces(k)); })
        .def("core", [](const SimplicialComplex& k) {
            auto c = core_decomposition(k);
            return py::make_tuple(c.apex.vertices(), c.core, c.is_reduced);
        })
        .def("__eq__", [](const SimplicialComplex& a, const SimplicialComplex& b) { return a == b; })
        .def("__repr__", [](const SimplicialComplex& k) { return to_string(k); });

    m.def("simplex_boundary", &simplex_boundary, py::arg("n"));
    m.def("simplex", &simplex, py::arg("n"));
    m.def("points", &points, py::arg("m"));
    m.def("cycle", &cycle, py::arg("m"));
    m.def("path", &path, py::arg("m"));
    m.def("cone", &cone);
    m.def("suspension", &suspension);
    m.def("rp2_6", &rp2_6);
    m.def("random_complex", &random_complex, py::arg("m"), py::arg("density"), py::arg("seed"));

    m.def("reduced_cohomology", [](const SimplicialComplex& k, const std::string& f) {
        return reduced_cohomology_dims(k, field_of(f)).dims;
    }, py::arg("complex"), py::arg("field") = "q", "dims of reduced cohomology in degrees -1..dim K");
    m.def("hilbert_series", [](const SimplicialComplex& k) {
        auto h = hilbert_series(k);
        return py::make_tuple(h.numerator.coefficients(), h.denominator_exponent);
    }, "numerator coefficients and the exponent e of (1-t)^e");

    m.def("quotient_dims", [](const SimplicialComplex& k, const std::string& f) {
        return quotient_algebra(k, field_of(f)).dims();
    }, py::arg("complex"), py::arg("field") = "q");
    m.def("socle_dims", [](const SimplicialComplex& k, const std::string& f) {
        return socle_dims(quotient_algebra(k, field_of(f)));
    }, py::arg("complex"), py::arg("field") = "q");
    m.def("is_free", [](const SimplicialComplex& k, const std::string& f) {
        return freeness_check(k, field_of(f)).is_free;
    }, py::arg("complex"), py::arg("field") = "q");
    m.def("is_poincare_duality", [](const SimplicialComplex& k, const std::string& f) {
        return pd_check(quotient_algebra(k, field_of(f))).is_pd;
    }, py::arg("complex"), py::arg("field") = "q");
    m.def("tor", [](const SimplicialComplex& k, const std::string& f, std::optional<int> d_max) {
        return koszul_tor_dims(k, field_of(f), d_max.value_or(default_tor_degree(k.order()))).dims;
    }, py::arg("complex"), py::arg("field") = "q", py::arg("d_max") = py::none(),
       "tor[j][d] = dim Tor^{-j} in internal degree d");

    m.def("reisner", [](const SimplicialComplex& k, const std::string& f) {
        auto r = reisner_check(k, field_of(f));
        return py::make_tuple(r.holds, witness_py(r.witness));
    }, py::arg("complex"), py::arg("field") = "q");
    m.def("spherical", [](const SimplicialComplex& k, const std::string& f) {
        auto r = spherical_check(k, field_of(f));
        return py::make_tuple(r.holds, witness_py(r.witness));
    }, py::arg("complex"), py::arg("field") = "q");
    m.def("classify", [](const SimplicialComplex& k, const std::string& f) {
        auto c = classify(k, field_of(f));
        require_agreement(k, c);
        py::dict out;
        for (const auto& v : c.verdicts) {
            py::dict d;
            d["topological"] = v.topological.holds;
            d["algebraic"] = v.algebraic.holds;
            d["agree"] = v.agree;
            out[py::str(property_name(v.property))] = d;
        }
        return out;
    }, py::arg("complex"), py::arg("field") = "q");

    m.def("cross_validate", [](const std::vector<std::pair<std::string, SimplicialComplex>>& corpus,
                               const std::vector<std::string>& fields, std::optional<std::uint64_t> seed) {
        std::vector<NamedComplex> cs;
        for (const auto& [name, k] : corpus)
            cs.push_back({name, k});
        std::vector<FieldSpec> fs;
        for (const auto& f : fields)
            fs.push_back(field_of(f));
        return json_to_py(crossval_json(cross_validate(cs, fs, seed)));
    }, py::arg("corpus"), py::arg("fields") = std::vector<std::string>{"f2", "f3", "q"}, py::arg("seed") = py::none());

    m.def("analyze", [](const SimplicialComplex& k, const std::string& name, const std::string& fields,
                        std::optional<int> d_max, bool report_only) {
        AnalysisOptions opts{parse_field_list(fields), d_max, report_only};
        return json_to_py(analyze(ComplexDocument::from_complex(name, k), opts).report);
    }, py::arg("complex"), py::arg("name") = "complex", py::arg("fields") = "f2,f3,q", py::arg("d_max") = py::none(),
       py::arg("report_only") = false, "full analysis report as a dict");

    m.def("read_document", [](const std::string& path) { return read_document(path).complex(); });
    m.def("to_document", [](const SimplicialComplex& k, const std::string& name) {
        return serialize_document(ComplexDocument::from_complex(name, k));
    }, py::arg("complex"), py::arg("name") = "complex");

    m.def("higher_limits", [](const SimplicialComplex& k, const std::string& functor, const std::string& f, int value) {
        const auto field = field_of(f);
        if (functor == "star")
            return higher_limit_dims(build_normalized_complex(star_functor(k, field, value)));
        if (value < 0)
            throw InputError("value dimension must be non-negative");
        const auto dim = static_cast<std::size_t>(value);
        if (functor == "constant")
            return higher_limit_dims(build_normalized_complex(constant_functor(k, field, dim)));
        if (functor == "atomic")
            return higher_limit_dims(build_normalized_complex(atomic_functor(k, field, dim)));
        throw InputError("unknown functor '" + functor + "'");
    }, py::arg("complex"), py::arg("functor") = "star", py::arg("field") = "q", py::arg("value") = 0,
       "lim^i dims; value is the internal degree for star, the value dimension otherwise");
    m.def("star_identity", [](const SimplicialComplex& k, const std::string& f, int degree) {
        auto s = star_identity(k, field_of(f), degree);
        py::dict d;
        d["limits"] = s.limits;
        d["expected"] = s.expected;
        d["holds"] = s.holds;
        return d;
    }, py::arg("complex"), py::arg("field") = "q", py::arg("degree") = 0);
}
