#include "cohomotopy/json_io.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace cohomotopy;

namespace {

std::vector<Int> to_ints(const std::vector<long long>& v) {
    return std::vector<Int>(v.begin(), v.end());
}

std::vector<long long> from_ints(const std::vector<Int>& v) {
    std::vector<long long> out;
    out.reserve(v.size());
    for (const Int& x : v) out.push_back(x.convert_to<long long>());
    return out;
}

IntMat to_matrix(const std::vector<std::vector<long long>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows[0].size() : 0;
    IntMat m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("matrix rows must have equal length");
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

std::vector<std::vector<long long>> from_matrix(const IntMat& m) {
    std::vector<std::vector<long long>> rows(m.rows(), std::vector<long long>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j).convert_to<long long>();
    return rows;
}

GroupElement element_of(const ManifoldData& x, const std::vector<long long>& coords) {
    if (coords.size() != x.h2.num_generators())
        throw std::invalid_argument("alpha must have one coordinate per h2 generator (torsion first)");
    return GroupElement(x.h2, to_ints(coords));
}

Z2Functional functional_of(const FinAbGroup& g, const std::vector<int>& bits) {
    Z2Functional phi{g, bits};
    if (!phi.well_formed())
        throw std::invalid_argument("bits must have one entry per even invariant factor");
    return phi;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "cohomotopy sets of closed oriented 4-manifolds";

    py::class_<FinAbGroup>(m, "FinAbGroup")
        .def(py::init([](std::vector<long long> torsion, std::size_t free_rank) {
                 return FinAbGroup(to_ints(torsion), free_rank);
             }),
             py::arg("torsion"), py::arg("free_rank"))
        .def_property_readonly("free_rank", &FinAbGroup::free_rank)
        .def_property_readonly("torsion",
                               [](const FinAbGroup& g) { return from_ints(g.torsion()); })
        .def("__eq__", [](const FinAbGroup& a, const FinAbGroup& b) { return a == b; })
        .def("__repr__", [](const FinAbGroup& g) { return "<" + g.to_string() + ">"; })
        .def("__str__", &FinAbGroup::to_string);

    m.def("group_from_orders", [](std::vector<long long> orders) {
        return FinAbGroup::from_orders(to_ints(orders));
    });

    py::class_<ManifoldData>(m, "ManifoldData")
        .def_readonly("name", &ManifoldData::name)
        .def_readonly("h1", &ManifoldData::h1)
        .def_readonly("h2", &ManifoldData::h2)
        .def_readonly("h3_rank", &ManifoldData::h3_rank)
        .def("validate",
             [](const ManifoldData& x) {
                 std::vector<std::string> msgs;
                 for (const auto& v : validate(x)) msgs.push_back(v.message);
                 return msgs;
             })
        .def("__repr__",
             [](const ManifoldData& x) { return "<manifold " + x.name + ">"; });

    m.def("catalog_names", &catalog_names);
    m.def("catalog_get", [](const std::string& name) {
        auto x = catalog_get(name);
        if (!x) throw py::key_error("unknown catalog name: " + name);
        return *x;
    });

    m.def("e_nk", [](long long n, int k) { return e_nk(Int(n), k); }, py::arg("n"), py::arg("k"));
    m.def("simply_connected",
          [](std::vector<std::vector<long long>> q) { return simply_connected(to_matrix(q)); });
    m.def("connected_sum", &connected_sum);
    m.def("surgered_example", &surgered_example);

    m.def("parity", [](const ManifoldData& x) {
        return parity(x) == Parity::odd ? std::string("odd") : std::string("even");
    });
    m.def("is_spin", &is_spin);
    m.def("f1_group", &f1_group);
    m.def("manifold_type",
          [](const ManifoldData& x, int radius) { return manifold_type(x, radius).to_string(); },
          py::arg("x"), py::arg("radius") = 5);
    m.def("self_intersection",
          [](const ManifoldData& x, std::vector<long long> alpha) {
              return self_intersection(x, element_of(x, alpha)).convert_to<long long>();
          });
    m.def("fiber_group", [](const ManifoldData& x, std::vector<long long> alpha) {
        return fiber_group(x, element_of(x, alpha));
    });
    m.def("is_twisted_2class", [](const ManifoldData& x, std::vector<long long> alpha) {
        return is_twisted_2class(x, element_of(x, alpha));
    });
    m.def("h2_zero_classes",
          [](const ManifoldData& x, int bound) {
              std::vector<std::vector<long long>> out;
              for (const auto& alpha : h2_zero_classes(x, bound)) out.push_back(from_ints(alpha.coords()));
              return out;
          },
          py::arg("x"), py::arg("bound") = 5);

    m.def("report_json",
          [](const ManifoldData& x, int bound, int radius) {
              return report_to_json(cohomotopy_report(x, bound, radius)).dump();
          },
          py::arg("x"), py::arg("bound") = 5, py::arg("radius") = 5);
    m.def("report_text",
          [](const ManifoldData& x, int bound, int radius) {
              return report_to_text(x, cohomotopy_report(x, bound, radius));
          },
          py::arg("x"), py::arg("bound") = 5, py::arg("radius") = 5);
    m.def("manifold_from_json", [](const std::string& text) {
        return manifold_from_document(ordered_json::parse(text));
    });
    m.def("manifold_to_json",
          [](const ManifoldData& x) { return manifold_to_document(x).dump(2); });

    m.def("smith_normal_form", [](std::vector<std::vector<long long>> rows) {
        SmithResult r = smith_normal_form(to_matrix(rows));
        return py::make_tuple(from_matrix(r.U), from_matrix(r.D), from_matrix(r.V));
    });

    m.def("classify_extension", [](const FinAbGroup& b, std::vector<int> bits) {
        return classify_extension(b, functional_of(b, bits));
    });
    m.def("extension_oracle", [](const FinAbGroup& b, std::vector<int> bits) {
        return brute_force_extension_oracle(b, functional_of(b, bits));
    });
    m.def("extension_check", [](long long max_order) {
        return extension_oracle_sweep(Int(max_order));
    }, py::arg("max_order") = 64);

    py::register_exception<ParseError>(m, "DocumentParseError", PyExc_ValueError);
}
