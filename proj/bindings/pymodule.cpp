#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

#include "coxkit/coxeter.hpp"
#include "coxkit/fan.hpp"
#include "coxkit/fixtures.hpp"
#include "coxkit/jtensor.hpp"
#include "coxkit/serialize.hpp"
#include "coxkit/surface.hpp"
#include "coxkit/tables.hpp"

namespace py = pybind11;

namespace {

using Blocks = std::vector<std::pair<std::string, std::size_t>>;

std::vector<coxkit::JordanFactor> to_factors(const Blocks& blocks) {
    std::vector<coxkit::JordanFactor> factors;
    for (const auto& [eigenvalue, size] : blocks)
        factors.push_back({coxkit::parse_rational(eigenvalue), size});
    return factors;
}

coxkit::RationalSurfaceModel to_model(const std::string& base, long long a, std::size_t blowups) {
    coxkit::RationalSurfaceModel model;
    if (base == "P2") {
        if (a != 0) throw std::invalid_argument("the P2 base takes no parameter");
        model.base = coxkit::SurfaceBaseKind::P2;
    } else if (base == "Hirzebruch") {
        model.base = coxkit::SurfaceBaseKind::Hirzebruch;
        model.a = a;
    } else {
        throw std::invalid_argument("base must be 'P2' or 'Hirzebruch'");
    }
    model.blowups = blowups;
    return model;
}

}  // namespace

PYBIND11_MODULE(_coxkit, m) {
    m.doc() = "exact Coxeter/Jordan computations for toric varieties and rational surfaces";

    m.def("fixture_names", [] { return coxkit::fixture_names(); },
          "names of the bundled fans");
    m.def("fixture_json", [](const std::string& name) {
              return coxkit::fan_to_json(coxkit::fixture(name));
          },
          py::arg("name"), "a bundled fan as JSON");

    m.def("validate_fan", [](const std::string& fan_json) {
              return coxkit::validate(coxkit::fan_from_json(fan_json));
          },
          py::arg("fan_json"), "all structural violations (empty = valid)");

    m.def("betti_numbers", [](const std::string& fan_json) {
              return coxkit::betti(coxkit::fan_from_json(fan_json));
          },
          py::arg("fan_json"));

    m.def("cone_counts", [](const std::string& fan_json) {
              return coxkit::cone_counts(coxkit::fan_from_json(fan_json)).counts;
          },
          py::arg("fan_json"));

    m.def("fan_report_json", [](const std::string& fan_json) {
              const auto report = coxkit::coxeter_report(coxkit::fan_from_json(fan_json));
              return coxkit::to_ordered_json(report).dump();
          },
          py::arg("fan_json"), "full Coxeter report for a fan, as JSON");

    m.def("star_subdivide_json", [](const std::string& fan_json, const std::vector<int>& cone) {
              return coxkit::fan_to_json(
                  coxkit::star_subdivide(coxkit::fan_from_json(fan_json), cone));
          },
          py::arg("fan_json"), py::arg("cone"));

    m.def("product_fan_json", [](const std::string& x_json, const std::string& y_json) {
              return coxkit::fan_to_json(coxkit::product_fan(coxkit::fan_from_json(x_json),
                                                             coxkit::fan_from_json(y_json)));
          },
          py::arg("x_json"), py::arg("y_json"));

    m.def("surface_report_json",
          [](const std::string& base, long long a, std::size_t blowups, bool emit_psi) {
              const auto model = to_model(base, a, blowups);
              auto j = coxkit::to_ordered_json(coxkit::surface_coxeter(model));
              if (emit_psi)
                  j["psi"] = coxkit::to_ordered_json(
                      coxkit::surface_psi_matrix(coxkit::build_surface_chow(model)));
              return j.dump();
          },
          py::arg("base"), py::arg("a") = 0, py::arg("blowups") = 0, py::arg("emit_psi") = false);

    m.def("tensor_json", [](const Blocks& blocks) {
              return coxkit::to_ordered_json(coxkit::box_many(to_factors(blocks))).dump();
          },
          py::arg("blocks"), "closed-form Jordan type of a tensor of blocks (nonzero eigenvalues)");

    m.def("tensor_pairwise_json", [](const Blocks& blocks) {
              const auto factors = to_factors(blocks);
              coxkit::JordanSum acc;
              acc.add(factors.at(0).eigenvalue, factors.at(0).size);
              for (std::size_t i = 1; i < factors.size(); ++i) {
                  coxkit::JordanSum single;
                  single.add(factors[i].eigenvalue, factors[i].size);
                  acc = coxkit::box_sums(acc, single);
              }
              return coxkit::to_ordered_json(acc).dump();
          },
          py::arg("blocks"), "pairwise fold, valid for zero eigenvalues too");

    m.def("tensor_oracle_json", [](const Blocks& blocks, std::size_t cap) {
              return coxkit::to_ordered_json(coxkit::brute_force_box(to_factors(blocks), cap)).dump();
          },
          py::arg("blocks"), py::arg("cap") = coxkit::kDefaultDimensionCap,
          "Kronecker brute-force oracle");

    m.def("cartan_coxeter_json", [](const std::vector<std::vector<long long>>& rows) {
              const auto phi = coxkit::coxeter_of_cartan(coxkit::RationalMatrix::from_int_rows(rows));
              nlohmann::ordered_json j;
              j["coxeter_matrix"] = coxkit::to_ordered_json(phi);
              for (const long long mu : {1LL, -1LL}) {
                  coxkit::RationalMatrix shifted = phi;
                  for (std::size_t i = 0; i < shifted.rows(); ++i) shifted.at(i, i) -= mu;
                  if (coxkit::nilpotency_index(shifted)) {
                      j["coxeter_polynomial"] =
                          coxkit::CoxeterPolynomial{phi.rows(), static_cast<int>(-mu), true}
                              .to_string();
                      j["jordan"] = coxkit::to_ordered_json(
                          coxkit::full_jordan_type(phi, {coxkit::Rational(mu)}));
                      break;
                  }
              }
              return j.dump();
          },
          py::arg("rows"));

    m.def("reproduce_json", [](const std::string& table, std::size_t cap) {
              return coxkit::to_ordered_json(coxkit::reproduce_table(table, cap)).dump();
          },
          py::arg("table"), py::arg("cap") = coxkit::kDefaultDimensionCap);

    m.attr("__version__") = "1.0.0";
}
