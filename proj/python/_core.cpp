// Copyright 2026 The authcode Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Python bindings: codes, the protocol phases, coalition attacks and the
// group analysis, with matrices passed as lists of rows.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "authcode/adversary.hpp"
#include "authcode/analysis.hpp"
#include "authcode/io.hpp"
#include "authcode/paper_example.hpp"

namespace py = pybind11;

namespace authcode {
namespace {

using Rows = std::vector<std::vector<std::int64_t>>;

Rows to_rows(const Matrix& m) {
  Rows out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const auto row = m.row(r);
    out[r].assign(row.begin(), row.end());
  }
  return out;
}

class PyScheme {
 public:
  PyScheme(const LinearCode& code, std::size_t max_messages, std::uint64_t cap)
      : params_(SchemeParams::make(code, max_messages, cap)) {}

  const SchemeParams& params() const { return params_; }

  KeyMatrix key(const Rows& a) const {
    return KeyMatrix::from_matrix(Matrix::from_rows(params_.field(), a), params_);
  }

  CoalitionView view(const Rows& a, IndexSet coalition,
                     const std::vector<Residue>& observed) const {
    std::sort(coalition.begin(), coalition.end());
    return CoalitionView::observe(params_, key(a), std::move(coalition), observed);
  }

 private:
  SchemeParams params_;
};

}  // namespace
}  // namespace authcode

PYBIND11_MODULE(_core, m) {
  using namespace authcode;
  m.doc() = "Multi-receiver authentication codes from linear codes";

  // Translators registered later are tried first, so CapExceeded wins.
  const auto& error =
      py::register_exception<Error>(m, "AuthcodeError", PyExc_ValueError);
  py::register_exception<CapExceeded>(m, "CapExceeded", error.ptr());

  m.attr("DEFAULT_CAP") = kDefaultCap;
  m.def("is_prime", &is_prime, py::arg("n"));

  py::class_<LinearCode>(m, "Code")
      .def(py::init([](std::int64_t q, const Rows& rows) {
             return LinearCode::make(q, rows);
           }),
           py::arg("q"), py::arg("generator"))
      .def_static("parse", [](const std::string& text) { return io::parse_code(text); })
      .def("format", &io::format_code)
      .def_property_readonly("q", [](const LinearCode& c) { return c.field().modulus(); })
      .def_property_readonly("length", &LinearCode::length)
      .def_property_readonly("dimension", &LinearCode::dimension)
      .def_property_readonly("generator",
                             [](const LinearCode& c) { return to_rows(c.generator()); })
      .def("column", &LinearCode::column, py::arg("i"))
      .def("encode", [](const LinearCode& c, const Vector& x) { return c.encode(x); })
      .def("contains", [](const LinearCode& c, const Vector& x) { return c.contains(x); })
      .def("dual", &dual_code)
      .def("min_distance", &min_distance, py::arg("cap") = kDefaultCap)
      .def("is_mds", &LinearCode::is_mds, py::arg("cap") = kDefaultCap)
      .def(
          "minimal_codewords",
          [](const LinearCode& c, std::size_t i, std::uint64_t cap) {
            std::vector<Vector> out;
            for (const Codeword& w : minimal_codewords_wrt(c, i, cap))
              out.push_back(w.vector);
            return out;
          },
          py::arg("i"), py::arg("cap") = kDefaultCap)
      .def("__repr__", [](const LinearCode& c) {
        return "Code(q=" + std::to_string(c.field().modulus()) +
               ", V=" + std::to_string(c.length()) +
               ", k=" + std::to_string(c.dimension()) + ")";
      });

  py::class_<PyScheme>(m, "Scheme")
      .def(py::init<const LinearCode&, std::size_t, std::uint64_t>(),
           py::arg("code"), py::arg("max_messages"), py::arg("cap") = kDefaultCap)
      .def_property_readonly("distance",
                             [](const PyScheme& s) { return s.params().distance(); })
      .def_property_readonly("dual_distance",
                             [](const PyScheme& s) { return s.params().dual_distance(); })
      .def("keygen",
           [](const PyScheme& s, std::uint64_t seed) {
             return to_rows(keygen(s.params(), seed).matrix());
           },
           py::arg("seed"))
      .def("distribute",
           [](const PyScheme& s, const Rows& a) {
             return to_rows(distribute(s.key(a), s.params()).b);
           },
           py::arg("key_matrix"))
      .def("tag",
           [](const PyScheme& s, const Rows& a, Residue msg) {
             return make_tag(s.key(a), msg).tag;
           },
           py::arg("key_matrix"), py::arg("message"))
      .def("label",
           [](const PyScheme& s, const Vector& key_column, Residue msg) {
             return compute_label(s.params().field(), PrivateKey{0, key_column}, msg);
           },
           py::arg("key_column"), py::arg("message"))
      .def("verify",
           [](const PyScheme& s, std::size_t receiver, const Vector& key_column,
              Residue msg, const Vector& tag) {
             return verify(s.params(), PrivateKey{receiver, key_column},
                           TaggedMessage{msg, tag});
           },
           py::arg("receiver"), py::arg("key_column"), py::arg("message"),
           py::arg("tag"))
      .def("key_space",
           [](const PyScheme& s, const Rows& a, const IndexSet& coalition,
              const std::vector<Residue>& observed, std::uint64_t cap) {
             const AffineSolutionSet set =
                 solve_key_space(s.view(a, coalition, observed), cap);
             py::dict out;
             out["count"] = set.count();
             out["dimension"] = set.dimension();
             out["particular"] = set.particular;
             out["basis"] = set.basis;
             return out;
           },
           py::arg("key_matrix"), py::arg("coalition"), py::arg("observed"),
           py::arg("cap") = kDefaultCap)
      .def("label_distribution",
           [](const PyScheme& s, const Rows& a, const IndexSet& coalition,
              const std::vector<Residue>& observed, std::size_t target,
              Residue fresh, std::uint64_t cap) {
             return label_distribution(s.view(a, coalition, observed), target,
                                       fresh, cap)
                 .counts;
           },
           py::arg("key_matrix"), py::arg("coalition"), py::arg("observed"),
           py::arg("target"), py::arg("fresh"), py::arg("cap") = kDefaultCap)
      .def("forge",
           [](const PyScheme& s, const Rows& a, const IndexSet& coalition,
              const std::vector<Residue>& observed, std::size_t target,
              Residue fresh, std::uint64_t cap)
               -> std::pair<std::optional<Vector>, std::vector<Residue>> {
             const ForgeOutcome out =
                 forge(s.view(a, coalition, observed), target, fresh, cap);
             if (out.forged) return {out.forged->tag, out.candidates};
             return {std::nullopt, out.candidates};
           },
           py::arg("key_matrix"), py::arg("coalition"), py::arg("observed"),
           py::arg("target"), py::arg("fresh"), py::arg("cap") = kDefaultCap);

  m.def(
      "classify",
      [](const LinearCode& c, IndexSet group, std::size_t target) {
        std::sort(group.begin(), group.end());
        const GroupClassification g = is_substitution_group(c, group, target);
        return std::make_pair(std::string(to_string(g.verdict)), g.witness);
      },
      py::arg("code"), py::arg("group"), py::arg("target"));
  m.def("minimal_substitution_groups", &minimal_substitution_groups,
        py::arg("code"), py::arg("i"), py::arg("cap") = kDefaultCap,
        py::arg("subset_cap") = kDefaultSubsetCap);
  m.def(
      "thresholds",
      [](const LinearCode& c, std::size_t i) {
        const ReceiverThresholds t = receiver_thresholds(c, i);
        return std::make_pair(t.t, t.r);
      },
      py::arg("code"), py::arg("i"));
  m.def(
      "security_report",
      [](const LinearCode& c, const std::string& format) {
        const SecurityReport r = security_report(c);
        return std::make_pair(r.passed(), format == "kv" ? render_kv(r) : render_text(r));
      },
      py::arg("code"), py::arg("format") = "text");
  m.def("paper_example", [] {
    const paper_example::Report r = paper_example::run();
    return std::make_pair(r.passed(), r.render());
  });
}
