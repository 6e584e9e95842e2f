#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "frobex/grassmannian.hpp"
#include "frobex/qas.hpp"
#include "frobex/report.hpp"

namespace py = pybind11;
using namespace frobex;

namespace {

py::object group_tuple(const std::optional<GroupElement>& g) {
  if (!g) return py::none();
  return py::tuple(py::cast(std::vector<std::int64_t>(g->coords().begin(), g->coords().end())));
}

std::vector<GroupElement> to_degrees(const std::vector<std::vector<std::int64_t>>& rows) {
  std::vector<GroupElement> out;
  for (const auto& r : rows) out.emplace_back(r);
  return out;
}

RootField field_for(std::uint64_t ell, std::optional<std::uint64_t> p, std::uint64_t seed) {
  return RootField::create(p.value_or(default_prime_for(ell)), ell, seed);
}

py::dict certificate_dict(const FrobeniusCertificate& cert) {
  py::dict d;
  d["verdict"] = to_string(cert.verdict);
  d["rank"] = cert.rank;
  d["phi_degree"] = group_tuple(cert.phi_degree);
  d["symmetry_d"] = group_tuple(cert.symmetry_d);
  d["gram_status"] = to_string(cert.gram_status.kind);
  d["gram_method"] = cert.gram_status.method;
  d["nakayama_trivial"] = cert.nakayama ? py::cast(cert.nakayama->trivial) : py::none();
  return d;
}

}  // namespace

PYBIND11_MODULE(_frobex, m) {
  m.doc() = "Frobenius extension checks for quantum algebras at roots of unity.";

  m.def("default_prime_for", &default_prime_for, py::arg("ell"));

  m.def(
      "run",
      [](const std::string& command, std::uint64_t ell, std::optional<std::uint64_t> p, std::size_t n,
         std::uint64_t seed, std::optional<std::int64_t> window, const std::string& scalars) {
        RunConfig cfg;
        cfg.command = command;
        cfg.ell = ell;
        cfg.p = p;
        cfg.n = n;
        cfg.seed = seed;
        cfg.window = window;
        cfg.scalars = scalars;
        const RunResult r = run_command(cfg);
        return py::make_tuple(r.exit_code, r.report);
      },
      py::arg("command"), py::arg("ell") = 3, py::arg("p") = py::none(), py::arg("n") = 2, py::arg("seed") = 1,
      py::arg("window") = py::none(), py::arg("scalars") = "default",
      "Runs a CLI command in-process; returns (exit_code, report).");

  m.def(
      "qas_verify",
      [](const std::vector<std::vector<std::int64_t>>& C, const std::vector<std::vector<std::int64_t>>& degrees,
         std::uint64_t ell, std::optional<std::uint64_t> p, std::uint64_t seed) {
        const QuantumAffineSpace Q(field_for(ell, p, seed), C, to_degrees(degrees));
        return certificate_dict(verify_frobenius(Q.extension(), {.seed = seed}));
      },
      py::arg("C"), py::arg("degrees"), py::arg("ell"), py::arg("p") = py::none(), py::arg("seed") = 1);

  m.def(
      "grassmannian_census",
      [](std::uint64_t ell, const std::string& scalars, std::uint64_t seed) {
        if (scalars != "default" && scalars != "alternate") throw py::value_error("scalars: default | alternate");
        const GrGrassmannian G(field_for(ell, std::nullopt, seed),
                               scalars == "default" ? default_grassmannian_config() : alternate_grassmannian_config());
        const CensusReport R = degree_census(G);
        py::dict d;
        d["basis_size"] = R.basis_size;
        d["counts"] = R.counts;
        d["max_degree"] = R.max_degree;
        d["symmetry_d"] = R.symmetry_d ? py::cast(*R.symmetry_d) : py::none();
        d["verdict"] = to_string(R.verdict);
        py::dict claims;
        for (const auto& c : R.claims) claims[py::str(c.name)] = py::make_tuple(c.expected, c.computed, c.agrees());
        d["claims"] = claims;
        return d;
      },
      py::arg("ell"), py::arg("scalars") = "default", py::arg("seed") = 1);

  m.def(
      "qweyl_transfer",
      [](std::uint64_t ell, std::uint64_t seed) {
        const QweylTransfer T = qweyl_transfer(field_for(ell, std::nullopt, seed), std::nullopt, seed);
        py::dict d;
        d["ok"] = T.ok();
        d["window"] = group_tuple(T.window);
        d["gr_table"] = T.gr_table.equal;
        d["filtered"] = certificate_dict(T.filtered);
        d["rees"] = certificate_dict(T.rees);
        d["m0_table"] = T.m0_table.equal;
        d["m1_table"] = T.m1_table.equal;
        return d;
      },
      py::arg("ell"), py::arg("seed") = 1);
}
