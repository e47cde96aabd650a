#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>

#include "supercong/oracle.hpp"
#include "supercong/runner.hpp"

namespace py = pybind11;
using namespace supercong;

namespace {

// Residues can exceed 64 bits; go through the decimal string.
py::int_ u128_int(u128 v) {
  return py::reinterpret_steal<py::int_>(
      PyLong_FromString(to_string_u128(v).c_str(), nullptr, 10));
}

py::int_ bigint_int(const bigint& v) {
  return py::reinterpret_steal<py::int_>(
      PyLong_FromString(v.str().c_str(), nullptr, 10));
}

py::dict record_dict(const CaseResult& r) {
  py::dict d;
  d["conj"] = r.conj;
  d["p"] = r.p;
  d["case"] = r.case_index;
  d["status"] = status_name(r.status);
  d["lhs"] = u128_int(r.lhs);
  d["rhs"] = u128_int(r.rhs);
  d["mod"] = u128_int(r.modulus);
  if (!r.note.empty()) d["note"] = r.note;
  if (r.stronger) d["stronger"] = true;
  return d;
}

}  // namespace

PYBIND11_MODULE(_supercong, m) {
  m.doc() = "Congruence verification engine for binomial-coefficient sums "
            "and Apery-like numbers";

  py::register_exception<Error>(m, "EngineError");

  m.def("is_prime", &is_prime_u64, py::arg("n"));
  m.def("sieve_primes", &sieve_primes, py::arg("lo"), py::arg("hi"));
  m.def("symbol", &symbol, py::arg("a"), py::arg("p"),
        "Legendre symbol (a/p) via Euler's criterion");
  m.def(
      "mod_inv",
      [](u64 a, u64 m) { return (u64)mod_inv(a, m); },
      py::arg("a"), py::arg("m"));
  m.def(
      "harmonic_sum_mod", &harmonic_sum_mod, py::arg("n"), py::arg("p"),
      "sum of 1/k for k = 1..n, mod p");

  m.def(
      "represent",
      [](i64 a, i64 b, i64 mult, u64 p) {
        std::vector<std::pair<i64, i64>> out;
        for (const auto& r : represent({a, b, mult}, p))
          out.emplace_back(r.x, r.y);
        return out;
      },
      py::arg("a"), py::arg("b"), py::arg("m"), py::arg("p"),
      "all nonnegative (x, y) with a x^2 + b y^2 = m p");

  m.def(
      "seq_exact",
      [](const std::string& name, u64 n) {
        return bigint_int(seq_exact(sequence_spec(sequence_by_id(name)), n));
      },
      py::arg("name"), py::arg("n"),
      "exact Apery-like value u_n (name in Aprime,f,S,a,Q,W,G)");
  m.def(
      "seq_mod",
      [](const std::string& name, u64 p, int e) {
        PrimeContext ctx(p, e);
        auto arr = seq_mod(sequence_spec(sequence_by_id(name)), ctx);
        py::list out;
        for (u128 v : arr) out.append(u128_int(v));
        return out;
      },
      py::arg("name"), py::arg("p"), py::arg("e") = 1);

  py::class_<Registry, std::shared_ptr<Registry>>(m, "Registry")
      .def_property_readonly(
          "conjecture_ids",
          [](const Registry& reg) {
            std::vector<std::string> ids;
            for (const auto& c : reg.conjectures) ids.push_back(c.id);
            return ids;
          })
      .def_property_readonly("sum_ids",
                             [](const Registry& reg) {
                               std::vector<std::string> ids;
                               for (const auto& [id, _] : reg.sums)
                                 ids.push_back(id);
                               return ids;
                             })
      .def("__repr__", [](const Registry& reg) {
        return "<Registry: " + std::to_string(reg.conjectures.size()) +
               " conjectures, " + std::to_string(reg.sums.size()) + " sums>";
      });

  m.def(
      "load_registry",
      [](const std::string& path) {
        return std::make_shared<Registry>(load_registry_file(path));
      },
      py::arg("path"));
  m.def(
      "parse_registry",
      [](const std::string& text) {
        return std::make_shared<Registry>(parse_registry(text));
      },
      py::arg("text"));

  m.def(
      "verify_prime",
      [](std::shared_ptr<Registry> reg, const std::string& conj_id, u64 p) {
        const ConjectureSpec* c = reg->find(conj_id);
        if (!c) throw Error(ErrorKind::BadConfig, "no conjecture " + conj_id);
        PrimeContext ctx(p, c->max_mod_power());
        Env env(*reg, ctx);
        py::list out;
        for (const auto& r : verify(*c, env)) out.append(record_dict(r));
        return out;
      },
      py::arg("registry"), py::arg("conjecture"), py::arg("p"));

  m.def(
      "run",
      [](std::shared_ptr<Registry> reg, u64 lo, u64 hi,
         const std::string& filter, int jobs, u64 oracle_below) {
        RunConfig cfg;
        cfg.lo = lo;
        cfg.hi = hi;
        cfg.filter = filter;
        cfg.jobs = jobs;
        cfg.oracle_below = oracle_below;
        VerificationReport rep = run(*reg, cfg);
        py::dict out;
        out["exit_code"] = rep.exit_code();
        py::list recs;
        for (const auto& r : rep.records) recs.append(record_dict(r));
        out["records"] = recs;
        py::dict summary;
        for (const auto& [id, s] : rep.summary) {
          py::dict row;
          row["pass"] = s.pass;
          row["fail"] = s.fail;
          row["nocase"] = s.nocase;
          row["ambiguous"] = s.ambiguous;
          row["skipped"] = s.skipped;
          row["engine_error"] = s.engine_error;
          summary[py::str(id)] = row;
        }
        out["summary"] = summary;
        return out;
      },
      py::arg("registry"), py::arg("lo"), py::arg("hi"),
      py::arg("filter") = "*", py::arg("jobs") = 1,
      py::arg("oracle_below") = 100);

  m.def(
      "fit",
      [](std::shared_ptr<Registry> reg, const std::string& family,
         const std::vector<u64>& primes, u64 bound) {
        FitResult res = fit_constant(*reg, fit_family(family), primes, bound);
        py::dict out;
        out["num"] = res.constant.num;
        out["den"] = res.constant.den;
        out["residues"] = res.residues;
        out["skipped"] = res.skipped;
        return out;
      },
      py::arg("registry"), py::arg("family"), py::arg("primes"),
      py::arg("bound") = (u64)1000000);

  m.def(
      "oracle_sum",
      [](std::shared_ptr<Registry> reg, const std::string& sum_id, u64 p,
         int e) {
        return u128_int(oracle_sum_residue(reg->sums.at(sum_id), p, e));
      },
      py::arg("registry"), py::arg("sum"), py::arg("p"), py::arg("e"),
      "exact big-rational evaluation of a registry sum, reduced mod p^e");

  m.def(
      "eval_sum",
      [](std::shared_ptr<Registry> reg, const std::string& sum_id, u64 p,
         int e) {
        PrimeContext ctx(p, e);
        Env env(*reg, ctx);
        return u128_int(env.sum(sum_id) % ctx.ppow[e]);
      },
      py::arg("registry"), py::arg("sum"), py::arg("p"), py::arg("e"),
      "p-adic engine evaluation of a registry sum mod p^e");
}
