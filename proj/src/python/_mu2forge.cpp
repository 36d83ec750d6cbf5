// Python bindings. Terms and types cross the boundary as text in the same
// grammar the CLI accepts; contexts are dicts from names to type text.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <string>
#include <vector>

#include "mu2forge/acceptance.hpp"
#include "mu2forge/cps.hpp"
#include "mu2forge/encodings.hpp"
#include "mu2forge/focality.hpp"
#include "mu2forge/free_theorems.hpp"
#include "mu2forge/inverse_cps.hpp"
#include "mu2forge/mu_theory.hpp"
#include "mu2forge/normalizer.hpp"
#include "mu2forge/syntax.hpp"

namespace py = pybind11;
using namespace mu2forge;

namespace {

using Bindings = std::vector<std::pair<std::string, std::string>>;

Bindings bindings(const py::dict& d) {
  Bindings out;
  for (auto [k, v] : d) out.emplace_back(py::str(k), py::str(v));
  return out;
}

Context mu_context(const py::dict& d) {
  Context out;
  for (const auto& [x, t] : bindings(d)) out.emplace_back(x, parse_mu_type(t));
  return out;
}

py::dict context_dict(const Context& c, PrintStyle st) {
  py::dict out;
  for (const auto& [x, t] : c) out[py::str(x)] = to_string(t, st);
  return out;
}

PrintStyle style_of(bool ascii) { return ascii ? PrintStyle::Ascii : PrintStyle::Unicode; }

Mode mode_of(const std::string& m) {
  if (m == "plain") return Mode::Plain;
  if (m == "parametric") return Mode::Parametric;
  throw py::value_error("mode must be 'plain' or 'parametric'");
}

Theory theory_of(const std::string& t) {
  if (t == "beta-eta") return Theory::BetaEta;
  if (t == "p") return Theory::LambdaMu2P;
  throw py::value_error("theory must be 'beta-eta' or 'p'");
}

TargetContext target_context(const py::dict& vars, const py::dict& names, const py::dict& tvars) {
  TargetContext ctx = cps_context(mu_context(vars), mu_context(names));
  for (const auto& [x, t] : bindings(tvars)) ctx.emplace_back(x, parse_target_type(t));
  return ctx;
}

std::vector<std::string> trace_lines(const Trace& t) {
  std::vector<std::string> out;
  for (const auto& s : t) out.push_back(format_step(s));
  return out;
}

py::dict typecheck(const std::string& text, const py::dict& vars, const py::dict& names, bool ascii) {
  Context g = mu_context(vars), d = mu_context(names);
  MuTerm m = parse_open_mu_term(text, g, d);
  MuType t = typecheck_mu(g, d, m);
  py::dict out;
  out["term"] = to_string(m, style_of(ascii));
  out["type"] = to_string(t, style_of(ascii));
  out["vars"] = context_dict(g, style_of(ascii));
  out["names"] = context_dict(d, style_of(ascii));
  return out;
}

py::dict cps(const std::string& text, const py::dict& vars, const py::dict& names, const std::string& mode, bool raw,
             bool ascii) {
  Context g = mu_context(vars), d = mu_context(names);
  MuTerm m = parse_open_mu_term(text, g, d);
  MuType t = typecheck_mu(g, d, m);
  TargetTerm image = cps_term(g, d, m);
  TargetType ty = TargetType::neg(cps_type(t));
  py::dict out;
  out["type"] = to_string(ty, style_of(ascii));
  if (raw) {
    out["term"] = to_string(image, style_of(ascii));
    return out;
  }
  CanonicalForm f = canonicalize(cps_context(g, d), image, ty, mode_of(mode));
  out["term"] = to_string(f.term, style_of(ascii));
  out["trace"] = trace_lines(f.trace);
  return out;
}

py::dict normalize(const std::string& text, const py::dict& vars, const py::dict& names, const py::dict& tvars,
                   const std::string& mode, bool ascii) {
  TargetContext ctx = target_context(vars, names, tvars);
  TargetTerm p = parse_target_term(text, ctx);
  Mode md = mode_of(mode);
  CanonicalForm f = canonicalize(ctx, p, typecheck_target(ctx, p, md), md);
  py::dict out;
  out["term"] = to_string(f.term, style_of(ascii));
  out["type"] = to_string(f.type, style_of(ascii));
  out["kind"] = std::string(kind_name(f.kind));
  out["trace"] = trace_lines(f.trace);
  return out;
}

py::dict uncps(const std::string& text, const py::dict& vars, const py::dict& names, const py::dict& tvars,
               const std::string& mode, bool ascii) {
  TargetContext ctx = target_context(vars, names, tvars);
  TargetTerm p = parse_target_term(text, ctx);
  Mode md = mode_of(mode);
  CanonicalForm f = canonicalize(ctx, p, typecheck_target(ctx, p, md), md);
  Inverted inv = invert(ctx, f, md);
  py::dict out;
  out["term"] = to_string(inv.term, style_of(ascii));
  out["kind"] = std::string(kind_name(inv.kind));
  out["hole_type"] = inv.hole_type ? py::object(py::str(to_string(*inv.hole_type, style_of(ascii)))) : py::none();
  return out;
}

bool eq(const std::string& lhs, const std::string& rhs, const py::dict& vars, const py::dict& names,
        const std::string& theory) {
  Context g = mu_context(vars), d = mu_context(names);
  MuTerm l = parse_open_mu_term(lhs, g, d);
  MuTerm r = parse_open_mu_term(rhs, g, d, typecheck_mu(g, d, l));
  return eq_mu(g, d, l, r, theory_of(theory)).equal;
}

py::object focal_check(const std::string& text, const py::dict& vars, const py::dict& names,
                       const std::string& theory, bool ascii) {
  Context g = mu_context(vars), d = mu_context(names);
  MuTerm f = parse_open_mu_term(text, g, d);
  FocalCheck r = check_focal(g, d, f, theory_of(theory));
  py::dict out;
  out["focal"] = bool(r);
  if (!r) {
    out["reason"] = r.reason;
    return std::move(out);
  }
  const FocalityCertificate& c = *r.certificate;
  out["dom"] = to_string(c.dom, style_of(ascii));
  out["cod"] = to_string(c.cod, style_of(ascii));
  out["arg"] = c.arg;
  out["cont"] = c.cont;
  out["transformer"] = to_string(c.transformer, style_of(ascii));
  out["valid"] = validate_certificate(c).empty();
  return std::move(out);
}

std::string free_theorem_text(const std::string& type, const std::vector<std::string>& params, bool json) {
  RelFormula f = free_theorem(parse_mu_type(type), params);
  return json ? to_json(f) : to_string(f);
}

py::list catalog_list(bool ascii) {
  py::list out;
  for (const auto& e : catalog()) {
    py::dict d;
    d["name"] = e.name;
    d["term"] = to_string(e.term, style_of(ascii));
    d["type"] = to_string(e.type, style_of(ascii));
    d["vars"] = context_dict(e.gamma, style_of(ascii));
    d["names"] = context_dict(e.delta, style_of(ascii));
    d["topic"] = e.topic;
    d["description"] = e.description;
    out.append(d);
  }
  return out;
}

py::list acceptance(std::uint64_t seed, const std::vector<int>& only, const std::string& golden_dir) {
  AcceptanceConfig cfg;
  cfg.seed = seed;
  cfg.golden_dir = golden_dir;
  py::list out;
  for (const auto& r : run_acceptance(cfg, only)) {
    py::dict d;
    d["id"] = r.id;
    d["title"] = r.title;
    d["pass"] = r.pass;
    d["summary"] = r.summary;
    d["failures"] = r.failures;
    d["seconds"] = r.seconds;
    d["line"] = format_line(r);
    out.append(d);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_mu2forge, m) {
  static py::exception<KernelError> kernel_error(m, "KernelError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const KernelError& e) {
      py::object err = py::reinterpret_borrow<py::object>(kernel_error.ptr())(e.what());
      err.attr("code") = std::string(errc_name(e.code()));
      PyErr_SetObject(kernel_error.ptr(), err.ptr());
    }
  });

  m.def("typecheck", &typecheck, py::arg("term"), py::arg("vars") = py::dict(), py::arg("names") = py::dict(),
        py::arg("ascii") = false);
  m.def("cps", &cps, py::arg("term"), py::arg("vars") = py::dict(), py::arg("names") = py::dict(),
        py::arg("mode") = "plain", py::arg("raw") = false, py::arg("ascii") = false);
  m.def("normalize", &normalize, py::arg("term"), py::arg("vars") = py::dict(), py::arg("names") = py::dict(),
        py::arg("tvars") = py::dict(), py::arg("mode") = "plain", py::arg("ascii") = false);
  m.def("uncps", &uncps, py::arg("term"), py::arg("vars") = py::dict(), py::arg("names") = py::dict(),
        py::arg("tvars") = py::dict(), py::arg("mode") = "plain", py::arg("ascii") = false);
  m.def("eq", &eq, py::arg("lhs"), py::arg("rhs"), py::arg("vars") = py::dict(), py::arg("names") = py::dict(),
        py::arg("theory") = "p");
  m.def("focal_check", &focal_check, py::arg("term"), py::arg("vars") = py::dict(), py::arg("names") = py::dict(),
        py::arg("theory") = "p", py::arg("ascii") = false);
  m.def("free_theorem", &free_theorem_text, py::arg("type"), py::arg("params") = std::vector<std::string>{},
        py::arg("json") = false);
  m.def("catalog", &catalog_list, py::arg("ascii") = false);
  m.def("acceptance", &acceptance, py::arg("seed") = AcceptanceConfig{}.seed,
        py::arg("only") = std::vector<int>{}, py::arg("golden_dir") = std::string());
}
