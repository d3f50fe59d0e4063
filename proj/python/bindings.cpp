#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cli.hpp"
#include "wittray/error.hpp"
#include "wittray/kgroup.hpp"
#include "wittray/serialize.hpp"
#include "wittray/witt.hpp"

namespace py = pybind11;
using namespace wittray;

namespace {

kgroup::Expr named_formula(const std::string& which, int n) {
  if (which == "fundamental") return kgroup::fundamental_theorem(n);
  if (which == "poly") return kgroup::polynomial_decomposition(n);
  if (which == "laurent") return kgroup::davis_laurent(n);
  if (which == "nkpower") return kgroup::nk_power(n);
  if (which == "relative") return kgroup::restrict_to_closed_orthant(kgroup::davis_laurent(n));
  if (which == "rebundle") return kgroup::rebundle(kgroup::polynomial_decomposition(n));
  throw Error(ErrorCode::InvalidArgument, "kgroup-calculus", "unknown formula: " + which);
}

kgroup::RaySet ray_set(const std::string& kind, int dim) {
  if (kind == "lattice") return kgroup::RaySet::lattice(dim);
  if (kind == "closed_orthant") return kgroup::RaySet::closed_orthant(dim);
  if (kind == "positive_orthant") return kgroup::RaySet::positive_orthant(dim);
  throw Error(ErrorCode::InvalidArgument, "kgroup-calculus", "unknown ray set: " + kind);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Native core of the wittray package";

  static py::exception<Error> error_type(m, "WittrayError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      const io::Json j{{"code", error_code_name(e.code())}, {"module", e.module()}, {"message", e.what()}};
      error_type(j.dump().c_str());
    }
  });

  m.def(
      "cli",
      [](const std::vector<std::string>& args) {
        std::vector<const char*> argv{"wittray"};
        for (const auto& a : args) argv.push_back(a.c_str());
        std::ostringstream out, err;
        int code = 0;
        {
          py::gil_scoped_release release;
          code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command-line front end in-process; returns (status, stdout, stderr).");

  m.def(
      "witt",
      [](const std::string& op, const std::string& input, const std::string& other, std::int64_t mult) {
        const auto parsed = io::vector_from_json(io::Json::parse(input));
        auto second = [&] { return io::witt_from_json(io::Json::parse(other)); };
        auto need_witt = [&] {
          if (parsed.ghost) throw Error(ErrorCode::Parse, "cli", "expected Witt coordinates");
          return parsed.witt;
        };
        io::Json out;
        if (op == "add") out = io::to_json(add(need_witt(), second()));
        else if (op == "sub") out = io::to_json(sub(need_witt(), second()));
        else if (op == "mul") out = io::to_json(mul(need_witt(), second()));
        else if (op == "neg") out = io::to_json(neg(need_witt()));
        else if (op == "ghost") out = io::to_json(ghost(need_witt()));
        else if (op == "from-ghost") {
          if (!parsed.ghost) throw Error(ErrorCode::Parse, "cli", "expected ghost components");
          out = io::to_json(from_ghost(parsed.ghost_components));
        } else if (op == "frobenius") out = io::to_json(frobenius(mult, need_witt()));
        else if (op == "verschiebung") out = io::to_json(verschiebung(mult, need_witt()));
        else throw Error(ErrorCode::InvalidArgument, "witt-ring", "unknown operation: " + op);
        return out.dump();
      },
      py::arg("op"), py::arg("input"), py::arg("other") = "", py::arg("m") = 0,
      "Witt-vector operation on JSON documents; returns a JSON document.");

  m.def(
      "kdecomp",
      [](const std::string& which, int n, const std::string& q, std::int64_t height, const std::string& format,
         bool with_ring) {
        kgroup::Expr e = named_formula(which, n);
        if (height > 0) e = kgroup::instantiate_rays(e, height);
        kgroup::RenderOptions opts;
        opts.q = q;
        opts.with_ring = with_ring;
        if (format == "latex") return kgroup::to_latex(e, opts);
        if (format == "json") return io::to_json(e).dump();
        return kgroup::to_text(e, opts);
      },
      py::arg("which"), py::arg("n"), py::arg("q") = "q", py::arg("height") = 0, py::arg("format") = "text",
      py::arg("with_ring") = false, "Renders a K-group decomposition formula.");

  m.def(
      "wreath_orbit",
      [](int n, int r, bool symmetric) {
        const auto o = symmetric ? kgroup::symmetric_orbit(n, r) : kgroup::wreath_orbit(n, r);
        return py::make_tuple(py::int_(py::str(o.orbit_size.get_str())),
                              py::int_(py::str(o.stabilizer_order.get_str())), o.enumerated);
      },
      py::arg("n"), py::arg("r"), py::arg("symmetric") = false,
      "(orbit size, stabilizer order, enumerated) for R_r under W_n or S_n.");

  m.def(
      "rays",
      [](const std::string& kind, int dim, std::int64_t height) {
        return kgroup::enumerate_rays(ray_set(kind, dim), height);
      },
      py::arg("kind"), py::arg("dim"), py::arg("height"), "Rays of Z^n, N^m or N_+^m up to a height.");
}
