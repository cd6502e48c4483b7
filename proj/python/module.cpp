#include "biorder/cli.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace py = pybind11;

namespace {

// Run one CLI command with --json and hand back (exit_code, report_json).
std::pair<int, std::string> run_json(std::vector<std::string> args)
{
    args.insert(args.begin(), "--json");
    std::ostringstream out, err;
    const int code = biorder::cli::run(args, out, err);
    if (out.str().empty())
        throw std::runtime_error(err.str().empty() ? "command produced no report" : err.str());
    return {code, out.str()};
}

std::string expect_report(std::vector<std::string> args)
{
    auto [code, report] = run_json(std::move(args));
    (void)code; // the report carries exit_code
    return report;
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Exact bi-orderability toolkit: polynomial factorization, Sturm "
              "root isolation, special polynomials, invariant orders on Z^n, "
              "fibred-knot screening, and invariant free-group orders.";
    m.attr("__version__") = "0.1.0";

    m.def("factor", [](const std::string& poly) { return expect_report({"factor", poly}); },
          py::arg("poly"), "Factor a polynomial over Q; returns a JSON report string.");
    m.def("roots",
          [](const std::string& poly, const std::string& range) {
              std::vector<std::string> args{"roots", poly};
              if (!range.empty()) {
                  args.push_back("--range");
                  args.push_back(range);
              }
              return expect_report(std::move(args));
          },
          py::arg("poly"), py::arg("range") = "",
          "Count and isolate real roots, optionally in an open range \"a,b\".");
    m.def("special", [](const std::string& poly) { return expect_report({"special", poly}); },
          py::arg("poly"), "Classify a polynomial against the special conditions.");
    m.def("abelian_check",
          [](const std::string& matrixFile) {
              return expect_report({"abelian", "check", matrixFile});
          },
          py::arg("matrix_file"),
          "Decide whether the matrix preserves a bi-ordering of Z^n.");
    m.def("abelian_sign",
          [](const std::string& matrixFile, const std::string& vec) {
              return expect_report({"abelian", "sign", matrixFile, vec});
          },
          py::arg("matrix_file"), py::arg("vector"),
          "Sign of an integer vector under the constructed invariant order.");
    m.def("knot_verdict",
          [](const std::string& laurent) { return expect_report({"knot", "verdict", laurent}); },
          py::arg("laurent"), "Orderability verdict for an Alexander polynomial.");
    m.def("knot_conway",
          [](const std::string& laurent, const std::string& convention) {
              return expect_report({"knot", "conway", laurent, "--convention", convention});
          },
          py::arg("laurent"), py::arg("convention") = "paper",
          "Convert an Alexander polynomial to its Conway form.");
    m.def("free_companion",
          [](const std::string& poly) { return expect_report({"free", "companion", poly}); },
          py::arg("poly"), "Companion automorphism of a monic polynomial with constant term -1.");
    m.def("free_compare",
          [](const std::string& endoFile, const std::string& w1, const std::string& w2,
             int depth) {
              return expect_report({"free", "compare", endoFile, w1, w2, "--depth",
                                    std::to_string(depth)});
          },
          py::arg("endo_file"), py::arg("w1"), py::arg("w2"), py::arg("depth") = 4,
          "Compare two words under the invariant order of the endomorphism.");
    m.def("free_verify_products",
          [](const std::string& matrixFile, int n, double tol) {
              char tolBuf[40];
              std::snprintf(tolBuf, sizeof(tolBuf), "%.17g", tol);
              return expect_report({"free", "verify-products", matrixFile, std::to_string(n),
                                    "--tol", tolBuf});
          },
          py::arg("matrix_file"), py::arg("n"), py::arg("tol") = 1e-8,
          "Check tensor-power eigenvalues against n-fold eigenvalue products.");
    m.def("run_cli",
          [](const std::vector<std::string>& args) {
              std::ostringstream out, err;
              const int code = biorder::cli::run(args, out, err);
              return py::make_tuple(code, out.str(), err.str());
          },
          py::arg("args"), "Run a raw CLI argument vector; returns (exit_code, stdout, stderr).");
}
