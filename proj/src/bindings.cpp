#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lattheta/catalog.hpp"
#include "lattheta/designs.hpp"
#include "lattheta/modforms.hpp"
#include "lattheta/rootsys.hpp"
#include "lattheta/shells.hpp"
#include "lattheta/strength.hpp"

namespace py = pybind11;
using namespace lattheta;

namespace {

std::vector<std::pair<long long, std::string>> series_terms(const QSeries& s) {
    std::vector<std::pair<long long, std::string>> out;
    for (const auto& [e, c] : s.terms()) out.emplace_back(e, rational_str(c));
    return out;
}

FamilyDescriptor family_by_name(const std::string& name, int n, int h) {
    if (name == "cubic") return FamilyDescriptor::cubic(n);
    if (name == "witt") return FamilyDescriptor::witt(n);
    if (name == "e8") return FamilyDescriptor::e8();
    if (name == "rank16") return FamilyDescriptor::rank16();
    if (name == "leech") return FamilyDescriptor::leech();
    if (name == "niemeier") return FamilyDescriptor::niemeier(h);
    if (name == "long-shadow") return FamilyDescriptor::long_shadow_min2(n);
    if (name == "shorter-leech") return FamilyDescriptor::shorter_leech();
    throw domain_error("unknown family: " + name);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact theta series and spherical design strengths of selfdual lattices";

    py::register_exception<domain_error>(m, "DomainError");
    py::register_exception<resource_error>(m, "ResourceError");
    py::register_exception<parse_error>(m, "FormParseError");

    m.def(
        "expand_form",
        [](const std::string& expr, long cutoff) {
            return series_terms(expand(parse_form(expr), cutoff * kQStep));
        },
        py::arg("expr"), py::arg("cutoff") = 1200,
        "q-expansion of a form expression; terms as (eighths, coefficient) pairs");

    m.def(
        "coefficient",
        [](const std::string& expr, const std::string& exponent, long cutoff) {
            Rational mm = parse_rational(exponent);
            Rational scaled = mm * static_cast<long>(kQStep);
            if (scaled.get_den() != 1) throw domain_error("exponent off the 1/8 grid");
            return rational_str(
                expand(parse_form(expr), cutoff * kQStep).coeff(scaled.get_num().get_si()));
        },
        py::arg("expr"), py::arg("exponent"), py::arg("cutoff") = 1200);

    m.def(
        "verify_identity",
        [](const std::string& lhs, const std::string& rhs, long cutoff) {
            return verify_identity(parse_form(lhs), parse_form(rhs), cutoff * kQStep).equal;
        },
        py::arg("lhs"), py::arg("rhs"), py::arg("cutoff") = 1200);

    m.def(
        "shell_count",
        [](const std::string& lattice, const std::string& norm, bool shadow) -> std::size_t {
            Lattice l = Lattice::parse_spec(lattice);
            Rational mm = parse_rational(norm);
            if (shadow) return count_coset_shell(l.shadow_coset(), mm);
            return count_shell(l, mm);
        },
        py::arg("lattice"), py::arg("norm"), py::arg("shadow") = false);

    m.def(
        "shell_vectors",
        [](const std::string& lattice, const std::string& norm) {
            Lattice l = Lattice::parse_spec(lattice);
            Shell s = enumerate_shell(l, parse_rational(norm));
            std::vector<std::vector<std::string>> out;
            for (std::size_t i = 0; i < s.size(); ++i) {
                std::vector<std::string> row;
                for (const Rational& x : s.vector_at(i)) row.push_back(rational_str(x));
                out.push_back(std::move(row));
            }
            return out;
        },
        py::arg("lattice"), py::arg("norm"));

    m.def(
        "lattice_invariants",
        [](const std::string& lattice) {
            LatticeInvariants inv = Lattice::parse_spec(lattice).invariants();
            py::dict d;
            d["selfdual"] = inv.selfdual;
            d["even"] = inv.even;
            d["sigma"] = inv.sigma;
            d["min_norm"] = rational_str(inv.min_norm);
            d["p"] = inv.p;
            d["root_system"] = inv.root_system;
            d["full_root_system"] = inv.full_root_system;
            return d;
        },
        py::arg("lattice"));

    m.def(
        "kernel_strength",
        [](const std::string& lattice, const std::string& norm, bool shadow, int max_degree) {
            Lattice l = Lattice::parse_spec(lattice);
            Rational mm = parse_rational(norm);
            Shell shell =
                shadow ? enumerate_coset_shell(l.shadow_coset(), mm) : enumerate_shell(l, mm);
            StrengthVerdict v = strength(uniform_weights(shell), max_degree);
            py::dict d;
            d["strength"] = v.display();
            d["strength_times_two"] = v.strength_times_two;
            d["exact"] = v.exactness == StrengthVerdict::Exactness::exact;
            return d;
        },
        py::arg("lattice"), py::arg("norm"), py::arg("shadow") = false,
        py::arg("max_degree") = 16);

    m.def(
        "family_strength",
        [](const std::string& family, int n, int h, const std::string& norm, bool shadow,
           int max_degree, long cutoff) {
            ShellReport r = shell_strength(family_by_name(family, n, h), parse_rational(norm),
                                           shadow, max_degree, cutoff * kQStep);
            py::dict d;
            d["norm"] = rational_str(r.norm);
            d["shell_size"] = r.shell_size.get_str();
            d["empty"] = r.empty;
            d["strength"] = r.verdict.display();
            d["strength_times_two"] = r.verdict.strength_times_two;
            d["exact"] = r.verdict.exactness == StrengthVerdict::Exactness::exact;
            return d;
        },
        py::arg("family"), py::arg("n"), py::arg("h"), py::arg("norm"), py::arg("shadow") = false,
        py::arg("max_degree") = 16, py::arg("cutoff") = 1200);

    m.def(
        "scan_zeros",
        [](const std::string& form, long max_m, const std::string& expect) {
            std::optional<std::string> pattern;
            if (!expect.empty()) pattern = expect;
            ScanResult r = scan_zeros(form, max_m * kQStep, pattern);
            py::dict d;
            std::vector<std::string> zeros;
            for (const Rational& z : r.zeros) zeros.push_back(rational_str(z));
            d["zeros"] = zeros;
            d["pass_exact"] = r.pass(true);
            d["pass_contains"] = r.pass(false);
            return d;
        },
        py::arg("form"), py::arg("max_m") = 1200, py::arg("expect") = "");

    m.def(
        "tau",
        [](long max_m) {
            TauScan scan = tau_scan(max_m);
            std::vector<std::string> out;
            for (const Integer& t : scan.tau) out.push_back(t.get_str());
            return out;
        },
        py::arg("max_m") = 100);

    m.def(
        "gegenbauer_coefficients",
        [](int n, int j) {
            std::vector<std::string> out;
            for (const Rational& c : gegenbauer(n, j).coefficients())
                out.push_back(rational_str(c));
            return out;
        },
        py::arg("n"), py::arg("j"));

    m.def(
        "classify_root_systems",
        [](int two_j, int n_max, int h_max) {
            std::vector<std::string> names;
            for (const auto& e : classify(two_j, n_max, h_max))
                for (const auto& s : e.systems) names.push_back(s.name());
            return names;
        },
        py::arg("two_j"), py::arg("n_max") = 60, py::arg("h_max") = 60);

    m.def(
        "growth_certificate",
        [](const std::string& preset, long n, long target) {
            Exponent cutoff = (target + 1) * kQStep;
            QSeries phi = preset == "shadow" ? growth_phi_shadow(cutoff) : growth_phi_cubic(cutoff);
            QSeries psi = preset == "shadow" ? growth_psi_shadow(cutoff) : growth_psi_cubic(cutoff);
            GrowthCertificate cert = lattheta::growth_certificate(phi, psi, n, target);
            py::dict d;
            d["n"] = cert.n;
            d["certified"] = cert.certified;
            d["reached_target"] = cert.reached_target;
            return d;
        },
        py::arg("preset"), py::arg("n"), py::arg("target"));

    m.attr("__version__") = "0.1.0";
}
