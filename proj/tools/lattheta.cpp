#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lattheta/catalog.hpp"
#include "lattheta/designs.hpp"
#include "lattheta/modforms.hpp"
#include "lattheta/rootsys.hpp"
#include "lattheta/shells.hpp"
#include "lattheta/strength.hpp"

using namespace lattheta;
using nlohmann::ordered_json;

namespace {

constexpr const char* kVersion = "0.1.0";

struct GlobalOptions {
    long cutoff = 1200;  // q-steps
    int threads = 1;
    std::string format = "text";
    std::optional<std::string> catalog_path;
    Exponent cutoff_eighths() const { return cutoff * kQStep; }
};

ordered_json report_header(const GlobalOptions& g) {
    ordered_json j;
    j["tool"] = "lattheta";
    j["version"] = kVersion;
    j["cutoff"] = g.cutoff;
    return j;
}

std::vector<Rational> parse_norms(const std::string& spec, const std::string& mod_filter) {
    std::vector<Rational> norms;
    std::string cur;
    std::vector<std::string> items;
    for (char c : spec) {
        if (c == ',') {
            items.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    items.push_back(cur);
    for (const std::string& item : items) {
        auto dots = item.find("..");
        if (dots == std::string::npos) {
            norms.push_back(parse_rational(item));
            continue;
        }
        Rational lo = parse_rational(item.substr(0, dots));
        Rational hi = parse_rational(item.substr(dots + 2));
        for (Rational m = lo; m <= hi; m += 1) norms.push_back(m);
    }
    if (!mod_filter.empty()) {
        auto comma = mod_filter.find(',');
        if (comma == std::string::npos) throw parse_error("--mod expects r,k");
        long r = std::stol(mod_filter.substr(0, comma));
        long k = std::stol(mod_filter.substr(comma + 1));
        std::vector<Rational> filtered;
        for (const Rational& m : norms)
            if (m.get_den() == 1 && ((m.get_num().get_si() - r) % k + k) % k == 0)
                filtered.push_back(m);
        norms = std::move(filtered);
    }
    return norms;
}

FamilyDescriptor family_from_flags(const std::string& family, int n, int N, int p, int h,
                                   long roots2, const std::string& roots, const std::string& sub,
                                   const GlobalOptions& g) {
    if (family == "cubic") return FamilyDescriptor::cubic(n);
    if (family == "witt") return n == 4 ? FamilyDescriptor::cubic(4) : FamilyDescriptor::witt(n);
    if (family == "e8") return FamilyDescriptor::e8();
    if (family == "rank16") return FamilyDescriptor::rank16();
    if (family == "leech") return FamilyDescriptor::leech();
    if (family == "niemeier") {
        if (!roots.empty()) return load_catalog(g.catalog_path).even24_family(roots);
        return h == 0 ? FamilyDescriptor::leech() : FamilyDescriptor::niemeier(h);
    }
    if (family == "long-shadow") {
        if (!roots.empty()) {
            Catalog cat = load_catalog(g.catalog_path);
            for (const auto& e : cat.long_shadow) {
                if (e.roots != roots) continue;
                if (e.n == 8) return FamilyDescriptor::e8();
                if (e.n == 23) return FamilyDescriptor::shorter_leech();
                return FamilyDescriptor::long_shadow_min2(e.n);
            }
            throw domain_error("no long-shadow lattice with roots " + roots);
        }
        return FamilyDescriptor::long_shadow_min2(n);
    }
    if (family == "shorter-leech") return FamilyDescriptor::shorter_leech();
    if (family == "min1") return FamilyDescriptor::long_shadow_min1(p, N, h);
    if (family == "odd24") {
        if (sub == "se") return FamilyDescriptor::odd24(FamilyDescriptor::Case::strongly_eutactic, h);
        if (sub == "nonse")
            return roots2 >= 0
                       ? FamilyDescriptor::odd24_counted(roots2)
                       : FamilyDescriptor::odd24(FamilyDescriptor::Case::not_strongly_eutactic, h);
        if (sub == "empty") return FamilyDescriptor::odd24(FamilyDescriptor::Case::empty_roots, 0);
        throw domain_error("odd24 needs --case se|nonse|empty");
    }
    if (family == "residual") {
        auto which = sub == "i" ? FamilyDescriptor::Case::p0_nonse
                   : sub == "ii" ? FamilyDescriptor::Case::p_se
                   : sub == "iii" ? FamilyDescriptor::Case::p_nonse
                                  : FamilyDescriptor::Case::none;
        if (which == FamilyDescriptor::Case::none)
            throw domain_error("residual needs --case i|ii|iii");
        if (roots2 >= 0) return FamilyDescriptor::residual_counted(which, n, N, roots2);
        return FamilyDescriptor::residual(which, n, N, h);
    }
    throw domain_error("unknown family: " + family);
}

int run_theta(const GlobalOptions& g, const std::string& form, const std::string& family,
              int n, int N, int p, int h, long roots2, const std::string& roots,
              const std::string& sub, bool shadowed, long terms) {
    ThetaPolynomial poly;
    std::string label;
    if (!form.empty()) {
        poly = parse_form(form);
        label = form;
    } else {
        FamilyDescriptor fd = family_from_flags(family, n, N, p, h, roots2, roots, sub, g);
        poly = family_theta(fd);
        label = fd.label;
    }
    if (shadowed) {
        poly = shadow(poly);
        label = "Sh(" + label + ")";
    }
    QSeries series = expand(poly, g.cutoff_eighths());
    if (g.format == "json") {
        ordered_json j = report_header(g);
        j["form"] = label;
        j["series"] = ordered_json::parse(series.to_json());
        std::cout << j.dump() << "\n";
    } else {
        std::cout << label << " = " << series.pretty(static_cast<std::size_t>(terms)) << "\n";
    }
    return 0;
}

int run_shells(const GlobalOptions& g, const std::string& lattice_spec, const std::string& norm,
               bool shadowed, bool tsv, bool count_only, std::size_t ceiling) {
    Lattice lattice = Lattice::parse_spec(lattice_spec);
    Rational m = parse_rational(norm);
    ShellOptions opt;
    opt.ceiling = ceiling;
    std::optional<std::vector<Rational>> shift;
    if (shadowed) {
        ShadowCoset coset = lattice.shadow_coset();
        if (!coset.trivial) shift = coset.shift_coeff;
    }
    if (count_only) {
        std::size_t count = count_shell(lattice, m, shift, opt);
        if (g.format == "json") {
            ordered_json j = report_header(g);
            j["lattice"] = lattice.name();
            j["norm"] = rational_str(m);
            j["shadow"] = shadowed;
            j["count"] = count;
            std::cout << j.dump() << "\n";
        } else {
            std::cout << lattice.name() << (shadowed ? " shadow" : "") << " shell " << rational_str(m)
                      << ": " << count << " vectors\n";
        }
        return 0;
    }
    Shell shell = enumerate_shell(lattice, m, shift, opt);
    if (tsv || g.format == "tsv") {
        std::cout << shell.to_tsv();
        return 0;
    }
    if (g.format == "json") {
        ordered_json j = report_header(g);
        j["lattice"] = lattice.name();
        j["norm"] = rational_str(m);
        j["shadow"] = shadowed;
        j["count"] = shell.size();
        std::cout << j.dump() << "\n";
    } else {
        std::cout << lattice.name() << (shadowed ? " shadow" : "") << " shell " << rational_str(m)
                  << ": " << shell.size() << " vectors\n";
    }
    return 0;
}

int run_strength(const GlobalOptions& g, const std::string& family, int n, int N, int p, int h,
                 long roots2, const std::string& roots, const std::string& sub,
                 const std::string& norms_spec, const std::string& mod_filter, bool shadowed,
                 int max_degree, bool summary) {
    FamilyDescriptor fd = family_from_flags(family, n, N, p, h, roots2, roots, sub, g);
    std::vector<Rational> norms;
    if (norms_spec.empty()) {
        Rational lo = shadowed ? fd.shadow_min_norm() : Rational(1);
        if (lo <= 0) lo += 2;
        for (Rational m = lo; m <= g.cutoff; m += (shadowed ? 2 : 1)) norms.push_back(m);
    } else {
        norms = parse_norms(norms_spec, mod_filter);
        if (shadowed) {
            std::vector<Rational> grid;
            for (const Rational& m : norms) {
                Rational r = (m - fd.shadow_min_norm()) / 2;
                if (r >= 0 && r.get_den() == 1) grid.push_back(m);
            }
            norms = std::move(grid);
        }
    }
    std::vector<ShellReport> reports(norms.size());
    parallel_for(norms.size(), g.threads, [&](std::size_t i) {
        reports[i] = shell_strength(fd, norms[i], shadowed, max_degree, g.cutoff_eighths());
    });
    if (summary) {
        // reproduction table: norms grouped by verdict
        std::map<std::string, std::vector<std::string>> groups;
        for (std::size_t i = 0; i < norms.size(); ++i) {
            std::string key = reports[i].empty ? "empty" : reports[i].verdict.display();
            groups[key].push_back(rational_str(norms[i]));
        }
        if (g.format == "json") {
            ordered_json j = report_header(g);
            j["family"] = fd.label;
            j["shadow"] = shadowed;
            j["max_degree"] = max_degree;
            ordered_json table;
            for (const auto& [key, list] : groups) {
                auto arr = ordered_json::array();
                for (const auto& v : list) arr.push_back(v);
                table[key] = std::move(arr);
            }
            j["strengths"] = std::move(table);
            std::cout << j.dump() << "\n";
        } else {
            std::cout << (shadowed ? "Sh(" + fd.label + ")" : fd.label) << ", norms "
                      << rational_str(norms.front()) << ".." << rational_str(norms.back())
                      << ":\n";
            for (const auto& [key, list] : groups) {
                std::cout << "  " << key << " (" << list.size() << "):";
                for (std::size_t i = 0; i < std::min<std::size_t>(list.size(), 20); ++i)
                    std::cout << " " << list[i];
                if (list.size() > 20) std::cout << " ...";
                std::cout << "\n";
            }
        }
        return 0;
    }
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < norms.size(); ++i) {
        const Rational& m = norms[i];
        const ShellReport& report = reports[i];
        if (g.format == "json") {
            rows.push_back(ordered_json::parse(report.json()));
        } else {
            std::cout << (shadowed ? "Sh(" + fd.label + ")" : fd.label) << "_" << rational_str(m)
                      << "  size=" << report.shell_size.get_str();
            if (report.empty)
                std::cout << "  empty (design-or-empty)";
            else
                std::cout << "  strength=" << report.verdict.display()
                          << (report.verdict.exactness == StrengthVerdict::Exactness::exact
                                  ? ""
                                  : " (lower bound)");
            std::cout << "\n";
        }
    }
    if (g.format == "json") {
        ordered_json j = report_header(g);
        j["family"] = fd.label;
        j["shadow"] = shadowed;
        j["max_degree"] = max_degree;
        j["shells"] = std::move(rows);
        std::cout << j.dump() << "\n";
    }
    return 0;
}

int run_verify_design(const GlobalOptions& g, const std::string& lattice_spec,
                      const std::string& norm, bool shadowed, int max_degree,
                      const std::string& weights, std::size_t ceiling) {
    Lattice lattice = Lattice::parse_spec(lattice_spec);
    Rational m = parse_rational(norm);
    ShellOptions opt;
    opt.ceiling = ceiling;
    std::optional<std::vector<Rational>> shift;
    if (shadowed) {
        ShadowCoset coset = lattice.shadow_coset();
        if (!coset.trivial) shift = coset.shift_coeff;
    }
    Shell shell = enumerate_shell(lattice, m, shift, opt);
    if (shell.size() == 0) throw domain_error("empty shell: nothing to verify");
    WeightedSet set;
    if (weights.empty()) {
        set = uniform_weights(shell);
    } else if (weights == "hamming7") {
        set = code_orbit_weights(BinaryCode::hamming7(), shell);
    } else if (weights.rfind("even", 0) == 0) {
        set = code_orbit_weights(BinaryCode::even_weight(std::stoi(weights.substr(4))), shell);
    } else {
        throw domain_error("unknown weighting: " + weights);
    }
    StrengthVerdict verdict = strength(set, max_degree);
    if (g.format == "json") {
        ordered_json j = report_header(g);
        j["lattice"] = lattice.name();
        j["norm"] = rational_str(m);
        j["shadow"] = shadowed;
        j["size"] = shell.size();
        j["verdict"] = ordered_json::parse(verdict.json());
        std::cout << j.dump() << "\n";
    } else {
        std::cout << lattice.name() << (shadowed ? " shadow" : "") << " shell " << rational_str(m)
                  << " (" << shell.size() << " vectors): strength " << verdict.display() << "\n";
        for (const auto& f : verdict.failing_degrees)
            std::cout << "  degree " << f.degree << " kernel sum " << rational_str(f.witness)
                      << "\n";
    }
    return 0;
}

int run_scan(const GlobalOptions& g, const std::string& form, long max_m,
             const std::string& expect, bool contains_only) {
    std::optional<std::string> pattern;
    if (!expect.empty()) pattern = expect;
    ScanResult result = scan_zeros(form, max_m * kQStep, pattern);
    bool exact_match = !contains_only;
    if (g.format == "json") {
        ordered_json j = report_header(g);
        j["scan"] = ordered_json::parse(result.json());
        if (pattern) j["pass"] = result.pass(exact_match);
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "form " << form << ", zeros up to " << max_m << ":";
        std::size_t shown = 0;
        for (const Rational& z : result.zeros) {
            if (shown++ == 40) {
                std::cout << " ...";
                break;
            }
            std::cout << " " << rational_str(z);
        }
        std::cout << "\n";
        if (pattern) {
            std::cout << "predicted " << *pattern << ": "
                      << (result.pass(exact_match) ? "PASS" : "FAIL") << "\n";
            if (!result.missing.empty()) {
                std::cout << "  missing:";
                for (const Rational& z : result.missing) std::cout << " " << rational_str(z);
                std::cout << "\n";
            }
            if (!result.extras.empty()) {
                std::cout << "  extras:";
                for (const Rational& z : result.extras) std::cout << " " << rational_str(z);
                std::cout << "\n";
            }
        }
    }
    if (pattern && !result.pass(exact_match)) return 1;
    return 0;
}

int run_tau(const GlobalOptions& g, long max_m, long show) {
    TauScan scan = tau_scan(max_m);
    if (g.format == "json") {
        ordered_json j = report_header(g);
        j["max_m"] = max_m;
        j["nonvanishing"] = scan.all_nonzero();
        auto zeros = ordered_json::array();
        for (long z : scan.zeros) zeros.push_back(z);
        j["zeros"] = std::move(zeros);
        auto tau = ordered_json::array();
        for (long m = 1; m <= std::min(show, max_m); ++m) tau.push_back(scan.tau[m - 1].get_str());
        j["tau_head"] = std::move(tau);
        std::cout << j.dump() << "\n";
    } else {
        for (long m = 1; m <= std::min(show, max_m); ++m)
            std::cout << "tau(" << m << ") = " << scan.tau[m - 1].get_str() << "\n";
        if (scan.all_nonzero()) {
            std::cout << "tau(m) != 0 for all m <= " << max_m << "\n";
        } else {
            for (long z : scan.zeros) {
                std::cout << "tau(" << z << ") = 0!\n";
                for (const std::string& msg : tau_zero_implications(z))
                    std::cout << "  " << msg << "\n";
            }
        }
    }
    return scan.all_nonzero() ? 0 : 1;
}

int run_root_systems(const GlobalOptions& g, int classify_degree, int nmax, int hmax,
                     const std::string& profile, bool triples) {
    if (!profile.empty()) {
        RootSystem r = RootSystem::parse(profile);
        CoxeterProfile p = coxeter_profile(r);
        if (g.format == "json") {
            ordered_json j = report_header(g);
            j["system"] = r.name();
            j["rank"] = r.rank();
            j["size"] = r.size();
            j["strongly_eutactic"] = p.strongly_eutactic;
            if (p.coxeter) j["coxeter"] = *p.coxeter;
            std::cout << j.dump() << "\n";
        } else {
            std::cout << r.name() << ": rank " << r.rank() << ", " << r.size() << " roots, ";
            if (p.strongly_eutactic)
                std::cout << "strongly eutactic, h = " << *p.coxeter << "\n";
            else {
                std::cout << "not strongly eutactic (h in {";
                for (std::size_t i = 0; i < p.component_coxeters.size(); ++i)
                    std::cout << (i ? "," : "") << p.component_coxeters[i];
                std::cout << "})\n";
            }
        }
        return 0;
    }
    if (triples) {
        Catalog cat = load_catalog(g.catalog_path);
        auto pairs = cat.inclusion_pairs();
        ordered_json rows = ordered_json::array();
        for (const auto& entry : cat.odd24_pairs) {
            RootSystem r = RootSystem::parse(entry.r);
            RootSystem s = RootSystem::parse(entry.s);
            TripleCheck check = validate_triple(r, s, r, pairs);
            if (g.format == "json") {
                ordered_json row;
                row["R"] = entry.r;
                row["S"] = entry.s;
                row["index"] = entry.index;
                row["valid"] = check.valid;
                row["shadow2"] = check.shadow2_expected.get_str();
                rows.push_back(std::move(row));
            } else {
                std::cout << entry.r << " in " << entry.s << " [" << entry.index
                          << "]: " << (check.valid ? "OK" : "INVALID")
                          << ", |Sh(L)_2| = " << check.shadow2_expected.get_str() << "\n";
            }
        }
        if (g.format == "json") {
            ordered_json j = report_header(g);
            j["triples"] = std::move(rows);
            std::cout << j.dump() << "\n";
        }
        return 0;
    }
    auto entries = classify(classify_degree, nmax, hmax);
    if (g.format == "json") {
        ordered_json j = report_header(g);
        j["degree"] = classify_degree;
        auto rows = ordered_json::array();
        for (const auto& e : entries) {
            ordered_json row;
            row["n"] = e.n;
            if (e.h)
                row["h"] = *e.h;
            else
                row["h"] = "all";
            auto systems = ordered_json::array();
            for (const auto& s : e.systems) systems.push_back(s.name());
            row["systems"] = std::move(systems);
            rows.push_back(std::move(row));
        }
        j["solutions"] = std::move(rows);
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "(C_" << classify_degree << ") solutions with n <= " << nmax << ":\n";
        for (const auto& e : entries) {
            std::cout << "  (n,h) = (" << e.n << ", " << (e.h ? std::to_string(*e.h) : "any")
                      << ")";
            if (!e.systems.empty()) {
                std::cout << "  systems:";
                for (const auto& s : e.systems) std::cout << " " << s.name();
            }
            std::cout << "\n";
        }
    }
    return 0;
}

int run_certify_growth(const GlobalOptions& g, const std::string& preset, long n, long target,
                       const std::string& phi_expr, const std::string& psi_expr) {
    Exponent cutoff = std::max<Exponent>(g.cutoff_eighths(), (target + 1) * kQStep);
    QSeries phi, psi;
    std::string label = preset;
    if (preset == "cubic") {
        phi = growth_phi_cubic(cutoff);
        psi = growth_psi_cubic(cutoff);
    } else if (preset == "shadow") {
        phi = growth_phi_shadow(cutoff);
        psi = growth_psi_shadow(cutoff);
    } else if (!phi_expr.empty() && !psi_expr.empty()) {
        phi = expand(parse_form(phi_expr), cutoff);
        psi = expand(parse_form(psi_expr), cutoff);
        label = phi_expr + " * (" + psi_expr + ")^n";
    } else {
        throw domain_error("certify-growth needs --preset cubic|shadow or --phi/--psi");
    }
    GrowthCertificate cert = growth_certificate(phi, psi, n, target);
    if (g.format == "json") {
        ordered_json j = report_header(g);
        j["preset"] = label;
        j["n"] = cert.n;
        j["certified"] = cert.certified;
        j["target"] = target;
        j["reached_target"] = cert.reached_target;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << label << ": M_" << n << " >= " << cert.certified << " (target " << target
                  << "): " << (cert.reached_target ? "CERTIFIED" : "NOT REACHED") << "\n";
    }
    return cert.reached_target ? 0 : 1;
}

int run_catalog(const GlobalOptions& g, const std::string& list) {
    Catalog cat = load_catalog(g.catalog_path);
    ordered_json j = report_header(g);
    if (list.empty() || list == "even24") {
        auto rows = ordered_json::array();
        for (const auto& e : cat.even24) rows.push_back({{"roots", e.roots}, {"h", e.h}});
        j["even24"] = std::move(rows);
    }
    if (list.empty() || list == "long-shadow") {
        auto rows = ordered_json::array();
        for (const auto& e : cat.long_shadow)
            rows.push_back({{"roots", e.roots}, {"n", e.n}, {"h", e.h}});
        j["long_shadow"] = std::move(rows);
    }
    if (list.empty() || list == "odd24-pairs") {
        auto rows = ordered_json::array();
        for (const auto& e : cat.odd24_pairs)
            rows.push_back({{"R", e.r}, {"S", e.s}, {"index", e.index}});
        j["odd24_pairs"] = std::move(rows);
    }
    if (g.format == "json") {
        std::cout << j.dump() << "\n";
    } else {
        if (j.contains("even24")) {
            std::cout << "even rank-24 lattices (roots, h):\n";
            for (const auto& e : cat.even24) std::cout << "  " << e.roots << "  " << e.h << "\n";
        }
        if (j.contains("long_shadow")) {
            std::cout << "long-shadow lattices of minimum >= 2 (roots, n, h):\n";
            for (const auto& e : cat.long_shadow)
                std::cout << "  " << e.roots << "  " << e.n << "  " << e.h << "\n";
        }
        if (j.contains("odd24_pairs")) {
            std::cout << "strongly eutactic odd rank-24 pairs R in S [index]:\n";
            for (const auto& e : cat.odd24_pairs)
                std::cout << "  " << e.r << " in " << e.s << "  [" << e.index << "]\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "theta series, shell enumeration and spherical design strengths of selfdual lattices"};
    app.require_subcommand(1);

    GlobalOptions g;
    app.add_option("--cutoff", g.cutoff, "truncation exponent in integer q-steps")
        ->capture_default_str();
    app.add_option("--threads", g.threads, "worker cap for scans")->capture_default_str();
    app.add_option("--format", g.format, "text|json|tsv")->capture_default_str();
    app.add_option("--catalog", g.catalog_path, "catalog JSON path (overrides LATTHETA_CATALOG)");

    auto* theta = app.add_subcommand("theta", "expand a form or a family theta series");
    std::string t_form, t_family = "cubic", t_roots, t_sub;
    int t_n = 0, t_N = 0, t_p = 0, t_h = 0;
    long t_roots2 = -1;
    bool t_shadow = false;
    long t_terms = 10;
    theta->add_option("--form", t_form, "form expression, e.g. \"Phi*Th3^7*De8\"");
    theta->add_option("--family", t_family, "family id");
    theta->add_option("--n", t_n, "rank");
    theta->add_option("--N", t_N, "rank of the minimum-2 part");
    theta->add_option("--p", t_p, "number of Z summands");
    theta->add_option("--coxeter", t_h, "Coxeter number h");
    theta->add_option("--roots2", t_roots2, "norm-2 root count of the minimum-2 part");
    theta->add_option("--roots", t_roots, "catalog root system");
    theta->add_option("--case", t_sub, "family case");
    theta->add_flag("--shadow", t_shadow, "apply the shadow operator");
    theta->add_option("--terms", t_terms, "terms to print (text mode)");

    auto* shells = app.add_subcommand("shells", "enumerate a lattice or shadow shell");
    std::string s_lattice, s_norm;
    bool s_shadow = false, s_tsv = false, s_count = false;
    std::size_t s_ceiling = 10'000'000;
    shells->add_option("--lattice", s_lattice, "lattice spec, e.g. Z:4, W:12, Z:3+W:12")
        ->required();
    shells->add_option("--norm", s_norm, "shell norm (rational)")->required();
    shells->add_flag("--shadow", s_shadow, "enumerate the shadow coset");
    shells->add_flag("--tsv", s_tsv, "print vectors as TSV");
    shells->add_flag("--count-only", s_count, "skip materialization");
    shells->add_option("--ceiling", s_ceiling, "resource ceiling");

    auto* strength_cmd =
        app.add_subcommand("strength", "per-shell design strengths from theta coefficients");
    std::string st_family = "cubic", st_roots, st_sub, st_norms, st_mod;
    int st_n = 0, st_N = 0, st_p = 0, st_h = 0, st_degree = 16;
    long st_roots2 = -1;
    bool st_shadow = false;
    strength_cmd->add_option("--family", st_family, "family id")->required();
    strength_cmd->add_option("--n", st_n, "rank");
    strength_cmd->add_option("--N", st_N, "rank of the minimum-2 part");
    strength_cmd->add_option("--p", st_p, "number of Z summands");
    strength_cmd->add_option("--coxeter", st_h, "Coxeter number h");
    strength_cmd->add_option("--roots2", st_roots2, "norm-2 root count of the minimum-2 part");
    strength_cmd->add_option("--roots", st_roots, "catalog root system");
    strength_cmd->add_option("--case", st_sub, "family case");
    strength_cmd->add_option("--norms", st_norms, "norm list: a..b, rationals, comma separated");
    strength_cmd->add_option("--mod", st_mod, "residue filter r,k on the norm range");
    strength_cmd->add_flag("--shadow", st_shadow, "report the shadow shells");
    strength_cmd->add_option("--max-degree", st_degree, "largest even degree checked");
    bool st_summary = false;
    strength_cmd->add_flag("--summary", st_summary, "group norms by verdict (reproduction table)");

    auto* verify = app.add_subcommand("verify-design", "kernel verdict on an enumerated shell");
    std::string v_lattice, v_norm, v_weights;
    bool v_shadow = false;
    int v_degree = 16;
    std::size_t v_ceiling = 10'000'000;
    verify->add_option("--lattice", v_lattice)->required();
    verify->add_option("--norm", v_norm)->required();
    verify->add_flag("--shadow", v_shadow);
    verify->add_option("--max-degree", v_degree);
    verify->add_option("--weights", v_weights, "hamming7 or even<n> code orbit weights");
    verify->add_option("--ceiling", v_ceiling);

    auto* scan = app.add_subcommand("scan", "vanishing coefficients of a form");
    std::string sc_form, sc_expect;
    long sc_max = 1200;
    bool sc_contains_only = false;
    scan->add_option("--form", sc_form)->required();
    scan->add_option("--max", sc_max, "scan bound in q-steps");
    scan->add_option("--expect", sc_expect, "predicted zero pattern");
    scan->add_flag("--contains-only", sc_contains_only,
                   "only require predicted zeros to vanish (no extras check)");

    auto* tau = app.add_subcommand("tau", "Ramanujan tau scan");
    long tau_max = 1200, tau_show = 10;
    tau->add_option("--max", tau_max);
    tau->add_option("--show", tau_show, "values to print");

    auto* roots_cmd = app.add_subcommand("root-systems", "classification and profiles");
    int rs_classify = 4, rs_nmax = 60, rs_hmax = 60;
    std::string rs_profile;
    bool rs_triples = false;
    roots_cmd->add_option("--classify", rs_classify, "even degree 4..12");
    roots_cmd->add_option("--nmax", rs_nmax);
    roots_cmd->add_option("--hmax", rs_hmax);
    roots_cmd->add_option("--profile", rs_profile, "root system to profile");
    roots_cmd->add_flag("--triples", rs_triples, "check the odd rank-24 pair table");

    auto* growth = app.add_subcommand("certify-growth", "nonvanishing growth certificates");
    std::string gr_preset, gr_phi, gr_psi;
    long gr_n = 408, gr_target = 1200;
    growth->add_option("--preset", gr_preset, "cubic or shadow");
    growth->add_option("--n", gr_n);
    growth->add_option("--target", gr_target);
    growth->add_option("--phi", gr_phi, "phi0 form expression");
    growth->add_option("--psi", gr_psi, "psi form expression");

    auto* catalog_cmd = app.add_subcommand("catalog", "print catalog data");
    std::string cat_list;
    catalog_cmd->add_option("--list", cat_list, "even24 | long-shadow | odd24-pairs");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (theta->parsed())
            return run_theta(g, t_form, t_family, t_n, t_N, t_p, t_h, t_roots2, t_roots, t_sub,
                             t_shadow, t_terms);
        if (shells->parsed())
            return run_shells(g, s_lattice, s_norm, s_shadow, s_tsv, s_count, s_ceiling);
        if (strength_cmd->parsed())
            return run_strength(g, st_family, st_n, st_N, st_p, st_h, st_roots2, st_roots, st_sub,
                                st_norms, st_mod, st_shadow, st_degree, st_summary);
        if (verify->parsed())
            return run_verify_design(g, v_lattice, v_norm, v_shadow, v_degree, v_weights,
                                     v_ceiling);
        if (scan->parsed()) return run_scan(g, sc_form, sc_max, sc_expect, sc_contains_only);
        if (tau->parsed()) return run_tau(g, tau_max, tau_show);
        if (roots_cmd->parsed())
            return run_root_systems(g, rs_classify, rs_nmax, rs_hmax, rs_profile, rs_triples);
        if (growth->parsed())
            return run_certify_growth(g, gr_preset, gr_n, gr_target, gr_phi, gr_psi);
        if (catalog_cmd->parsed()) return run_catalog(g, cat_list);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
