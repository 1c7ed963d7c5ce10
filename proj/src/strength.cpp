#include "lattheta/strength.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace lattheta {

namespace {

ThetaPolynomial th3_pow(int e) { return ThetaPolynomial::word({0, e, 0}); }
ThetaPolynomial de8_pow_th3(int i, int s) {
    // De8^i Th3^s as a single word (1/16)^i Th2^(4i) Th3^s Th4^(4i)
    Rational c(1);
    for (int t = 0; t < i; ++t) c /= 16;
    return ThetaPolynomial::word({4 * i, s, 4 * i}, c);
}

}  // namespace

int FamilyDescriptor::k() const {
    switch (kind) {
        case Kind::cubic:
            return 0;
        case Kind::witt:
            return n % 8 == 0 ? n / 8 : (n - 4) / 8;
        case Kind::even_e8:
            return 1;
        case Kind::even_rank16:
            return 2;
        case Kind::leech:
        case Kind::niemeier:
            return 3;
        case Kind::long_shadow_min2:
        case Kind::shorter_leech:
        case Kind::long_shadow_min1:
            return 1;
        case Kind::odd24:
        case Kind::residual:
            return 2;
    }
    return 0;
}

Rational FamilyDescriptor::family_min() const {
    switch (kind) {
        case Kind::cubic:
            return 1;
        case Kind::witt:
            return 2;
        case Kind::even_e8:
        case Kind::even_rank16:
        case Kind::niemeier:
            return 2;
        case Kind::leech:
            return 4;
        case Kind::long_shadow_min2:
        case Kind::odd24:
            return 2;
        case Kind::shorter_leech:
            return 3;
        case Kind::long_shadow_min1:
            return 1;
        case Kind::residual:
            return n > N ? 1 : 2;
    }
    return 1;
}

bool FamilyDescriptor::even_family() const {
    switch (kind) {
        case Kind::even_e8:
        case Kind::even_rank16:
        case Kind::leech:
        case Kind::niemeier:
            return true;
        case Kind::witt:
            return n % 8 == 0;
        default:
            return false;
    }
}

FamilyDescriptor FamilyDescriptor::cubic(int n) {
    if (n < 1) throw domain_error("cubic family needs n >= 1");
    FamilyDescriptor fd;
    fd.kind = Kind::cubic;
    fd.n = n;
    fd.N = 0;
    fd.h = 0;
    fd.label = "Z" + std::to_string(n);
    return fd;
}

FamilyDescriptor FamilyDescriptor::witt(int n) {
    if (n < 8 || n % 4 != 0)
        throw domain_error("Witt family tables cover multiples of 4 with n >= 8 (W4 = Z4)");
    FamilyDescriptor fd;
    fd.kind = Kind::witt;
    fd.n = n;
    fd.N = n;
    fd.h = 2 * (n - 1);  // D_n root system
    fd.label = "W" + std::to_string(n);
    return fd;
}

FamilyDescriptor FamilyDescriptor::e8() {
    FamilyDescriptor fd;
    fd.kind = Kind::even_e8;
    fd.n = 8;
    fd.N = 8;
    fd.h = 30;
    fd.label = "E8";
    return fd;
}

FamilyDescriptor FamilyDescriptor::rank16() {
    FamilyDescriptor fd;
    fd.kind = Kind::even_rank16;
    fd.n = 16;
    fd.N = 16;
    fd.label = "rank16-even";
    return fd;
}

FamilyDescriptor FamilyDescriptor::leech() {
    FamilyDescriptor fd;
    fd.kind = Kind::leech;
    fd.n = 24;
    fd.N = 24;
    fd.h = 0;
    fd.label = "Leech";
    return fd;
}

FamilyDescriptor FamilyDescriptor::niemeier(int h) {
    if (h < 1) throw domain_error("Niemeier lattices have h >= 2 (h = 0 is the Leech lattice)");
    FamilyDescriptor fd;
    fd.kind = Kind::niemeier;
    fd.n = 24;
    fd.N = 24;
    fd.h = h;
    fd.label = "Niemeier(h=" + std::to_string(h) + ")";
    return fd;
}

FamilyDescriptor FamilyDescriptor::long_shadow_min2(int n) {
    if (n < 12 || n > 22) throw domain_error("long-shadow minimum-2 lattices have 12 <= n <= 22");
    FamilyDescriptor fd;
    fd.kind = Kind::long_shadow_min2;
    fd.n = n;
    fd.N = n;
    fd.h = 2 * (23 - n);
    fd.label = "long-shadow(n=" + std::to_string(n) + ")";
    return fd;
}

FamilyDescriptor FamilyDescriptor::shorter_leech() {
    FamilyDescriptor fd;
    fd.kind = Kind::shorter_leech;
    fd.n = 23;
    fd.N = 23;
    fd.h = 0;
    fd.label = "shorter-Leech";
    return fd;
}

FamilyDescriptor FamilyDescriptor::long_shadow_min1(int p, int N, int h) {
    if (p < 1) throw domain_error("minimum-1 long-shadow family needs p >= 1");
    FamilyDescriptor fd;
    fd.kind = Kind::long_shadow_min1;
    fd.n = p + N;
    fd.N = N;
    fd.h = h;
    if (p == 1 && N == 8)
        fd.sub = Case::z1_e8;
    else if (p == 1 && N == 23)
        fd.sub = Case::z1_shorter_leech;
    else
        fd.sub = Case::generic;
    fd.label = "Z" + std::to_string(p) + "+L" + std::to_string(N);
    return fd;
}

FamilyDescriptor FamilyDescriptor::odd24(Case which, int h) {
    FamilyDescriptor fd;
    fd.kind = Kind::odd24;
    fd.sub = which;
    fd.n = 24;
    fd.N = 24;
    fd.h = which == Case::empty_roots ? 0 : h;
    fd.label = "odd24(h=" + std::to_string(fd.h) + ")";
    return fd;
}

FamilyDescriptor FamilyDescriptor::odd24_counted(long root_count) {
    FamilyDescriptor fd;
    fd.kind = Kind::odd24;
    fd.sub = Case::not_strongly_eutactic;
    fd.n = 24;
    fd.N = 24;
    fd.L2_size = root_count;
    fd.label = "odd24(|L2|=" + std::to_string(root_count) + ")";
    return fd;
}

FamilyDescriptor FamilyDescriptor::residual(Case which, int n, int N, int h) {
    FamilyDescriptor fd;
    fd.kind = Kind::residual;
    fd.sub = which;
    fd.n = n;
    fd.N = N;
    fd.h = h;
    if (which == Case::p0_nonse && n != N)
        throw domain_error("residual case (i) has p = 0");
    if (which != Case::p0_nonse && n <= N)
        throw domain_error("residual cases (ii)/(iii) have p >= 1");
    fd.label = "residual(n=" + std::to_string(n) + ",N=" + std::to_string(N) + ")";
    return fd;
}

FamilyDescriptor FamilyDescriptor::residual_counted(Case which, int n, int N, long root_count) {
    FamilyDescriptor fd = residual(which, n, N, 0);
    fd.L2_size = root_count;
    return fd;
}

ThetaPolynomial family_theta(const FamilyDescriptor& fd) {
    using Kind = FamilyDescriptor::Kind;
    switch (fd.kind) {
        case Kind::cubic:
            return th3_pow(fd.n);
        case Kind::witt:
            return (ThetaPolynomial::word({fd.n, 0, 0}) + ThetaPolynomial::word({0, fd.n, 0}) +
                    ThetaPolynomial::word({0, 0, fd.n}))
                .scaled(Rational(1, 2));
        case Kind::even_e8:
            return forms::q();
        case Kind::even_rank16:
            return forms::q().pow(2);
        case Kind::leech:
            return forms::q().pow(3) - forms::de24().scaled(720);
        case Kind::niemeier:
            return forms::q().pow(3) - forms::de24().scaled(24 * (30 - fd.h));
        case Kind::long_shadow_min2:
        case Kind::shorter_leech:
        case Kind::long_shadow_min1:
            return th3_pow(fd.n) - de8_pow_th3(1, fd.n - 8).scaled(2 * fd.N);
        case Kind::odd24:
            // c2 = (h - 46 + 2N) N = |L2| + 48 at N = 24
            return th3_pow(24) - de8_pow_th3(1, 16).scaled(48) +
                   de8_pow_th3(2, 8).scaled(fd.root_count() + 48);
        case Kind::residual:
            return th3_pow(fd.n) - de8_pow_th3(1, fd.n - 8).scaled(2 * fd.N) +
                   de8_pow_th3(2, fd.n - 16)
                       .scaled(fd.root_count() + static_cast<long>(2 * fd.N - 46) * fd.N);
    }
    throw domain_error("unknown family");
}

namespace {

// Generic weight-graded spanning bases. Sufficient-only unless the
// family table upgrades the degree.
DegreeBasis generic_basis(const FamilyDescriptor& fd, int degree) {
    DegreeBasis basis;
    basis.tabulated = false;
    basis.independent = false;
    if (fd.even_family()) {
        int np = fd.n / 8;
        Rational min = fd.family_min();
        int m_low = static_cast<int>(Rational(min / 2).get_num().get_si());
        int shift = degree % 4 == 0 ? degree / 4 : (degree - 6) / 4;  // Q-budget
        bool with_r = degree % 4 != 0;
        int hi_num = np + shift;
        for (int i = m_low; 3 * i <= hi_num; ++i) {
            int s = hi_num - 3 * i;
            ThetaPolynomial f = forms::de24().pow(i) * forms::q().pow(s);
            if (with_r) f = forms::r() * f;
            basis.forms.push_back(std::move(f));
        }
    } else {
        int m_low = static_cast<int>(fd.family_min().get_num().get_si());
        int k = fd.k();
        if (degree % 4 == 0) {
            int hi = k + degree / 4;
            for (int i = m_low; i <= hi; ++i)
                basis.forms.push_back(de8_pow_th3(i, fd.n + 2 * degree - 8 * i));
        } else {
            int hi = k + (degree - 2) / 4;
            for (int i = m_low; i <= hi; ++i)
                basis.forms.push_back(forms::phi() * de8_pow_th3(i, fd.n + 2 * degree - 4 - 8 * i));
        }
    }
    if (basis.forms.empty()) {
        basis.zero = true;
        basis.independent = true;  // Θ_{Λ,P} = 0 is proven, not just spanned
    }
    return basis;
}

DegreeBasis tabulated_basis(std::vector<ThetaPolynomial> forms) {
    DegreeBasis b;
    b.forms = std::move(forms);
    b.independent = true;
    b.tabulated = true;
    return b;
}

DegreeBasis tabulated_zero() {
    DegreeBasis b;
    b.zero = true;
    b.independent = true;
    b.tabulated = true;
    return b;
}

ThetaPolynomial witt_degree4_form(int n) {
    ThetaPolynomial tri = ThetaPolynomial::word({4, 4, 4});
    ThetaPolynomial inner = -ThetaPolynomial::word({n - 4, 0, 0}) +
                            ThetaPolynomial::word({0, n - 4, 0}) -
                            ThetaPolynomial::word({0, 0, n - 4});
    return tri * inner;
}

ThetaPolynomial witt_degree6_form(int n) {
    ThetaPolynomial tri = ThetaPolynomial::word({4, 4, 4});
    ThetaPolynomial a = (ThetaPolynomial::word({0, 4, 0}) + ThetaPolynomial::word({0, 0, 4})) *
                        ThetaPolynomial::word({n - 4, 0, 0});
    ThetaPolynomial b = (ThetaPolynomial::word({0, 0, 4}) - ThetaPolynomial::word({4, 0, 0})) *
                        ThetaPolynomial::word({0, n - 4, 0});
    ThetaPolynomial c = (ThetaPolynomial::word({4, 0, 0}) + ThetaPolynomial::word({0, 4, 0})) *
                        ThetaPolynomial::word({0, 0, n - 4});
    return tri * (a + b - c);
}

}  // namespace

DegreeBasisTable degree_basis(const FamilyDescriptor& fd, int max_degree) {
    using Kind = FamilyDescriptor::Kind;
    using Case = FamilyDescriptor::Case;
    DegreeBasisTable table;
    table.family = fd;
    for (int d = 2; d <= max_degree; d += 2) table.by_degree[d] = generic_basis(fd, d);

    auto set = [&](int d, DegreeBasis b) {
        if (d <= max_degree) table.by_degree[d] = std::move(b);
    };

    switch (fd.kind) {
        case Kind::cubic:
            set(2, tabulated_zero());
            if (fd.n >= 2)
                set(4, tabulated_basis({de8_pow_th3(1, fd.n)}));
            else
                set(4, tabulated_zero());
            if (fd.n >= 3)
                set(6, tabulated_basis({forms::phi() * de8_pow_th3(1, fd.n)}));
            else
                set(6, tabulated_zero());
            break;
        case Kind::witt:
            set(2, tabulated_zero());
            set(4, tabulated_basis({witt_degree4_form(fd.n)}));
            set(6, tabulated_basis({witt_degree6_form(fd.n)}));
            break;
        case Kind::even_e8:
            set(2, tabulated_zero());
            set(4, tabulated_zero());
            set(6, tabulated_zero());
            set(10, tabulated_zero());
            set(8, tabulated_basis({forms::de24()}));
            set(12, tabulated_basis({forms::q() * forms::de24()}));
            set(14, tabulated_basis({forms::r() * forms::de24()}));
            set(16, tabulated_basis({forms::q().pow(2) * forms::de24()}));
            set(18, tabulated_basis({forms::r() * forms::q() * forms::de24()}));
            break;
        case Kind::even_rank16:
            set(2, tabulated_zero());
            set(6, tabulated_zero());
            set(4, tabulated_basis({forms::de24()}));
            set(8, tabulated_basis({forms::q() * forms::de24()}));
            set(10, tabulated_basis({forms::r() * forms::de24()}));
            set(12, tabulated_basis({forms::q().pow(2) * forms::de24()}));
            set(14, tabulated_basis({forms::r() * forms::q() * forms::de24()}));
            break;
        case Kind::leech:
            for (int d : {2, 4, 6, 8, 10, 14}) set(d, tabulated_zero());
            set(12, tabulated_basis({forms::de24().pow(2)}));
            set(16, tabulated_basis({forms::q() * forms::de24().pow(2)}));
            set(18, tabulated_basis({forms::r() * forms::de24().pow(2)}));
            set(20, tabulated_basis({forms::q().pow(2) * forms::de24().pow(2)}));
            set(22, tabulated_basis({forms::r() * forms::q() * forms::de24().pow(2)}));
            break;
        case Kind::niemeier:
            set(2, tabulated_zero());
            set(4, tabulated_basis({forms::q() * forms::de24()}));
            set(6, tabulated_basis({forms::r() * forms::de24()}));
            set(8, tabulated_basis({forms::q().pow(2) * forms::de24()}));
            set(10, tabulated_basis({forms::r() * forms::q() * forms::de24()}));
            break;
        case Kind::long_shadow_min2:
            set(2, tabulated_zero());
            set(4, tabulated_basis({de8_pow_th3(2, fd.n - 8)}));
            set(6, tabulated_basis({forms::phi() * de8_pow_th3(2, fd.n - 8)}));
            break;
        case Kind::shorter_leech:
            set(2, tabulated_zero());
            set(4, tabulated_zero());
            set(6, tabulated_zero());
            set(8, tabulated_basis({de8_pow_th3(3, 15)}));
            set(10, tabulated_basis({forms::phi() * de8_pow_th3(3, 15)}));
            break;
        case Kind::long_shadow_min1:
            set(2, tabulated_basis({forms::phi() * de8_pow_th3(1, fd.n - 8)}));
            if (fd.sub == Case::z1_shorter_leech) {
                set(4, tabulated_basis({de8_pow_th3(1, 24) - de8_pow_th3(2, 16).scaled(40)}));
                set(6, tabulated_basis({forms::phi() * de8_pow_th3(1, 24) -
                                    (forms::phi() * de8_pow_th3(2, 16)).scaled(16)}));
            } else if (fd.sub == Case::generic) {
                set(4, tabulated_basis({de8_pow_th3(1, fd.n), de8_pow_th3(2, fd.n - 8)}));
                set(6, tabulated_basis({forms::phi() * de8_pow_th3(1, fd.n),
                                    forms::phi() * de8_pow_th3(2, fd.n - 8)}));
            }
            // z1_e8 keeps the generic sufficient-only spans at degrees 4 and 6
            break;
        case Kind::odd24:
            if (fd.sub == Case::not_strongly_eutactic) {
                set(2, tabulated_basis({forms::phi() * de8_pow_th3(2, 8)}));
                set(4, tabulated_basis({de8_pow_th3(2, 16), de8_pow_th3(3, 8)}));
            } else if (fd.sub == Case::strongly_eutactic) {
                set(2, tabulated_zero());
                set(4, tabulated_basis({de8_pow_th3(2, 16), de8_pow_th3(3, 8)}));
                set(6, tabulated_basis({forms::phi() * de8_pow_th3(2, 16),
                                    forms::phi() * de8_pow_th3(3, 8)}));
            } else if (fd.sub == Case::empty_roots) {
                set(2, tabulated_zero());
                set(4, tabulated_basis({de8_pow_th3(3, 8)}));
                set(6, tabulated_basis({forms::phi() * de8_pow_th3(3, 8)}));
            }
            break;
        case Kind::residual:
            if (fd.sub == Case::p0_nonse) {
                set(2, tabulated_basis({forms::phi() * de8_pow_th3(2, fd.n - 16)}));
            } else if (fd.sub == Case::p_se) {
                set(2, tabulated_basis({forms::phi() * de8_pow_th3(1, fd.n - 8) +
                                    (forms::phi() * de8_pow_th3(2, fd.n - 16))
                                        .scaled(46 - 2 * fd.N - fd.h)}));
            } else if (fd.sub == Case::p_nonse) {
                set(2, tabulated_basis({forms::phi() * de8_pow_th3(1, fd.n - 8),
                                    forms::phi() * de8_pow_th3(2, fd.n - 16)}));
            }
            break;
    }
    return table;
}

namespace {

DegreeOutcome basis_outcome(const DegreeBasis& basis, const Rational& m, bool shadowed,
                            Exponent cutoff) {
    DegreeOutcome out;
    if (basis.zero) {
        out.state = CondState::holds;
        return out;
    }
    Rational scaled = m * static_cast<long>(kQStep);
    if (scaled.get_den() != 1) throw domain_error("norm off the 1/8 exponent grid");
    Exponent e = scaled.get_num().get_si();
    bool all_zero = true;
    for (const ThetaPolynomial& f : basis.forms) {
        const ThetaPolynomial form = shadowed ? shadow(f) : f;
        Rational c = expand(form, cutoff).coeff(e);
        if (c != 0) {
            all_zero = false;
            out.witness = c;
            break;
        }
    }
    if (all_zero)
        out.state = CondState::holds;
    else
        out.state = basis.independent ? CondState::fails : CondState::unknown;
    return out;
}

}  // namespace

ShellReport shell_strength(const FamilyDescriptor& fd, const Rational& m, bool shadowed,
                           int max_degree, Exponent cutoff) {
    ShellReport report;
    report.norm = m;
    report.shadow = shadowed;
    ThetaPolynomial theta = family_theta(fd);
    if (shadowed) theta = shadow(theta);
    Rational scaled = m * static_cast<long>(kQStep);
    if (scaled.get_den() != 1) throw domain_error("norm off the 1/8 exponent grid");
    Rational size = expand(theta, cutoff).coeff(scaled.get_num().get_si());
    if (size.get_den() != 1) throw std::logic_error("non-integral shell size");
    report.shell_size = size.get_num();
    report.empty = report.shell_size == 0;

    DegreeBasisTable table = degree_basis(fd, max_degree);
    if (report.empty) {
        // design-or-empty: every condition holds vacuously
        report.verdict = assemble_strength(
            [](int) {
                DegreeOutcome out;
                out.state = CondState::holds;
                return out;
            },
            max_degree);
        return report;
    }
    report.verdict = assemble_strength(
        [&](int degree) { return basis_outcome(table.by_degree.at(degree), m, shadowed, cutoff); },
        max_degree);
    return report;
}

std::string ShellReport::json() const {
    nlohmann::ordered_json j;
    j["norm"] = rational_str(norm);
    j["shell_size"] = shell_size.get_str();
    j["empty"] = empty;
    j["shadow"] = shadow;
    j["verdict"] = nlohmann::ordered_json::parse(verdict.json());
    return j.dump();
}

QSeries code_lattice_theta(const BinaryCode& code, Exponent cutoff) {
    // even coordinates contribute Th3(4z), odd ones Th2(4z)
    QSeries th3_4z = expand(forms::th3(), cutoff / 4 + 1).scaled_exponents(4, 1).truncated(cutoff);
    QSeries th2_4z = expand(forms::th2(), cutoff / 4 + 1).scaled_exponents(4, 1).truncated(cutoff);
    QSeries total(cutoff);
    for (const auto& [w, count] : code.weight_enumerator()) {
        QSeries term = mul(pow(th2_4z, w), pow(th3_4z, code.length - w));
        total = total + term.scaled(Rational(static_cast<long>(count)));
    }
    return total;
}

// ---------------------------------------------------------------------------

ZeroPattern pattern_by_name(const std::string& name) {
    auto strip4 = [](Integer v) {
        while (v % 4 == 0) v /= 4;
        return v;
    };
    if (name == "none") return {name, [](const Rational&) { return false; }};
    if (name == "even")
        return {name, [](const Rational& m) { return m.get_den() == 1 && m.get_num() % 2 == 0; }};
    if (name == "odd")
        return {name, [](const Rational& m) { return m.get_den() == 1 && m.get_num() % 2 != 0; }};
    if (name == "mod4=2")
        return {name, [](const Rational& m) { return m.get_den() == 1 && m.get_num() % 4 == 2; }};
    if (name == "4^a")
        return {name, [strip4](const Rational& m) {
                    return m > 0 && m.get_den() == 1 && strip4(m.get_num()) == 1;
                }};
    if (name == "2*4^a")
        return {name, [strip4](const Rational& m) {
                    return m > 0 && m.get_den() == 1 && strip4(m.get_num()) == 2;
                }};
    if (name == "2^a")
        return {name, [](const Rational& m) {
                    if (m <= 0 || m.get_den() != 1) return false;
                    Integer v = m.get_num();
                    while (v % 2 == 0) v /= 2;
                    return v == 1;
                }};
    for (int c : {1, 3, 5, 7}) {
        std::string pat = "4^a(8b+" + std::to_string(c) + ")";
        if (name == pat)
            return {name, [strip4, c](const Rational& m) {
                        return m > 0 && m.get_den() == 1 && strip4(m.get_num()) % 8 == c;
                    }};
    }
    if (name == "nonsquare")
        return {name, [](const Rational& m) { return m.get_den() != 1 || !is_square(m.get_num()); }};
    if (name == "nonsum2sq")
        return {name, [](const Rational& m) {
                    return m.get_den() != 1 || !is_sum_of_two_squares(m.get_num());
                }};
    if (name == "nonsquare/4")
        return {name, [](const Rational& m) {
                    Rational q = m * 4;
                    return q.get_den() != 1 || !is_square(q.get_num());
                }};
    if (name == "nonsum2sq/4")
        return {name, [](const Rational& m) {
                    Rational q = m * 4;
                    return q.get_den() != 1 || !is_sum_of_two_squares(q.get_num());
                }};
    if (name.rfind("=", 0) == 0) {
        Rational v = parse_rational(name.substr(1));
        return {name, [v](const Rational& m) { return m == v; }};
    }
    throw parse_error("unknown zero pattern: " + name);
}

ScanResult scan_zeros_poly(const ThetaPolynomial& form, const std::string& label, bool shadowed,
                           Exponent cutoff, const std::optional<std::string>& expect) {
    ScanResult result;
    result.form = label;
    result.cutoff = cutoff;
    QSeries series = expand(form, cutoff);
    if (series.is_zero()) throw domain_error("scan of the zero series");
    Exponent lead = series.lead_exponent();
    Exponent step = shadowed ? 2 * kQStep : kQStep;
    result.support_lead = Rational(static_cast<long>(lead), static_cast<long>(kQStep));
    result.support_lead.canonicalize();
    result.support_step = Rational(static_cast<long>(step), static_cast<long>(kQStep));
    result.support_step.canonicalize();
    for (Exponent e = lead; e <= cutoff; e += step) {
        if (series.coeff(e) == 0) {
            Rational m(static_cast<long>(e), static_cast<long>(kQStep));
            m.canonicalize();
            result.zeros.push_back(std::move(m));
        }
    }
    if (expect) {
        result.pattern = *expect;
        ZeroPattern pat = pattern_by_name(*expect);
        for (const Rational& z : result.zeros)
            if (!pat.contains(z)) result.extras.push_back(z);
        for (Exponent e = lead; e <= cutoff; e += step) {
            Rational m(static_cast<long>(e), static_cast<long>(kQStep));
            m.canonicalize();
            if (pat.contains(m) && series.coeff(e) != 0) result.missing.push_back(m);
        }
    }
    return result;
}

ScanResult scan_zeros(const std::string& form_expr, Exponent cutoff,
                      const std::optional<std::string>& expect) {
    ThetaPolynomial form = parse_form(form_expr);
    bool shadowed = form_expr.find("Sh") != std::string::npos;
    return scan_zeros_poly(form, form_expr, shadowed, cutoff, expect);
}

std::string ScanResult::json() const {
    nlohmann::ordered_json j;
    j["form"] = form;
    j["cutoff"] = cutoff / kQStep;
    auto rat_list = [](const std::vector<Rational>& v) {
        auto arr = nlohmann::ordered_json::array();
        for (const Rational& x : v) arr.push_back(rational_str(x));
        return arr;
    };
    j["zeros"] = rat_list(zeros);
    if (pattern) {
        j["predicted"] = *pattern;
        j["extras"] = rat_list(extras);
        j["missing"] = rat_list(missing);
    }
    return j.dump();
}

// ---------------------------------------------------------------------------

TauScan tau_scan(long max_m) {
    TauScan scan;
    scan.max_m = max_m;
    Exponent cutoff = 2 * max_m * kQStep;
    QSeries de24 = expand(forms::de24(), cutoff);
    scan.tau.reserve(max_m);
    for (long m = 1; m <= max_m; ++m) {
        Rational c = de24.coeff(2 * m * kQStep);
        if (c.get_den() != 1) throw std::logic_error("non-integral tau");
        scan.tau.push_back(c.get_num());
        if (scan.tau.back() == 0) scan.zeros.push_back(m);
    }
    return scan;
}

std::vector<std::string> tau_zero_implications(long m) {
    std::ostringstream a, b;
    a << "(W8)_" << 2 * m << " is an 8-design (hence an 11-design)";
    b << "shells of norm " << 2 * m << " of both even selfdual rank-16 lattices are 4-designs "
      << "(hence 7-designs)";
    return {a.str(), b.str()};
}

// ---------------------------------------------------------------------------

GrowthCertificate growth_certificate(const QSeries& phi0, const QSeries& psi, long n, long target) {
    auto integral = [](const QSeries& s) {
        for (const auto& [e, c] : s.terms())
            if (e % kQStep != 0 || c.get_den() != 1) return false;
        return true;
    };
    if (!integral(phi0) || !integral(psi))
        throw domain_error("growth certificate needs integral series on the integer grid");
    if (phi0.is_zero() || phi0.terms().front().second < 1)
        throw domain_error("phi0 must have leading coefficient >= 1");
    if (psi.coeff(0) < 1 || psi.coeff(kQStep) < 1)
        throw domain_error("psi needs b_0 >= 1 and b_1 >= 1");
    for (const auto& [e, c] : psi.terms())
        if (c < 0) throw domain_error("psi must have nonnegative coefficients");

    Exponent cutoff = std::min(phi0.cutoff(), psi.cutoff());
    if (cutoff < target * kQStep)
        throw domain_error("series cutoff below the certificate target");

    QSeries phi = mul(phi0, pow(psi, static_cast<unsigned long>(n)));
    GrowthCertificate cert;
    cert.n = n;
    cert.lead = static_cast<long>(phi0.lead_exponent() / kQStep);
    long m = cert.lead;
    while (m <= target && phi.coeff(m * kQStep) > 0) ++m;
    cert.certified = m - 1;
    cert.reached_target = cert.certified >= target;
    return cert;
}

QSeries growth_phi_cubic(Exponent cutoff) { return expand(forms::de8(), cutoff); }

QSeries growth_psi_cubic(Exponent cutoff) { return expand(forms::th3(), cutoff); }

QSeries growth_phi_shadow(Exponent cutoff) {
    QSeries sh = expand(shadow(forms::de8()), 2 * cutoff);
    return sh.scaled(-16).scaled_exponents(1, 2);
}

QSeries growth_psi_shadow(Exponent cutoff) {
    // q^(-1/8) Th2(z/2) = 2 sum_k q^(k(k+1)/2)
    std::vector<QSeries::Term> terms;
    for (long long k = 0;; ++k) {
        long long e = kQStep * k * (k + 1) / 2;
        if (e > cutoff) break;
        terms.emplace_back(e, 2);
    }
    return QSeries::from_terms(std::move(terms), cutoff);
}

}  // namespace lattheta
