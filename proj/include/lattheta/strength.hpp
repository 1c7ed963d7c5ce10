#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lattheta/designs.hpp"
#include "lattheta/modforms.hpp"

namespace lattheta {

/// Selfdual lattice family whose weighted theta series are catalogued.
struct FamilyDescriptor {
    enum class Kind {
        cubic,
        witt,
        even_e8,
        even_rank16,
        leech,
        niemeier,
        long_shadow_min2,
        shorter_leech,
        long_shadow_min1,
        odd24,
        residual
    };
    enum class Case {
        none,
        z1_e8,             // Z^1 + E8 (unproven coefficient dependence: lower bounds)
        z1_shorter_leech,  // Z^1 + O23
        generic,
        strongly_eutactic,
        not_strongly_eutactic,
        empty_roots,
        p0_nonse,  // residual: p = 0, L_2 not strongly eutactic
        p_se,      // residual: p >= 1, L_2 strongly eutactic
        p_nonse    // residual: p >= 1, L_2 not strongly eutactic
    };

    Kind kind = Kind::cubic;
    Case sub = Case::none;
    int n = 0;          // rank of the lattice
    int N = 0;          // rank of the minimum-2 part L
    int h = 0;          // Coxeter number when L_2 is strongly eutactic
    long L2_size = -1;  // |L_2|; defaults to N*h (can be fractional-h data)
    std::string label;

    long root_count() const { return L2_size >= 0 ? L2_size : static_cast<long>(N) * h; }

    int k() const;                  // sigma = n - 8k
    Rational family_min() const;    // minimum norm of the family member
    bool even_family() const;       // theta lives in C[Q, De24]
    Rational shadow_min_norm() const {
        Rational m(n - 8 * k(), 4);
        m.canonicalize();
        return m;
    }

    static FamilyDescriptor cubic(int n);
    static FamilyDescriptor witt(int n);
    static FamilyDescriptor e8();
    static FamilyDescriptor rank16();
    static FamilyDescriptor leech();
    static FamilyDescriptor niemeier(int h);
    static FamilyDescriptor long_shadow_min2(int n);  // h = 2(23 - n)
    static FamilyDescriptor shorter_leech();
    static FamilyDescriptor long_shadow_min1(int p, int N, int h);
    static FamilyDescriptor odd24(Case which, int h);
    /// Non-strongly-eutactic odd rank-24 lattice given by its root count.
    static FamilyDescriptor odd24_counted(long root_count);
    static FamilyDescriptor residual(Case which, int n, int N, int h);
    /// Residual lattice whose L_2 is given by its root count (cases i/iii).
    static FamilyDescriptor residual_counted(Case which, int n, int N, long root_count);
};

/// Basis forms deciding condition (C_degree): Θ_{Λ,P} lies in their span.
/// independent: the coefficient linear forms are known nonzero/independent,
/// so coefficient vanishing is necessary and sufficient. Otherwise vanishing
/// of every form is sufficient only, and verdicts become lower bounds.
struct DegreeBasis {
    std::vector<ThetaPolynomial> forms;
    bool zero = false;        // Θ_{Λ,P} ≡ 0: the condition holds at every norm
    bool independent = false;
    bool tabulated = false;   // family table entry (else generic weight-graded span)
};

struct DegreeBasisTable {
    FamilyDescriptor family;
    std::map<int, DegreeBasis> by_degree;
};

/// Θ_Λ as a theta polynomial, with the closed-form c_i of the family.
ThetaPolynomial family_theta(const FamilyDescriptor& fd);
DegreeBasisTable degree_basis(const FamilyDescriptor& fd, int max_degree);

struct ShellReport {
    Rational norm;
    Integer shell_size;
    bool empty = false;  // empty shells are "design-or-empty"
    bool shadow = false;
    StrengthVerdict verdict;
    std::string json() const;
};

ShellReport shell_strength(const FamilyDescriptor& fd, const Rational& m, bool shadow = false,
                           int max_degree = 16, Exponent cutoff = kDefaultCutoff);

/// Theta series of the (unscaled) Construction-A lattice of a binary code:
/// the weight-enumerator composition sum_W A_W Th2(4z)^W Th3(4z)^(n-W).
QSeries code_lattice_theta(const BinaryCode& code, Exponent cutoff = kDefaultCutoff);

// ---------------------------------------------------------------------------
// Zero-coefficient scans

struct ZeroPattern {
    std::string name;
    std::function<bool(const Rational&)> contains;
};

/// Named pattern registry: "4^a(8b+1|3|5|7)", "4^a", "2*4^a", "2^a",
/// "even", "odd", "mod4=2", "=X", "nonsquare", "nonsum2sq",
/// "nonsquare/4", "nonsum2sq/4", "none".
ZeroPattern pattern_by_name(const std::string& name);

struct ScanResult {
    std::string form;
    Exponent cutoff = 0;         // in eighths
    Rational support_lead;       // first support exponent (q-steps)
    Rational support_step;       // grid step (q-steps)
    std::vector<Rational> zeros;  // exponents with zero coefficient, in q-steps
    std::optional<std::string> pattern;
    std::vector<Rational> extras;   // zeros outside the predicted set
    std::vector<Rational> missing;  // predicted zeros with nonzero coefficient
    bool pass(bool exact_match) const {
        return missing.empty() && (!exact_match || extras.empty());
    }
    std::string json() const;
};

/// All vanishing coefficients on the support grid up to the cutoff. The
/// grid steps by 1 for plain forms and by 2 for shadowed ones (support
/// α/4 + 2N). A shadow wrapper in the expression selects the latter.
ScanResult scan_zeros(const std::string& form_expr, Exponent cutoff = kDefaultCutoff,
                      const std::optional<std::string>& expect = std::nullopt);
ScanResult scan_zeros_poly(const ThetaPolynomial& form, const std::string& label, bool shadowed,
                           Exponent cutoff, const std::optional<std::string>& expect = std::nullopt);

// ---------------------------------------------------------------------------
// Ramanujan tau

struct TauScan {
    long max_m = 0;
    std::vector<Integer> tau;  // tau[m-1] = τ(m)
    std::vector<long> zeros;
    bool all_nonzero() const { return zeros.empty(); }
};
TauScan tau_scan(long max_m);

/// Design upgrades that a vanishing τ(m) would force (the Lehmer
/// reformulation): used to report consequences of any zero found.
std::vector<std::string> tau_zero_implications(long m);

// ---------------------------------------------------------------------------
// Nonvanishing growth certificates

struct GrowthCertificate {
    long n = 0;
    long lead = 0;       // first exponent of phi0 (q-steps)
    long certified = 0;  // all coefficients positive on [lead, certified]
    bool reached_target = false;
};

/// M_n for phi = phi0 * psi^n: the longest prefix of strictly positive
/// coefficients. Hypotheses (integral coefficients, leading coefficient of
/// phi0 >= 1, psi with b_0, b_1 >= 1 and all b_j >= 0) are validated.
GrowthCertificate growth_certificate(const QSeries& phi0, const QSeries& psi, long n, long target);

QSeries growth_phi_cubic(Exponent cutoff);   // De8
QSeries growth_psi_cubic(Exponent cutoff);   // Th3
QSeries growth_phi_shadow(Exponent cutoff);  // -16 Sh(De8) at halved argument
QSeries growth_psi_shadow(Exponent cutoff);  // q^(-1/8) Th2 at halved argument

}  // namespace lattheta
