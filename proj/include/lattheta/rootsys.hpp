#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lattheta/designs.hpp"

namespace lattheta {

/// Irreducible norm-2 root system; family O is the empty system O_1.
struct IrreducibleComponent {
    char family = 'O';  // 'O', 'A', 'D', 'E'
    int rank = 1;

    int coxeter() const;
    long long size() const { return static_cast<long long>(rank) * coxeter(); }
    std::string name() const;
    bool operator==(const IrreducibleComponent&) const = default;
    auto operator<=>(const IrreducibleComponent&) const = default;
};

/// Orthogonal union of irreducible components with multiplicities.
struct RootSystem {
    std::vector<std::pair<IrreducibleComponent, int>> components;  // sorted, merged

    int rank() const;
    long long size() const;
    bool empty() const;
    bool strongly_eutactic() const;
    /// Common Coxeter number; only defined when strongly eutactic.
    std::optional<int> coxeter() const;
    std::vector<int> coxeter_list() const;
    std::string name() const;

    /// Parses "4A5+D4", "O24", "2A9+D6", "E8", "A11+D7+E6".
    static RootSystem parse(const std::string& text);
    bool operator==(const RootSystem&) const = default;
};

struct CoxeterProfile {
    bool strongly_eutactic = false;
    std::optional<int> coxeter;
    std::vector<int> component_coxeters;
};
CoxeterProfile coxeter_profile(const RootSystem& r);

/// The per-point kernel expression
///   2 Q^(2j)(1) + (4h-8) Q^(2j)(1/2) + (nh-4h+6) Q^(2j)(0);
/// zero iff condition (C_2j) holds for a strongly eutactic norm-2 root
/// system with parameters (n, h).
Rational condition_value(int n, int h, int two_j);

/// The displayed closed-form polynomial for (C_2j), 2j in {2,...,12},
/// stored verbatim as cross-validation data.
Rational displayed_condition_poly(int two_j, int n, int h);

struct ClassifyEntry {
    int n = 0;
    std::optional<int> h;  // nullopt: every h solves (degenerate line)
    std::vector<RootSystem> systems;
};

/// All positive integer (n, h) with condition_value(n,h,2j) = 0, n <= n_max,
/// paired with every strongly eutactic system realizing them (h <= h_max
/// caps the degenerate all-h lines).
std::vector<ClassifyEntry> classify(int two_j, int n_max = 60, int h_max = 60);

/// All nonempty strongly eutactic systems of rank n and Coxeter number h.
std::vector<RootSystem> systems_with(int n, int h);

/// Explicit root vectors (block-embedded; the span has dimension rank()).
std::vector<std::vector<Rational>> root_vectors(const RootSystem& r);

struct TripleCheck {
    bool valid = false;
    Rational h_r;  // |R|/24
    int h_s = 0, h_t = 0;
    Rational residual;       // h_S + h_T - 3h_R - 2
    Integer shadow2_expected;  // 24(h_S + h_T - 2h_R)
    Integer c2;                // (h_R - 46 + 2N) N at N = 24
    std::vector<std::string> notes;
};

struct TripleVectors {
    const Shell* shadow_shell2 = nullptr;   // Sh(Λ)_2
    const Shell* lattice_shell2 = nullptr;  // Λ_2 = R (T = R case)
};

/// Checks h_S + h_T = 3 h_R + 2 and the shadow-count identity for an odd
/// rank-24 triple; inclusion pairs must come from the catalog. With vector
/// data, also checks the scalar-product profiles
/// N_1(s,R) = h_S - 2, N_{±1/2}(s,T) = 12(h_T - h_R), N_0 = 8h_T + 6h_S - 12.
TripleCheck validate_triple(const RootSystem& R, const RootSystem& S, const RootSystem& T,
                            const std::vector<std::pair<RootSystem, RootSystem>>& catalog_pairs,
                            const TripleVectors* vectors = nullptr);

}  // namespace lattheta
