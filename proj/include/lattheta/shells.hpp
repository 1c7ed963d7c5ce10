#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "lattheta/lattice.hpp"

namespace lattheta {

struct ShellOptions {
    std::size_t ceiling = 10'000'000;  // hard cap on shell size
    std::optional<std::size_t> predicted_size;  // gate before enumeration when known
};

/// A shell: all lattice (or coset) vectors of one exact norm, stored over a
/// common denominator. Coordinates are ambient when the lattice has an
/// ambient embedding, else basis coefficients (inner products then go
/// through the Gram matrix).
class Shell {
  public:
    const Lattice* lattice() const { return lattice_; }
    const Rational& norm() const { return norm_; }
    bool ambient() const { return ambient_; }
    int dim() const { return dim_; }
    long long denom() const { return denom_; }
    std::size_t size() const { return dim_ ? flat_.size() / dim_ : 0; }
    const std::int32_t* at(std::size_t i) const { return flat_.data() + i * dim_; }

    /// Exact ambient coordinates (or basis coefficients when no ambient).
    std::vector<Rational> vector_at(std::size_t i) const;
    std::vector<long long> coeff_vector(std::size_t i) const;  // basis coefficients

    /// Exact inner product of members i and j.
    Rational inner(std::size_t i, std::size_t j) const;

    /// Symmetry blocks verified to act on this shell (coset shifts checked).
    const std::vector<SymBlock>& sym() const { return sym_; }

    std::string to_tsv() const;

    /// Test helper / CLI: a point set on one sphere given explicitly.
    /// Throws domain_error on mixed norms.
    static Shell from_vectors(const std::vector<std::vector<Rational>>& vectors);

  private:
    friend Shell enumerate_shell(const Lattice&, const Rational&,
                                 const std::optional<std::vector<Rational>>&, const ShellOptions&);
    const Lattice* lattice_ = nullptr;
    Rational norm_;
    bool ambient_ = false;
    int dim_ = 0;
    long long denom_ = 1;
    std::vector<std::int32_t> flat_;  // size*dim scaled coordinates
    std::vector<SymBlock> sym_;       // symmetry valid for this (possibly coset) shell
};

/// Complete duplicate-free enumeration of (shift + L)_m. Floating bounds
/// prune the search; every emitted vector is re-verified in exact
/// arithmetic. Vectors are returned sorted lexicographically.
Shell enumerate_shell(const Lattice& L, const Rational& m,
                      const std::optional<std::vector<Rational>>& coset_shift_coeff = std::nullopt,
                      const ShellOptions& options = {});

/// Count-only variant (no materialization, no ceiling on memory).
std::size_t count_shell(const Lattice& L, const Rational& m,
                        const std::optional<std::vector<Rational>>& coset_shift_coeff = std::nullopt,
                        const ShellOptions& options = {});

Shell enumerate_coset_shell(const ShadowCoset& coset, const Rational& m,
                            const ShellOptions& options = {});
std::size_t count_coset_shell(const ShadowCoset& coset, const Rational& m,
                              const ShellOptions& options = {});

/// Ordered-pair counts of exact inner products over X × X.
struct IPDistribution {
    std::map<Rational, unsigned long long> counts;
    unsigned long long total() const;
};

IPDistribution ip_distribution(const Shell& X);

/// Pair counts refined by a point class function (class must be constant on
/// symmetry orbits; this is enforced by keying on (orbit, class)).
/// Key: (class_x, class_y, inner product).
struct ClassedPairCounts {
    std::map<std::tuple<int, int, Rational>, unsigned long long> counts;
};

ClassedPairCounts classed_pair_counts(const Shell& X, const std::vector<int>& point_class);

}  // namespace lattheta
