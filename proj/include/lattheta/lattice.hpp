#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lattheta/util.hpp"

namespace lattheta {

/// Linear binary code given by generator bit-vectors (LSB = coordinate 0).
struct BinaryCode {
    int length = 0;
    std::vector<std::uint64_t> generators;
    bool coordinate_symmetric = false;  // invariant under all coordinate permutations

    int dimension() const;
    std::vector<std::uint64_t> codewords() const;        // all 2^k words
    std::map<int, long long> weight_enumerator() const;  // weight -> count

    static BinaryCode even_weight(int n);
    static BinaryCode hamming7();
    static BinaryCode repetition(int n);
};

enum class FlipSymmetry { none, all, even };

/// Coordinate block with known lattice automorphisms: sign flips per the
/// flip group and, when perm is set, all permutations within the block.
struct SymBlock {
    int offset = 0;
    int size = 0;
    bool perm = false;
    FlipSymmetry flips = FlipSymmetry::none;
};

struct LatticeInvariants {
    bool selfdual = false;
    bool even = false;
    long sigma = -1;  // -1 = not selfdual (undefined)
    Rational min_norm;
    long p = 0;                  // number of Z^1 summands = |shell 1|/2
    std::string root_system;     // root system of the minimum-2 part L
    std::string full_root_system;  // root system of the whole lattice (shell 2)
};

class Lattice;

/// Shadow of a selfdual lattice as the coset shift + Λ (for even lattices
/// the trivial coset). The shift is half a characteristic vector.
struct ShadowCoset {
    const Lattice* lattice = nullptr;
    bool trivial = true;                 // even lattice: Sh(Λ) = Λ
    std::vector<Rational> shift_coeff;   // in basis coordinates
    std::vector<Rational> shift;         // ambient, when the lattice has one
    Rational min_norm;                   // smallest shadow norm
};

class Lattice {
  public:
    // Named constructions. Every returned lattice is validated: symmetric
    // integral positive-definite Gram, consistent with the basis rows.
    static Lattice cubic(int n);
    static Lattice witt(int n);  // n must be a positive multiple of 4
    static Lattice root_d(int n);
    static Lattice root_a(int n);
    static Lattice e6();
    static Lattice e7();
    static Lattice e8();
    static Lattice construction_a(const BinaryCode& code);
    static Lattice direct_sum(const Lattice& a, const Lattice& b);
    static Lattice from_gram(const std::vector<std::vector<Integer>>& gram,
                             const std::string& name = "gram");

    /// Parses "Z:4", "W:12", "D:8", "A:5", "E:8", "CA:even4", "CA:hamming7",
    /// and '+'-joined direct sums like "Z:3+W:12".
    static Lattice parse_spec(const std::string& spec);

    int rank() const { return rank_; }
    bool has_ambient() const { return !basis_.empty(); }
    int ambient_dim() const { return basis_.empty() ? rank_ : static_cast<int>(basis_[0].size()); }
    const std::vector<std::vector<Rational>>& basis() const { return basis_; }
    const std::vector<std::vector<Integer>>& gram() const { return gram_; }
    const std::vector<std::vector<long long>>& gram_i64() const { return gram64_; }
    const std::string& name() const { return name_; }
    const std::vector<SymBlock>& symmetry() const { return sym_; }

    const Integer& det() const { return det_; }
    bool is_selfdual() const { return det_ == 1; }
    bool is_even() const { return even_; }

    Rational min_norm() const;
    long sigma() const;  // requires selfdual
    long shell_one_count() const;
    ShadowCoset shadow_coset() const;  // requires selfdual
    LatticeInvariants invariants() const;

    /// Exact membership test for an ambient rational vector.
    bool contains(const std::vector<Rational>& x) const;
    /// Basis coordinates of an ambient vector in the lattice's span.
    std::vector<Rational> to_coords(const std::vector<Rational>& x) const;

  private:
    Lattice() = default;
    void validate_and_finish();

    int rank_ = 0;
    std::string name_;
    std::vector<std::vector<Rational>> basis_;  // rank rows, ambient columns
    std::vector<std::vector<Integer>> gram_;
    std::vector<std::vector<long long>> gram64_;
    Integer det_;
    bool even_ = false;
    std::vector<SymBlock> sym_;

    mutable std::optional<Rational> min_norm_;
    mutable std::optional<long> sigma_;
    mutable std::optional<long> p_;
};

// Exact linear algebra over the rationals (small dense matrices).
namespace linalg {
Integer det(std::vector<std::vector<Rational>> m);
bool is_positive_definite(const std::vector<std::vector<Integer>>& m);
/// Solves A x = b exactly; throws domain_error if singular.
std::vector<Rational> solve(std::vector<std::vector<Rational>> a, std::vector<Rational> b);
int rank(std::vector<std::vector<Rational>> m);
/// Solves A x = b over F2 (A invertible mod 2).
std::vector<int> solve_f2(std::vector<std::vector<int>> a, std::vector<int> b);
}  // namespace linalg

/// Reads a Gram matrix from whitespace-separated integers: first token is
/// the rank n, followed by n*n entries.
std::vector<std::vector<Integer>> read_gram_text(const std::string& text);

}  // namespace lattheta
