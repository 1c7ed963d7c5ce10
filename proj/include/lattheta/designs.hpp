#pragma once

#include <functional>
#include <string>
#include <vector>

#include "lattheta/shells.hpp"

namespace lattheta {

/// dim Har_j(R^n) = C(n+j-1, j) - C(n+j-3, j-2).
Integer dim_harmonics(int n, int j);

/// Gegenbauer kernel polynomial of degree j on S^(n-1), normalised so that
/// Q^(j)(1) = dim Har_j(R^n). Computed by the monic three-term recurrence
/// for the weight (1-t^2)^((n-3)/2), then rescaled.
class GegenbauerPoly {
  public:
    GegenbauerPoly(int dim, int degree);
    int dim() const { return dim_; }
    int degree() const { return degree_; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    Rational eval(const Rational& t) const;

  private:
    int dim_;
    int degree_;
    std::vector<Rational> coeffs_;  // coeffs_[k] multiplies t^k
};

/// Cached accessor.
const GegenbauerPoly& gegenbauer(int n, int j);

// ---------------------------------------------------------------------------
// Design strength verdicts

enum class CondState { holds, fails, unknown };

struct DegreeOutcome {
    CondState state = CondState::unknown;
    Rational witness;  // kernel sum or a nonzero basis coefficient
};

struct StrengthVerdict {
    int strength_times_two = 0;  // 2t, or 2t+1 for a t+1/2 design
    enum class Exactness { exact, lower_bound } exactness = Exactness::exact;
    struct Failure {
        int degree;
        Rational witness;
    };
    std::vector<Failure> failing_degrees;
    int max_degree_checked = 0;

    bool half() const { return strength_times_two % 2 == 1; }
    int integer_part() const { return strength_times_two / 2; }
    std::string display() const;  // "5", "7.5", ">=13"
    std::string json() const;
};

/// Builds a verdict from per-degree condition outcomes, scanning even
/// degrees 2, 4, ..., max_degree. Antipodal convention: odd degrees hold
/// automatically. The half upgrade is granted when the first failing even
/// degree 2s+2 is followed by a certified hold at 2s+4.
StrengthVerdict assemble_strength(const std::function<DegreeOutcome(int)>& condition,
                                  int max_degree);

// ---------------------------------------------------------------------------
// Weighted point sets and kernel sums

/// Antipodal point set on a sphere with class-wise weights. Weights are
/// nonnegative, may be zero, and sum to 1 over the whole set. The class
/// function must be constant on the shell's symmetry orbits (true for any
/// function of the coordinate magnitudes, such as parity weight).
struct WeightedSet {
    const Shell* points = nullptr;
    std::vector<int> point_class;        // empty = single class
    std::vector<Rational> class_weight;  // weight of each point, by class id
    int dim_override = 0;                // ambient dimension for the kernels (0 = shell dim)

    int kernel_dim() const;
    Rational weight_of(std::size_t i) const {
        return class_weight[point_class.empty() ? 0 : point_class[i]];
    }
};

WeightedSet uniform_weights(const Shell& shell, int dim_override = 0);

/// Orbit weights of the signed-permutation group acting on Construction-A
/// membership: weight of y is A_W / C(n, W) at W = parity weight of y,
/// normalised to sum 1 over the shell.
WeightedSet code_orbit_weights(const BinaryCode& code, const Shell& shell);

/// Per-point normalised kernel sum |X| * sum_{x,y} w_x w_y Q^(j)(<x,y>/m).
/// Nonnegative always; zero exactly on condition (C_j).
Rational kernel_sum(const WeightedSet& X, int degree);

/// Evaluates kernel sums for many degrees off one pair histogram.
class KernelEvaluator {
  public:
    explicit KernelEvaluator(const WeightedSet& X);
    Rational sum(int degree) const;

  private:
    int dim_;
    Rational norm_;
    std::vector<std::tuple<Rational, Rational, unsigned long long>> weighted_pairs_;  // (w_x*w_y, ip, count)
    Rational scale_;  // |X|
};

/// Complete kernel criterion on an antipodal weighted set; checks
/// antipodality and evaluates (C_2), (C_4), ..., (C_max_degree).
StrengthVerdict strength(const WeightedSet& X, int max_degree = 16);

/// Exact sum of a polynomial over the shell's points (used by the explicit
/// harmonic-witness cross-checks).
Rational sum_over_shell(const Shell& shell,
                        const std::function<Rational(const std::vector<Rational>&)>& poly);

}  // namespace lattheta
