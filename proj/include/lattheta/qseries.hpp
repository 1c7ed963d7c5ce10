#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "lattheta/util.hpp"

namespace lattheta {

// Exponent of q measured in eighths of a q-step (q^m has exponent 8m).
// The 1/8 grid covers every series in scope: theta constants live on the
// integer grid, Th2 contributes quarter-integers, shadows of odd powers of
// Th3 contribute quarter-integers, and the half-argument scratch series of
// the growth certificates need eighths.
using Exponent = long long;

inline constexpr Exponent kEighth = 1;
inline constexpr Exponent kQStep = 8;

// Default truncation: exponent 1200 in integer q-steps.
inline constexpr Exponent kDefaultCutoff = 1200 * kQStep;

/// Truncated q-expansion with exact rational coefficients.
///
/// Terms are kept sorted by exponent with no explicit zeros; every stored
/// exponent is <= cutoff. Values are immutable after construction and safe
/// to share across threads.
class QSeries {
  public:
    using Term = std::pair<Exponent, Rational>;

    QSeries() : cutoff_(0) {}
    explicit QSeries(Exponent cutoff) : cutoff_(cutoff) {}

    static QSeries zero(Exponent cutoff) { return QSeries(cutoff); }
    static QSeries one(Exponent cutoff) { return monomial(1, 0, cutoff); }
    static QSeries monomial(Rational coeff, Exponent e, Exponent cutoff);
    /// Terms need not be sorted; duplicates are accumulated, zeros dropped.
    static QSeries from_terms(std::vector<Term> terms, Exponent cutoff);

    Exponent cutoff() const { return cutoff_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    Exponent lead_exponent() const;  // throws on zero series

    /// Stored coefficient or 0; exponents beyond the cutoff are an error,
    /// never silently zero.
    const Rational& coeff(Exponent e) const;
    Rational coeff_q(long m) const { return coeff(kQStep * m); }

    QSeries truncated(Exponent new_cutoff) const;
    /// Multiplies every exponent by num/den; errors if a scaled exponent
    /// would leave the 1/8 grid. Used for substitutions q -> q^k, q -> q^(1/2).
    QSeries scaled_exponents(long num, long den) const;
    QSeries shifted(Exponent delta) const;

    QSeries operator-() const;
    friend QSeries operator+(const QSeries& a, const QSeries& b);
    friend QSeries operator-(const QSeries& a, const QSeries& b);
    friend QSeries mul(const QSeries& a, const QSeries& b);
    friend QSeries dissect(const QSeries& a, long residue, long modulus);
    QSeries scaled(const Rational& c) const;

    bool operator==(const QSeries& o) const { return cutoff_ == o.cutoff_ && terms_ == o.terms_; }

    std::string to_json() const;
    static QSeries from_json(const std::string& text);
    /// Short human form "1 + 240*q^2 + 2160*q^4 + O(...)".
    std::string pretty(std::size_t max_terms = 8) const;

  private:
    Exponent cutoff_;
    std::vector<Term> terms_;
};

QSeries mul(const QSeries& a, const QSeries& b);
QSeries pow(const QSeries& a, unsigned long k);
inline QSeries operator*(const QSeries& a, const QSeries& b) { return mul(a, b); }

/// Subseries of terms with exponent ≡ c (mod modulus), both measured in
/// integer q-steps on the integer sublattice of the grid.
QSeries dissect(const QSeries& a, long residue, long modulus);

}  // namespace lattheta
