#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>

#include "lattheta/qseries.hpp"

namespace lattheta {

/// Monomial Th2^a Th3^b Th4^c. Weight is (a+b+c)/2; weight2() avoids the
/// half-integer.
struct ThetaWord {
    int a = 0;
    int b = 0;
    int c = 0;
    int weight2() const { return a + b + c; }
    auto operator<=>(const ThetaWord&) const = default;
};

/// Formal rational combination of theta words; the symbolic home of every
/// modular form used here.
class ThetaPolynomial {
  public:
    ThetaPolynomial() = default;
    static ThetaPolynomial word(ThetaWord w, Rational coeff = 1);
    static ThetaPolynomial constant(Rational c) { return word({0, 0, 0}, std::move(c)); }

    const std::map<ThetaWord, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Common weight2 of all words, when the polynomial is homogeneous.
    std::optional<int> homogeneous_weight2() const;

    ThetaPolynomial operator-() const;
    friend ThetaPolynomial operator+(const ThetaPolynomial&, const ThetaPolynomial&);
    friend ThetaPolynomial operator-(const ThetaPolynomial&, const ThetaPolynomial&);
    friend ThetaPolynomial operator*(const ThetaPolynomial&, const ThetaPolynomial&);
    ThetaPolynomial scaled(const Rational& c) const;
    ThetaPolynomial pow(unsigned k) const;

    bool operator==(const ThetaPolynomial&) const = default;

    /// Canonical text form, usable as a memo key ("-1/16*[0,4,4]+...").
    std::string key() const;
    std::string pretty() const;

  private:
    std::map<ThetaWord, Rational> terms_;
};

namespace forms {
ThetaPolynomial th2();
ThetaPolynomial th3();
ThetaPolynomial th4();
ThetaPolynomial phi();   // Th4^4 - Th2^4
ThetaPolynomial de8();   // (1/16) Th2^4 Th4^4
ThetaPolynomial q();     // Th3^8 - 16 De8
ThetaPolynomial r();     // Phi (Th3^8 + 8 De8)
ThetaPolynomial de24();  // Th3^8 De8^2
/// Named catalog lookup (Th2, Th3, Th4, Phi, De8, Q, R, De24).
std::optional<ThetaPolynomial> by_name(const std::string& name);
}  // namespace forms

/// Substitutes the defining theta sums truncated at cutoff and evaluates the
/// polynomial with exact q-series arithmetic. Results are memoized
/// process-wide by (canonical polynomial, cutoff); the memo is safe for
/// concurrent use.
QSeries expand(const ThetaPolynomial& p, Exponent cutoff = kDefaultCutoff);

void clear_expand_memo();

/// Shadow operator on the subalgebra of words with Th2-exponent divisible
/// by 4: Th2^a Th3^b Th4^c -> (-1)^(a/4) Th2^b Th3^c Th4^a. Words outside
/// that subalgebra would need eighth roots of unity and are rejected.
ThetaPolynomial shadow(const ThetaPolynomial& p);

struct IdentityCheck {
    bool equal = false;
    Exponent first_difference = 0;  // meaningful when !equal
    Rational lhs_coeff;
    Rational rhs_coeff;
    Exponent cutoff = 0;
};

/// Compares expansions at every exponent <= cutoff. A to-cutoff check only;
/// callers report it as such.
IdentityCheck verify_identity(const ThetaPolynomial& lhs, const ThetaPolynomial& rhs,
                              Exponent cutoff = kDefaultCutoff);

/// Parser for the small form-expression grammar used by the CLI:
/// identifiers from the named catalog, '^' integer exponents, '*', '+', '-',
/// integer/rational scalars, parentheses, and an Sh(...) shadow wrapper.
/// Whitespace-insensitive. Example: "Phi*Th3^7*De8".
ThetaPolynomial parse_form(const std::string& text);

}  // namespace lattheta
