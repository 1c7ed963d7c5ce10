#include "lattheta/modforms.hpp"

#include <cctype>
#include <mutex>
#include <sstream>
#include <unordered_map>

namespace lattheta {

ThetaPolynomial ThetaPolynomial::word(ThetaWord w, Rational coeff) {
    ThetaPolynomial p;
    coeff.canonicalize();
    if (coeff != 0) p.terms_.emplace(w, std::move(coeff));
    return p;
}

std::optional<int> ThetaPolynomial::homogeneous_weight2() const {
    std::optional<int> w;
    for (const auto& [word, c] : terms_) {
        if (!w)
            w = word.weight2();
        else if (*w != word.weight2())
            return std::nullopt;
    }
    return w;
}

ThetaPolynomial ThetaPolynomial::operator-() const {
    ThetaPolynomial p;
    for (const auto& [w, c] : terms_) p.terms_.emplace(w, -c);
    return p;
}

ThetaPolynomial operator+(const ThetaPolynomial& a, const ThetaPolynomial& b) {
    ThetaPolynomial p = a;
    for (const auto& [w, c] : b.terms_) {
        auto [it, fresh] = p.terms_.emplace(w, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) p.terms_.erase(it);
        }
    }
    return p;
}

ThetaPolynomial operator-(const ThetaPolynomial& a, const ThetaPolynomial& b) { return a + (-b); }

ThetaPolynomial operator*(const ThetaPolynomial& a, const ThetaPolynomial& b) {
    ThetaPolynomial p;
    for (const auto& [wa, ca] : a.terms_) {
        for (const auto& [wb, cb] : b.terms_) {
            ThetaWord w{wa.a + wb.a, wa.b + wb.b, wa.c + wb.c};
            Rational c = ca * cb;
            auto [it, fresh] = p.terms_.emplace(w, c);
            if (!fresh) {
                it->second += c;
                if (it->second == 0) p.terms_.erase(it);
            }
        }
    }
    return p;
}

ThetaPolynomial ThetaPolynomial::scaled(const Rational& c) const {
    ThetaPolynomial p;
    if (c == 0) return p;
    for (const auto& [w, v] : terms_) p.terms_.emplace(w, c * v);
    return p;
}

ThetaPolynomial ThetaPolynomial::pow(unsigned k) const {
    ThetaPolynomial result = constant(1);
    ThetaPolynomial base = *this;
    while (k > 0) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return result;
}

std::string ThetaPolynomial::key() const {
    std::ostringstream out;
    for (const auto& [w, c] : terms_)
        out << rational_str(c) << "*[" << w.a << "," << w.b << "," << w.c << "];";
    return out.str();
}

std::string ThetaPolynomial::pretty() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) out << (c > 0 ? " + " : " - ");
        else if (c < 0) out << "-";
        first = false;
        Rational ac = abs(c);
        bool unit = ac == 1 && w.weight2() > 0;
        if (!unit) out << rational_str(ac);
        auto piece = [&out, &unit](const char* sym, int e) {
            if (e == 0) return;
            if (!unit) out << "*";
            unit = false;
            out << sym;
            if (e != 1) out << "^" << e;
        };
        piece("Th2", w.a);
        piece("Th3", w.b);
        piece("Th4", w.c);
    }
    return out.str();
}

namespace forms {

ThetaPolynomial th2() { return ThetaPolynomial::word({1, 0, 0}); }
ThetaPolynomial th3() { return ThetaPolynomial::word({0, 1, 0}); }
ThetaPolynomial th4() { return ThetaPolynomial::word({0, 0, 1}); }

ThetaPolynomial phi() {
    return ThetaPolynomial::word({0, 0, 4}) - ThetaPolynomial::word({4, 0, 0});
}

ThetaPolynomial de8() { return ThetaPolynomial::word({4, 0, 4}, Rational(1, 16)); }

ThetaPolynomial q() {
    return ThetaPolynomial::word({0, 8, 0}) - de8().scaled(16);
}

ThetaPolynomial r() { return phi() * (ThetaPolynomial::word({0, 8, 0}) + de8().scaled(8)); }

ThetaPolynomial de24() { return ThetaPolynomial::word({0, 8, 0}) * de8().pow(2); }

std::optional<ThetaPolynomial> by_name(const std::string& name) {
    if (name == "Th2") return th2();
    if (name == "Th3") return th3();
    if (name == "Th4") return th4();
    if (name == "Phi") return phi();
    if (name == "De8") return de8();
    if (name == "Q") return q();
    if (name == "R") return r();
    if (name == "De24") return de24();
    return std::nullopt;
}

}  // namespace forms

namespace {

// Defining sums truncated at cutoff. Th2 enumerates half-integers m with
// m^2 <= cutoff, symmetric terms merged.
QSeries base_theta(int which, Exponent cutoff) {
    std::vector<QSeries::Term> terms;
    if (which == 2) {
        for (long long k = 0;; ++k) {
            long long e = 2 * (2 * k + 1) * (2 * k + 1);  // eighths of (k+1/2)^2
            if (e > cutoff) break;
            terms.emplace_back(e, 2);
        }
    } else {
        terms.emplace_back(0, 1);
        for (long long a = 1;; ++a) {
            long long e = kQStep * a * a;
            if (e > cutoff) break;
            terms.emplace_back(e, which == 3 ? 2 : (a % 2 == 0 ? 2 : -2));
        }
    }
    return QSeries::from_terms(std::move(terms), cutoff);
}

struct ExpandCache {
    std::mutex memo_mutex;
    std::unordered_map<std::string, QSeries> memo;
    std::mutex power_mutex;
    // powers of the three base thetas, keyed by (which, k, cutoff)
    std::map<std::tuple<int, int, Exponent>, QSeries> powers;
};

ExpandCache& cache() {
    static ExpandCache c;
    return c;
}

QSeries base_power_locked(ExpandCache& c, int which, int k, Exponent cutoff) {
    if (k == 0) return QSeries::one(cutoff);
    auto key = std::make_tuple(which, k, cutoff);
    auto it = c.powers.find(key);
    if (it != c.powers.end()) return it->second;
    QSeries result;
    if (k == 1) {
        result = base_theta(which, cutoff);
    } else {
        QSeries half = base_power_locked(c, which, k / 2, cutoff);
        result = mul(half, half);
        if (k % 2) result = mul(result, base_power_locked(c, which, 1, cutoff));
    }
    c.powers.emplace(key, result);
    return result;
}

QSeries base_power(ExpandCache& c, int which, int k, Exponent cutoff) {
    std::scoped_lock lock(c.power_mutex);
    return base_power_locked(c, which, k, cutoff);
}

}  // namespace

// Concurrent expands of the same polynomial may both compute; inserts are
// idempotent and readers always see a complete value.
QSeries expand(const ThetaPolynomial& p, Exponent cutoff) {
    std::string memo_key = p.key() + "@" + std::to_string(cutoff);
    auto& c = cache();
    {
        std::scoped_lock lock(c.memo_mutex);
        if (auto it = c.memo.find(memo_key); it != c.memo.end()) return it->second;
    }
    QSeries sum(cutoff);
    for (const auto& [w, coeff] : p.terms()) {
        QSeries word = base_power(c, 2, w.a, cutoff);
        word = mul(word, base_power(c, 3, w.b, cutoff));
        word = mul(word, base_power(c, 4, w.c, cutoff));
        sum = sum + word.scaled(coeff);
    }
    std::scoped_lock lock(c.memo_mutex);
    return c.memo.emplace(memo_key, std::move(sum)).first->second;
}

void clear_expand_memo() {
    auto& c = cache();
    std::scoped_lock lock(c.memo_mutex, c.power_mutex);
    c.memo.clear();
    c.powers.clear();
}

ThetaPolynomial shadow(const ThetaPolynomial& p) {
    ThetaPolynomial out;
    for (const auto& [w, c] : p.terms()) {
        if (w.a % 4 != 0) {
            throw domain_error("shadow of Th2^" + std::to_string(w.a) +
                               "... needs eighth roots of unity (Th2 exponent not divisible by 4)");
        }
        int sign = (w.a / 4) % 2 == 0 ? 1 : -1;
        out = out + ThetaPolynomial::word({w.b, w.c, w.a}, c * sign);
    }
    return out;
}

IdentityCheck verify_identity(const ThetaPolynomial& lhs, const ThetaPolynomial& rhs,
                              Exponent cutoff) {
    QSeries a = expand(lhs, cutoff);
    QSeries b = expand(rhs, cutoff);
    QSeries diff = a - b;
    IdentityCheck res;
    res.cutoff = cutoff;
    if (diff.is_zero()) {
        res.equal = true;
        return res;
    }
    res.equal = false;
    res.first_difference = diff.lead_exponent();
    res.lhs_coeff = a.coeff(res.first_difference);
    res.rhs_coeff = b.coeff(res.first_difference);
    return res;
}

namespace {

struct FormParser {
    const std::string& text;
    std::size_t pos = 0;

    explicit FormParser(const std::string& t) : text(t) {}

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    ThetaPolynomial parse_expr() {
        ThetaPolynomial acc = parse_term();
        while (true) {
            if (eat('+'))
                acc = acc + parse_term();
            else if (eat('-'))
                acc = acc - parse_term();
            else
                return acc;
        }
    }

    ThetaPolynomial parse_term() {
        ThetaPolynomial acc = parse_factor();
        while (eat('*')) acc = acc * parse_factor();
        return acc;
    }

    ThetaPolynomial parse_factor() {
        ThetaPolynomial atom = parse_atom();
        if (eat('^')) {
            long e = parse_integer();
            if (e < 0) throw parse_error("negative exponent in form expression");
            return atom.pow(static_cast<unsigned>(e));
        }
        return atom;
    }

    long parse_integer() {
        skip_ws();
        std::size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw parse_error("expected integer at position " + std::to_string(pos));
        return std::stol(text.substr(start, pos - start));
    }

    ThetaPolynomial parse_atom() {
        skip_ws();
        if (pos >= text.size()) throw parse_error("unexpected end of form expression");
        char c = text[pos];
        if (c == '(') {
            ++pos;
            ThetaPolynomial inner = parse_expr();
            if (!eat(')')) throw parse_error("missing ')'");
            return inner;
        }
        if (c == '-') {
            ++pos;
            return -parse_factor();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (pos < text.size() && text[pos] == '/') {
                ++pos;
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            }
            return ThetaPolynomial::constant(parse_rational(text.substr(start, pos - start)));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos;
            while (pos < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[pos])))) ++pos;
            std::string name = text.substr(start, pos - start);
            if (name == "Sh") {
                if (!eat('(')) throw parse_error("Sh must be followed by (...)");
                ThetaPolynomial inner = parse_expr();
                if (!eat(')')) throw parse_error("missing ')' after Sh(");
                return shadow(inner);
            }
            if (auto f = forms::by_name(name)) return *f;
            throw parse_error("unknown form identifier: " + name);
        }
        throw parse_error(std::string("unexpected character '") + c + "' in form expression");
    }
};

}  // namespace

ThetaPolynomial parse_form(const std::string& text) {
    FormParser parser(text);
    ThetaPolynomial p = parser.parse_expr();
    parser.skip_ws();
    if (parser.pos != text.size()) {
        throw parse_error("trailing input in form expression at position " +
                          std::to_string(parser.pos));
    }
    return p;
}

}  // namespace lattheta
