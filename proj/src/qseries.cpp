#include "lattheta/qseries.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace lattheta {

namespace {

// Least common multiple of all term denominators. Dyadic in practice.
Integer common_denominator(const QSeries& s) {
    Integer d = 1;
    for (const auto& [e, c] : s.terms()) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), c.get_den_mpz_t());
    return d;
}

}  // namespace

QSeries QSeries::monomial(Rational coeff, Exponent e, Exponent cutoff) {
    QSeries s(cutoff);
    if (e > cutoff) throw domain_error("monomial exponent beyond cutoff");
    coeff.canonicalize();
    if (coeff != 0) s.terms_.emplace_back(e, std::move(coeff));
    return s;
}

QSeries QSeries::from_terms(std::vector<Term> terms, Exponent cutoff) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    QSeries s(cutoff);
    for (auto& [e, c] : terms) {
        if (e > cutoff) throw domain_error("term exponent beyond cutoff");
        c.canonicalize();
        if (!s.terms_.empty() && s.terms_.back().first == e)
            s.terms_.back().second += c;
        else
            s.terms_.emplace_back(e, std::move(c));
    }
    std::erase_if(s.terms_, [](const Term& t) { return t.second == 0; });
    return s;
}

Exponent QSeries::lead_exponent() const {
    if (terms_.empty()) throw domain_error("zero series has no leading exponent");
    return terms_.front().first;
}

const Rational& QSeries::coeff(Exponent e) const {
    if (e > cutoff_) {
        throw std::out_of_range("coefficient request at exponent " + std::to_string(e) +
                                " beyond cutoff " + std::to_string(cutoff_));
    }
    static const Rational kZero = 0;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term& t, Exponent x) { return t.first < x; });
    if (it != terms_.end() && it->first == e) return it->second;
    return kZero;
}

QSeries QSeries::truncated(Exponent new_cutoff) const {
    if (new_cutoff > cutoff_) throw domain_error("cannot extend a truncated series");
    QSeries s(new_cutoff);
    for (const auto& t : terms_) {
        if (t.first > new_cutoff) break;
        s.terms_.push_back(t);
    }
    return s;
}

QSeries QSeries::scaled_exponents(long num, long den) const {
    QSeries s((cutoff_ * num) / den);
    for (const auto& [e, c] : terms_) {
        long long scaled = e * num;
        if (scaled % den != 0) throw domain_error("exponent substitution leaves the 1/8 grid");
        s.terms_.emplace_back(scaled / den, c);
    }
    return s;
}

QSeries QSeries::shifted(Exponent delta) const {
    QSeries s(cutoff_ + delta);
    for (const auto& [e, c] : terms_) s.terms_.emplace_back(e + delta, c);
    return s;
}

QSeries QSeries::operator-() const {
    QSeries s(cutoff_);
    s.terms_.reserve(terms_.size());
    for (const auto& [e, c] : terms_) s.terms_.emplace_back(e, -c);
    return s;
}

QSeries QSeries::scaled(const Rational& c) const {
    if (c == 0) return QSeries(cutoff_);
    QSeries s(cutoff_);
    s.terms_.reserve(terms_.size());
    for (const auto& [e, v] : terms_) s.terms_.emplace_back(e, c * v);
    return s;
}

QSeries operator+(const QSeries& a, const QSeries& b) {
    Exponent cutoff = std::min(a.cutoff_, b.cutoff_);
    QSeries s(cutoff);
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    while (ia != a.terms_.end() || ib != b.terms_.end()) {
        bool take_a = ib == b.terms_.end() ||
                      (ia != a.terms_.end() && ia->first <= ib->first);
        bool take_b = ia == a.terms_.end() ||
                      (ib != b.terms_.end() && ib->first <= ia->first);
        Exponent e = take_a ? ia->first : ib->first;
        if (e > cutoff) break;
        Rational c = 0;
        if (take_a) c += (ia++)->second;
        if (take_b) c += (ib++)->second;
        if (c != 0) s.terms_.emplace_back(e, std::move(c));
    }
    return s;
}

QSeries operator-(const QSeries& a, const QSeries& b) { return a + (-b); }

QSeries mul(const QSeries& a, const QSeries& b) {
    Exponent cutoff = std::min(a.cutoff(), b.cutoff());
    if (a.is_zero() || b.is_zero()) return QSeries(cutoff);

    // Convolution over a common denominator: the inner loop is pure
    // mpz_addmul, coefficients are renormalised once at the end.
    Integer da = common_denominator(a);
    Integer db = common_denominator(b);

    Exponent base = a.terms().front().first + b.terms().front().first;
    if (base > cutoff) return QSeries(cutoff);
    std::size_t width = static_cast<std::size_t>(cutoff - base) + 1;
    std::vector<Integer> acc(width);

    std::vector<std::pair<Exponent, Integer>> na, nb;
    na.reserve(a.term_count());
    nb.reserve(b.term_count());
    for (const auto& [e, c] : a.terms()) na.emplace_back(e, Integer(c.get_num() * (da / c.get_den())));
    for (const auto& [e, c] : b.terms()) nb.emplace_back(e, Integer(c.get_num() * (db / c.get_den())));

    for (const auto& [ea, ca] : na) {
        if (ea + nb.front().first > cutoff) break;
        for (const auto& [eb, cb] : nb) {
            Exponent e = ea + eb;
            if (e > cutoff) break;
            mpz_addmul(acc[static_cast<std::size_t>(e - base)].get_mpz_t(), ca.get_mpz_t(),
                       cb.get_mpz_t());
        }
    }

    Integer den = da * db;
    QSeries s(cutoff);
    for (std::size_t i = 0; i < width; ++i) {
        if (acc[i] == 0) continue;
        Rational c(std::move(acc[i]), den);
        c.canonicalize();
        s.terms_.emplace_back(base + static_cast<Exponent>(i), std::move(c));
    }
    return s;
}

QSeries pow(const QSeries& a, unsigned long k) {
    QSeries result = QSeries::one(a.cutoff());
    QSeries base = a;
    while (k > 0) {
        if (k & 1) result = mul(result, base);
        k >>= 1;
        if (k > 0) base = mul(base, base);
    }
    return result;
}

QSeries dissect(const QSeries& a, long residue, long modulus) {
    if (modulus <= 0) throw domain_error("dissect modulus must be positive");
    long long mod8 = static_cast<long long>(modulus) * kQStep;
    long long res8 = static_cast<long long>(residue) * kQStep;
    QSeries s(a.cutoff());
    for (const auto& t : a.terms()) {
        long long r = (t.first - res8) % mod8;
        if (r < 0) r += mod8;
        if (r == 0) s.terms_.push_back(t);
    }
    return s;
}

std::string QSeries::to_json() const {
    nlohmann::ordered_json j;
    j["cutoff_eighths"] = cutoff_;
    auto terms = nlohmann::ordered_json::array();
    for (const auto& [e, c] : terms_) terms.push_back({e, rational_str(c)});
    j["terms"] = std::move(terms);
    return j.dump();
}

QSeries QSeries::from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    QSeries s(j.at("cutoff_eighths").get<Exponent>());
    for (const auto& t : j.at("terms")) {
        s.terms_.emplace_back(t.at(0).get<Exponent>(), parse_rational(t.at(1).get<std::string>()));
    }
    return s;
}

std::string QSeries::pretty(std::size_t max_terms) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    std::size_t shown = 0;
    for (const auto& [e, c] : terms_) {
        if (shown == max_terms) {
            out << " + ...";
            break;
        }
        if (shown > 0) out << (c > 0 ? " + " : " - ");
        else if (c < 0) out << "-";
        Rational ac = abs(c);
        if (e == 0) {
            out << rational_str(ac);
        } else {
            if (ac != 1) out << rational_str(ac) << "*";
            out << "q^";
            if (e % kQStep == 0) {
                out << e / kQStep;
            } else {
                long long g = std::gcd(e, kQStep);
                out << "(" << e / g << "/" << kQStep / g << ")";
            }
        }
        ++shown;
    }
    return out.str();
}

}  // namespace lattheta
