#include "lattheta/designs.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <sstream>

#include "json.hpp"

namespace lattheta {

Integer dim_harmonics(int n, int j) {
    if (j < 0) return 0;
    if (j == 0) return 1;
    if (j == 1) return n;
    return binomial(n + j - 1, j) - binomial(n + j - 3, j - 2);
}

GegenbauerPoly::GegenbauerPoly(int dim, int degree) : dim_(dim), degree_(degree) {
    if (dim < 2) throw domain_error("Gegenbauer kernels need dimension >= 2");
    if (degree < 0) throw domain_error("Gegenbauer degree must be nonnegative");
    // monic recurrence p_{j+1} = t p_j - b_j p_{j-1} with
    // b_1 = 1/n, b_j = j(j+n-3) / ((2j+n-2)(2j+n-4)) for j >= 2.
    std::vector<Rational> prev{1};  // p_0
    if (degree == 0) {
        coeffs_ = prev;
        return;
    }
    std::vector<Rational> cur{0, 1};  // p_1 = t
    for (int j = 1; j < degree; ++j) {
        Rational b = j == 1 ? Rational(1, dim)
                            : Rational(static_cast<long>(j) * (j + dim - 3),
                                       static_cast<long>(2 * j + dim - 2) * (2 * j + dim - 4));
        b.canonicalize();
        std::vector<Rational> next(cur.size() + 1, 0);
        for (std::size_t k = 0; k < cur.size(); ++k) next[k + 1] = cur[k];
        for (std::size_t k = 0; k < prev.size(); ++k) next[k] -= b * prev[k];
        prev = std::move(cur);
        cur = std::move(next);
    }
    // rescale so the value at 1 is dim Har_j
    Rational at_one = 0;
    for (const Rational& c : cur) at_one += c;
    Rational target(dim_harmonics(dim, degree));
    Rational scale = target / at_one;
    for (Rational& c : cur) c *= scale;
    coeffs_ = std::move(cur);
}

Rational GegenbauerPoly::eval(const Rational& t) const {
    Rational acc = 0;
    for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * t + coeffs_[k];
    return acc;
}

const GegenbauerPoly& gegenbauer(int n, int j) {
    static std::mutex mutex;
    static std::map<std::pair<int, int>, GegenbauerPoly> cache;
    std::scoped_lock lock(mutex);
    auto it = cache.find({n, j});
    if (it == cache.end()) it = cache.emplace(std::make_pair(n, j), GegenbauerPoly(n, j)).first;
    return it->second;
}

std::string StrengthVerdict::display() const {
    std::ostringstream out;
    if (exactness == Exactness::lower_bound && failing_degrees.empty()) out << ">=";
    out << strength_times_two / 2;
    if (strength_times_two % 2) out << ".5";
    return out.str();
}

std::string StrengthVerdict::json() const {
    nlohmann::ordered_json j;
    std::ostringstream strength_text;
    strength_text << strength_times_two / 2;
    if (strength_times_two % 2) strength_text << ".5";
    j["strength"] = strength_text.str();
    j["exact"] = exactness == Exactness::exact;
    auto failing = nlohmann::ordered_json::array();
    for (const auto& f : failing_degrees)
        failing.push_back({{"degree", f.degree}, {"kernel_sum", rational_str(f.witness)}});
    j["failing"] = std::move(failing);
    j["max_degree_checked"] = max_degree_checked;
    return j.dump();
}

StrengthVerdict assemble_strength(const std::function<DegreeOutcome(int)>& condition,
                                  int max_degree) {
    if (max_degree < 4 || max_degree % 2 != 0)
        throw domain_error("max_degree must be an even integer >= 4");
    StrengthVerdict v;
    v.max_degree_checked = max_degree;
    std::map<int, DegreeOutcome> outcomes;
    for (int d = 2; d <= max_degree; d += 2) {
        outcomes[d] = condition(d);
        if (outcomes[d].state != CondState::holds)
            v.failing_degrees.push_back({d, outcomes[d].witness});
    }
    int first_fail = 0;
    for (int d = 2; d <= max_degree; d += 2) {
        if (outcomes[d].state != CondState::holds) {
            first_fail = d;
            break;
        }
    }
    if (first_fail == 0) {
        // everything up to max_degree holds
        v.strength_times_two = 2 * (max_degree + 1);
        v.exactness = StrengthVerdict::Exactness::lower_bound;
        return v;
    }
    int t = first_fail - 1;  // 2s+1
    bool stop_certified = outcomes[first_fail].state == CondState::fails;
    bool half = false;
    if (first_fail + 2 <= max_degree && outcomes[first_fail + 2].state == CondState::holds)
        half = true;
    v.strength_times_two = 2 * t + (half ? 1 : 0);
    v.exactness = stop_certified ? StrengthVerdict::Exactness::exact
                                 : StrengthVerdict::Exactness::lower_bound;
    return v;
}

int WeightedSet::kernel_dim() const {
    return dim_override > 0 ? dim_override : points->dim();
}

WeightedSet uniform_weights(const Shell& shell, int dim_override) {
    if (shell.size() == 0) throw domain_error("empty shell has no weights");
    WeightedSet w;
    w.points = &shell;
    w.class_weight = {Rational(1, static_cast<long>(shell.size()))};
    w.class_weight[0].canonicalize();
    w.dim_override = dim_override;
    return w;
}

WeightedSet code_orbit_weights(const BinaryCode& code, const Shell& shell) {
    if (!shell.ambient() || shell.denom() != 1)
        throw domain_error("code orbit weights need integer shell coordinates");
    if (shell.dim() != code.length) throw domain_error("code length / shell dimension mismatch");
    auto enumerator = code.weight_enumerator();
    // lambda(W) = A_W / C(n, W)
    std::vector<Rational> lambda(code.length + 1, 0);
    for (const auto& [w, count] : enumerator) {
        lambda[w] = Rational(Integer(static_cast<long>(count)), binomial(code.length, w));
        lambda[w].canonicalize();
    }
    WeightedSet ws;
    ws.points = &shell;
    ws.point_class.resize(shell.size());
    Rational total = 0;
    for (std::size_t i = 0; i < shell.size(); ++i) {
        const std::int32_t* v = shell.at(i);
        int w = 0;
        for (int k = 0; k < shell.dim(); ++k) w += (std::abs(v[k]) % 2);
        ws.point_class[i] = w;
        total += lambda[w];
    }
    if (total == 0) throw domain_error("code orbit weights vanish on the whole shell");
    ws.class_weight.resize(code.length + 1, 0);
    for (int w = 0; w <= code.length; ++w) ws.class_weight[w] = lambda[w] / total;
    return ws;
}

KernelEvaluator::KernelEvaluator(const WeightedSet& X) {
    if (X.points == nullptr || X.points->size() == 0) throw domain_error("empty weighted set");
    dim_ = X.kernel_dim();
    norm_ = X.points->norm();
    scale_ = Rational(static_cast<long>(X.points->size()));
    ClassedPairCounts pairs = classed_pair_counts(*X.points, X.point_class);
    for (const auto& [key, count] : pairs.counts) {
        auto [cx, cy, ip] = key;
        Rational w = X.class_weight[cx] * X.class_weight[cy];
        if (w == 0) continue;
        weighted_pairs_.emplace_back(w, ip / norm_, count);
    }
}

Rational KernelEvaluator::sum(int degree) const {
    const GegenbauerPoly& g = gegenbauer(dim_, degree);
    Rational acc = 0;
    for (const auto& [w, t, count] : weighted_pairs_)
        acc += w * g.eval(t) * Rational(static_cast<long>(count));
    return acc * scale_;
}

Rational kernel_sum(const WeightedSet& X, int degree) {
    return KernelEvaluator(X).sum(degree);
}

namespace {

void check_antipodal(const WeightedSet& X) {
    const Shell& s = *X.points;
    // shell vectors are sorted lexicographically only when enumerated; use a set
    std::map<std::vector<std::int32_t>, std::size_t> index;
    for (std::size_t i = 0; i < s.size(); ++i) {
        std::vector<std::int32_t> v(s.at(i), s.at(i) + s.dim());
        index.emplace(std::move(v), i);
    }
    for (std::size_t i = 0; i < s.size(); ++i) {
        std::vector<std::int32_t> neg(s.at(i), s.at(i) + s.dim());
        for (auto& x : neg) x = -x;
        auto it = index.find(neg);
        if (it == index.end()) throw domain_error("point set is not antipodal");
        if (X.weight_of(i) != X.weight_of(it->second))
            throw domain_error("weights are not antipodal");
    }
}

}  // namespace

StrengthVerdict strength(const WeightedSet& X, int max_degree) {
    check_antipodal(X);
    KernelEvaluator eval(X);
    return assemble_strength(
        [&](int degree) {
            Rational s = eval.sum(degree);
            if (s < 0) throw std::logic_error("negative Gegenbauer kernel sum");
            DegreeOutcome out;
            out.state = s == 0 ? CondState::holds : CondState::fails;
            out.witness = s;
            return out;
        },
        max_degree);
}

Rational sum_over_shell(const Shell& shell,
                        const std::function<Rational(const std::vector<Rational>&)>& poly) {
    Rational acc = 0;
    for (std::size_t i = 0; i < shell.size(); ++i) acc += poly(shell.vector_at(i));
    return acc;
}

}  // namespace lattheta
