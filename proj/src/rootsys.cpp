#include "lattheta/rootsys.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <functional>
#include <map>
#include <sstream>

namespace lattheta {

int IrreducibleComponent::coxeter() const {
    switch (family) {
        case 'O':
            return 0;
        case 'A':
            return rank + 1;
        case 'D':
            if (rank < 4) throw domain_error("D_n needs n >= 4 in the norm-2 catalog");
            return 2 * (rank - 1);
        case 'E':
            if (rank == 6) return 12;
            if (rank == 7) return 18;
            if (rank == 8) return 30;
            throw domain_error("E family has ranks 6, 7, 8");
        default:
            throw domain_error("unknown root-system family");
    }
}

std::string IrreducibleComponent::name() const {
    return std::string(1, family) + std::to_string(rank);
}

int RootSystem::rank() const {
    int r = 0;
    for (const auto& [c, k] : components) r += c.rank * k;
    return r;
}

long long RootSystem::size() const {
    long long s = 0;
    for (const auto& [c, k] : components) s += c.size() * k;
    return s;
}

bool RootSystem::empty() const { return size() == 0; }

std::vector<int> RootSystem::coxeter_list() const {
    std::vector<int> hs;
    for (const auto& [c, k] : components)
        if (c.family != 'O') hs.push_back(c.coxeter());
    std::sort(hs.begin(), hs.end());
    hs.erase(std::unique(hs.begin(), hs.end()), hs.end());
    return hs;
}

bool RootSystem::strongly_eutactic() const { return coxeter_list().size() <= 1; }

std::optional<int> RootSystem::coxeter() const {
    auto hs = coxeter_list();
    if (hs.empty()) return 0;  // empty system
    if (hs.size() > 1) return std::nullopt;
    return hs[0];
}

std::string RootSystem::name() const {
    if (components.empty()) return "empty";
    // empty components merge into a single O_n
    int o_rank = 0;
    std::vector<std::string> parts;
    for (const auto& [c, k] : components) {
        if (c.family == 'O')
            o_rank += c.rank * k;
        else
            parts.push_back((k > 1 ? std::to_string(k) : "") + c.name());
    }
    if (o_rank > 0) parts.push_back("O" + std::to_string(o_rank));
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += "+";
        out += parts[i];
    }
    return out;
}

RootSystem RootSystem::parse(const std::string& text) {
    std::map<IrreducibleComponent, int> acc;
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    std::size_t pos = 0;
    while (pos < t.size()) {
        int mult = 0;
        while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos])))
            mult = mult * 10 + (t[pos++] - '0');
        if (mult == 0) mult = 1;
        if (pos >= t.size() || !std::isalpha(static_cast<unsigned char>(t[pos])))
            throw parse_error("bad root system: " + text);
        char family = t[pos++];
        int rank = 0;
        while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos])))
            rank = rank * 10 + (t[pos++] - '0');
        if (rank == 0) throw parse_error("bad component rank in: " + text);
        if (family == 'O') {
            acc[{'O', 1}] += mult * rank;  // O_n = n copies of O_1
        } else {
            acc[{family, rank}] += mult;
        }
        if (pos < t.size()) {
            if (t[pos] != '+') throw parse_error("expected '+' in root system: " + text);
            ++pos;
        }
    }
    RootSystem r;
    for (const auto& [c, k] : acc) {
        (void)c.coxeter();  // validates family/rank
        r.components.emplace_back(c, k);
    }
    return r;
}

CoxeterProfile coxeter_profile(const RootSystem& r) {
    CoxeterProfile p;
    p.component_coxeters = r.coxeter_list();
    p.strongly_eutactic = r.strongly_eutactic();
    if (p.strongly_eutactic) p.coxeter = r.coxeter();
    return p;
}

Rational condition_value(int n, int h, int two_j) {
    if (n < 1) throw domain_error("rank must be positive");
    if (two_j < 2 || two_j % 2) throw domain_error("degree must be even and >= 2");
    if (n == 1) {
        // Rank-1 kernels are degenerate (dim Har_j(R^1) = 0 for j >= 2); the
        // only rank-1 system is A_1 with h = 2, and it meets every condition.
        return Rational(h - 2);
    }
    const GegenbauerPoly& g = gegenbauer(n, two_j);
    Rational at1 = g.eval(1);
    Rational at_half = g.eval(Rational(1, 2));
    Rational at0 = g.eval(0);
    return 2 * at1 + Rational(4 * h - 8) * at_half + Rational(static_cast<long>(n) * h - 4 * h + 6) * at0;
}

Rational displayed_condition_poly(int two_j, int n, int h) {
    Rational N(n), H(h);
    switch (two_j) {
        case 2:
            return 0;
        case 4:
            return N * (N + 4) * (N + 6) * ((N - 10) * H + 6 * (N + 2));
        case 6:
            return N * (N + 2) * (N + 6) * (N + 10) *
                   ((N * N - 48 * N + 272) * H + 30 * (N - 4) * (N + 4));
        case 8:
            return N * (N + 2) * (N + 4) * (N + 8) * (N + 14) *
                   ((N - 4) * (N - 30) * (N - 50) * H +
                    42 * (N + 6) * (3 * N * N - 14 * N + 40));
        case 10:
            return (N - 2) * N * (N + 2) * (N + 4) * (N + 6) * (N + 10) * (N + 18) *
                   ((N - 24) * (N - 28) * (N - 76) * H +
                    30 * (N + 8) * (17 * N * N - 8 * N + 336));
        case 12: {
            Rational poly = ((((N - 186) * N + 10852) * N - 228504) * N + 1659232) * N - 967680;
            return N * (N + 2) * (N + 4) * (N + 6) * (N + 8) * (N + 12) * (N + 22) *
                   (poly * H + 66 * N * (N - 2) * (N + 10) * (31 * N * N + 130 * N + 1144));
        }
        default:
            throw domain_error("displayed polynomials cover 2j = 2..12");
    }
}

std::vector<RootSystem> systems_with(int n, int h) {
    // irreducibles with Coxeter number h
    std::vector<IrreducibleComponent> comps;
    if (h >= 2) comps.push_back({'A', h - 1});
    if (h >= 6 && h % 2 == 0) comps.push_back({'D', h / 2 + 1});
    if (h == 12) comps.push_back({'E', 6});
    if (h == 18) comps.push_back({'E', 7});
    if (h == 30) comps.push_back({'E', 8});
    std::sort(comps.begin(), comps.end(),
              [](const IrreducibleComponent& a, const IrreducibleComponent& b) {
                  return a.rank < b.rank;
              });
    std::vector<RootSystem> result;
    std::vector<int> mult(comps.size(), 0);
    std::function<void(std::size_t, int)> recurse = [&](std::size_t idx, int remaining) {
        if (remaining == 0) {
            RootSystem r;
            for (std::size_t i = 0; i < comps.size(); ++i)
                if (mult[i] > 0) r.components.emplace_back(comps[i], mult[i]);
            std::sort(r.components.begin(), r.components.end());
            if (!r.components.empty()) result.push_back(std::move(r));
            return;
        }
        if (idx == comps.size()) return;
        for (int k = 0; k * comps[idx].rank <= remaining; ++k) {
            mult[idx] = k;
            recurse(idx + 1, remaining - k * comps[idx].rank);
        }
        mult[idx] = 0;
    };
    if (h > 0) recurse(0, n);
    return result;
}

std::vector<ClassifyEntry> classify(int two_j, int n_max, int h_max) {
    std::vector<ClassifyEntry> entries;
    for (int n = 1; n <= n_max; ++n) {
        // condition_value is linear in h: value = A*h + B
        Rational b = condition_value(n, 0, two_j);
        Rational a = condition_value(n, 1, two_j) - b;
        if (a == 0) {
            if (b == 0) {
                ClassifyEntry e;
                e.n = n;
                e.h = std::nullopt;
                for (int h = 1; h <= h_max; ++h)
                    for (RootSystem& r : systems_with(n, h)) e.systems.push_back(std::move(r));
                entries.push_back(std::move(e));
            }
            continue;
        }
        Rational h = -b / a;
        if (h <= 0 || h.get_den() != 1) continue;
        if (!h.get_num().fits_sint_p()) continue;
        ClassifyEntry e;
        e.n = n;
        e.h = static_cast<int>(h.get_num().get_si());
        e.systems = systems_with(n, *e.h);
        entries.push_back(std::move(e));
    }
    return entries;
}

namespace {

void append_block(std::vector<std::vector<Rational>>& out, int offset, int width,
                  const std::vector<std::vector<Rational>>& roots, int total_width) {
    for (const auto& r : roots) {
        std::vector<Rational> v(total_width, 0);
        for (int k = 0; k < width; ++k) v[offset + k] = r[k];
        out.push_back(std::move(v));
    }
}

std::vector<std::vector<Rational>> e8_roots() {
    std::vector<std::vector<Rational>> roots;
    for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j)
            for (int si = -1; si <= 1; si += 2)
                for (int sj = -1; sj <= 1; sj += 2) {
                    std::vector<Rational> v(8, 0);
                    v[i] = si;
                    v[j] = sj;
                    roots.push_back(std::move(v));
                }
    for (int mask = 0; mask < 256; ++mask) {
        if (std::popcount(static_cast<unsigned>(mask)) % 2) continue;
        std::vector<Rational> v(8);
        for (int k = 0; k < 8; ++k) v[k] = Rational((mask >> k) & 1 ? -1 : 1, 2);
        roots.push_back(std::move(v));
    }
    return roots;
}

std::vector<std::vector<Rational>> irreducible_roots(const IrreducibleComponent& c, int& width) {
    std::vector<std::vector<Rational>> roots;
    if (c.family == 'O') {
        width = c.rank;
        return roots;
    }
    if (c.family == 'A') {
        width = c.rank + 1;
        for (int i = 0; i <= c.rank; ++i)
            for (int j = 0; j <= c.rank; ++j) {
                if (i == j) continue;
                std::vector<Rational> v(width, 0);
                v[i] = 1;
                v[j] = -1;
                roots.push_back(std::move(v));
            }
        return roots;
    }
    if (c.family == 'D') {
        width = c.rank;
        for (int i = 0; i < c.rank; ++i)
            for (int j = i + 1; j < c.rank; ++j)
                for (int si = -1; si <= 1; si += 2)
                    for (int sj = -1; sj <= 1; sj += 2) {
                        std::vector<Rational> v(width, 0);
                        v[i] = si;
                        v[j] = sj;
                        roots.push_back(std::move(v));
                    }
        return roots;
    }
    // E family: filter E8 roots by orthogonality
    width = 8;
    std::vector<std::vector<Rational>> constraints;
    if (c.rank <= 7) constraints.push_back({0, 0, 0, 0, 0, 0, 1, 1});
    if (c.rank == 6) constraints.push_back({0, 0, 0, 0, 0, 1, 0, 1});
    for (auto& r : e8_roots()) {
        bool ok = true;
        for (const auto& w : constraints) {
            Rational dot = 0;
            for (int k = 0; k < 8; ++k) dot += r[k] * w[k];
            if (dot != 0) {
                ok = false;
                break;
            }
        }
        if (ok) roots.push_back(std::move(r));
    }
    return roots;
}

}  // namespace

std::vector<std::vector<Rational>> root_vectors(const RootSystem& r) {
    // total ambient width
    int total = 0;
    std::vector<std::tuple<IrreducibleComponent, int, int>> layout;  // comp, offset, width
    for (const auto& [c, k] : r.components) {
        for (int copy = 0; copy < k; ++copy) {
            int width = 0;
            (void)irreducible_roots(c, width);  // width only
            layout.emplace_back(c, total, width);
            total += width;
        }
    }
    std::vector<std::vector<Rational>> out;
    for (const auto& [c, offset, width] : layout) {
        int w = 0;
        auto roots = irreducible_roots(c, w);
        append_block(out, offset, w, roots, total);
    }
    return out;
}

TripleCheck validate_triple(const RootSystem& R, const RootSystem& S, const RootSystem& T,
                            const std::vector<std::pair<RootSystem, RootSystem>>& catalog_pairs,
                            const TripleVectors* vectors) {
    if (!S.strongly_eutactic() || !T.strongly_eutactic())
        throw domain_error("S and T must be strongly eutactic");
    auto included = [&](const RootSystem& small, const RootSystem& big) {
        if (small == big) return true;
        for (const auto& [a, b] : catalog_pairs)
            if (a == small && b == big) return true;
        return false;
    };
    if (!included(R, S) || !included(R, T))
        throw domain_error("inclusion not recorded in the catalog pair table");

    TripleCheck check;
    check.h_r = Rational(static_cast<long>(R.size()), 24);
    check.h_r.canonicalize();
    check.h_s = *S.coxeter();
    check.h_t = *T.coxeter();
    check.residual = Rational(check.h_s + check.h_t) - 3 * check.h_r - 2;
    Rational shadow2 = 24 * (Rational(check.h_s + check.h_t) - 2 * check.h_r);
    check.shadow2_expected = shadow2.get_num();
    Rational c2 = (check.h_r - 46 + 2 * 24) * 24;
    check.c2 = c2.get_num();
    check.valid = check.residual == 0;
    if (!check.valid)
        check.notes.push_back("h_S + h_T != 3 h_R + 2 (residual " + rational_str(check.residual) + ")");
    if (check.valid && check.shadow2_expected != check.c2)
        check.notes.push_back("shadow count disagrees with c_2");

    if (vectors && vectors->shadow_shell2 && vectors->lattice_shell2) {
        const Shell& sh2 = *vectors->shadow_shell2;
        const Shell& r2 = *vectors->lattice_shell2;
        if (static_cast<long long>(sh2.size()) != check.shadow2_expected.get_si())
            check.notes.push_back("enumerated |Sh(Λ)_2| != 24(h_S+h_T-2h_R)");
        // profile counts from the first shadow vector against R (= T here)
        long expected_n1 = check.h_s - 2;
        Rational expected_n0 = Rational(8 * check.h_t + 6 * check.h_s - 12);
        Rational expected_nhalf = 12 * (Rational(check.h_t) - check.h_r);
        for (std::size_t si = 0; si < std::min<std::size_t>(sh2.size(), 4); ++si) {
            long n1 = 0, nhalf = 0, n0 = 0;
            for (std::size_t j = 0; j < r2.size(); ++j) {
                // mixed inner product: shells share the same ambient space
                Rational ip = 0;
                auto a = sh2.vector_at(si);
                auto b = r2.vector_at(j);
                for (std::size_t k = 0; k < a.size(); ++k) ip += a[k] * b[k];
                if (ip == 1 || ip == -1) ++n1;
                if (ip == Rational(1, 2) || ip == Rational(-1, 2)) ++nhalf;
                if (ip == 0) ++n0;
            }
            if (n1 != 2 * expected_n1)
                check.notes.push_back("N_{±1}(s,R) mismatch at shadow vector " + std::to_string(si));
            if (Rational(nhalf) != 2 * expected_nhalf)
                check.notes.push_back("N_{±1/2}(s,T) mismatch at shadow vector " + std::to_string(si));
            if (Rational(n0) != expected_n0)
                check.notes.push_back("N_0(s,R) mismatch at shadow vector " + std::to_string(si));
        }
    }
    check.valid = check.residual == 0 && check.notes.empty();
    return check;
}

}  // namespace lattheta
