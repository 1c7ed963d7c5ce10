#include "lattheta/shells.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <sstream>

namespace lattheta {

namespace {

struct Enumerator {
    const Lattice& L;
    int n;
    Rational target;          // exact norm
    long long mn, md;         // target = mn/md
    long long du = 1;         // shift denominator
    std::vector<long long> u;  // du * shift (basis coordinates)
    std::vector<double> q;     // Cholesky diagonal
    std::vector<std::vector<double>> mu;
    double m_d, eps;

    Enumerator(const Lattice& lattice, const Rational& m,
               const std::optional<std::vector<Rational>>& shift)
        : L(lattice), n(lattice.rank()), target(m) {
        mn = target.get_num().get_si();
        md = target.get_den().get_si();
        u.assign(n, 0);
        if (shift) {
            if (shift->size() != static_cast<std::size_t>(n))
                throw domain_error("coset shift dimension mismatch");
            Integer lcm = 1;
            for (const Rational& s : *shift)
                mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), s.get_den_mpz_t());
            du = lcm.get_si();
            for (int i = 0; i < n; ++i) {
                Rational scaled = (*shift)[i] * static_cast<long>(du);
                u[i] = scaled.get_num().get_si();
            }
        }
        const auto& G = L.gram_i64();
        std::vector<std::vector<double>> a(n, std::vector<double>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) a[i][j] = static_cast<double>(G[i][j]);
        q.assign(n, 0.0);
        mu.assign(n, std::vector<double>(n, 0.0));
        for (int i = 0; i < n; ++i) {
            q[i] = a[i][i];
            if (q[i] <= 0) throw domain_error("Cholesky failure on positive definite Gram");
            for (int j = i + 1; j < n; ++j) mu[i][j] = a[i][j] / q[i];
            for (int r = i + 1; r < n; ++r)
                for (int c = r; c < n; ++c) a[r][c] -= a[i][r] * a[i][c] / q[i];
        }
        m_d = mpq_get_d(target.get_mpq_t());
        eps = 1e-6 * (1.0 + m_d);
    }

    bool exact_norm_matches(const std::vector<long long>& c) const {
        const auto& G = L.gram_i64();
        __int128 s = 0;
        std::vector<long long> v(n);
        for (int i = 0; i < n; ++i) v[i] = du * c[i] + u[i];
        for (int i = 0; i < n; ++i) {
            long long row = 0;
            for (int j = 0; j < n; ++j) row += G[i][j] * v[j];
            s += static_cast<__int128>(v[i]) * row;
        }
        return s * md == static_cast<__int128>(mn) * du * du;
    }

    template <typename Emit>
    void run(Emit&& emit) const {
        std::vector<long long> c(n, 0);
        std::vector<double> x(n, 0.0);
        recurse(n - 1, 0.0, c, x, emit);
    }

  private:
    template <typename Emit>
    void recurse(int i, double partial, std::vector<long long>& c, std::vector<double>& x,
                 Emit& emit) const {
        if (i < 0) {
            if (exact_norm_matches(c)) emit(c);
            return;
        }
        double s = 0.0;
        for (int j = i + 1; j < n; ++j) s += mu[i][j] * x[j];
        double t_i = static_cast<double>(u[i]) / du;
        double rem = m_d + eps - partial;
        if (rem < 0) return;
        double r = std::sqrt(rem / q[i]);
        long long lo = static_cast<long long>(std::ceil(-t_i - s - r - 1e-9));
        long long hi = static_cast<long long>(std::floor(-t_i - s + r + 1e-9));
        for (long long ci = lo; ci <= hi; ++ci) {
            c[i] = ci;
            x[i] = static_cast<double>(ci) + t_i;
            double y = x[i] + s;
            double contrib = q[i] * y * y;
            if (partial + contrib > m_d + eps) continue;
            recurse(i - 1, partial + contrib, c, x, emit);
        }
    }
};

// Does flipping the signs of block coordinates in S keep the coset shift in
// the lattice (i.e. shift - flip(shift) ∈ L)?
bool flip_shift_ok(const Lattice& L, const std::vector<Rational>& shift,
                   const std::vector<int>& coords) {
    std::vector<Rational> diff(L.ambient_dim(), 0);
    for (int k : coords) diff[k] = 2 * shift[k];
    return L.contains(diff);
}

bool swap_shift_ok(const Lattice& L, const std::vector<Rational>& shift, int a, int b) {
    std::vector<Rational> diff(L.ambient_dim(), 0);
    diff[a] = shift[a] - shift[b];
    diff[b] = shift[b] - shift[a];
    return L.contains(diff);
}

std::vector<SymBlock> coset_symmetry(const Lattice& L, const std::vector<Rational>& shift_ambient) {
    std::vector<SymBlock> sym;
    for (SymBlock block : L.symmetry()) {
        if (!shift_ambient.empty()) {
            if (block.perm) {
                for (int k = block.offset; k + 1 < block.offset + block.size && block.perm; ++k)
                    if (!swap_shift_ok(L, shift_ambient, k, k + 1)) block.perm = false;
            }
            if (block.flips == FlipSymmetry::all) {
                for (int k = block.offset; k < block.offset + block.size; ++k)
                    if (!flip_shift_ok(L, shift_ambient, {k})) {
                        block.flips = FlipSymmetry::even;
                        break;
                    }
            }
            if (block.flips == FlipSymmetry::even) {
                for (int k = block.offset + 1; k < block.offset + block.size; ++k)
                    if (!flip_shift_ok(L, shift_ambient, {block.offset, k})) {
                        block.flips = FlipSymmetry::none;
                        break;
                    }
            }
        }
        sym.push_back(block);
    }
    return sym;
}

}  // namespace

std::vector<Rational> Shell::vector_at(std::size_t i) const {
    std::vector<Rational> v(dim_);
    for (int k = 0; k < dim_; ++k) {
        v[k] = Rational(static_cast<long>(at(i)[k]), static_cast<long>(denom_));
        v[k].canonicalize();
    }
    return v;
}

std::vector<long long> Shell::coeff_vector(std::size_t i) const {
    if (!ambient_) {
        std::vector<long long> c(dim_);
        for (int k = 0; k < dim_; ++k) {
            if (at(i)[k] % denom_ != 0)
                throw domain_error("coset member has fractional basis coefficients");
            c[k] = at(i)[k] / denom_;
        }
        return c;
    }
    std::vector<Rational> coords = lattice_->to_coords(vector_at(i));
    std::vector<long long> c(coords.size());
    for (std::size_t k = 0; k < coords.size(); ++k) {
        if (coords[k].get_den() != 1)
            throw domain_error("coset member has fractional basis coefficients");
        c[k] = coords[k].get_num().get_si();
    }
    return c;
}

Rational Shell::inner(std::size_t i, std::size_t j) const {
    if (ambient_ || lattice_ == nullptr) {
        long long dot = 0;
        const std::int32_t* a = at(i);
        const std::int32_t* b = at(j);
        for (int k = 0; k < dim_; ++k) dot += static_cast<long long>(a[k]) * b[k];
        Rational r(static_cast<long>(dot), static_cast<long>(denom_ * denom_));
        r.canonicalize();
        return r;
    }
    const auto& G = lattice_->gram_i64();
    const std::int32_t* a = at(i);
    const std::int32_t* b = at(j);
    long long dot = 0;
    for (int k = 0; k < dim_; ++k) {
        long long row = 0;
        for (int l = 0; l < dim_; ++l) row += G[k][l] * b[l];
        dot += a[k] * row;
    }
    Rational r(static_cast<long>(dot), static_cast<long>(denom_ * denom_));
    r.canonicalize();
    return r;
}

std::string Shell::to_tsv() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < size(); ++i) {
        std::vector<Rational> v = vector_at(i);
        for (int k = 0; k < dim_; ++k) {
            if (k) out << '\t';
            out << rational_str(v[k]);
        }
        out << '\n';
    }
    return out.str();
}

Shell Shell::from_vectors(const std::vector<std::vector<Rational>>& vectors) {
    if (vectors.empty()) throw domain_error("empty point set");
    Shell s;
    s.dim_ = static_cast<int>(vectors[0].size());
    s.ambient_ = true;
    Integer lcm = 1;
    for (const auto& v : vectors) {
        if (v.size() != static_cast<std::size_t>(s.dim_)) throw domain_error("ragged point set");
        for (const Rational& x : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
    }
    s.denom_ = lcm.get_si();
    Rational norm0;
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        Rational norm = 0;
        for (const Rational& x : vectors[i]) norm += x * x;
        if (i == 0)
            norm0 = norm;
        else if (norm != norm0)
            throw domain_error("mixed-norm point set");
        for (const Rational& x : vectors[i]) {
            Rational scaled = x * static_cast<long>(s.denom_);
            s.flat_.push_back(static_cast<std::int32_t>(scaled.get_num().get_si()));
        }
    }
    s.norm_ = norm0;
    s.sym_ = {{0, s.dim_, false, FlipSymmetry::none}};
    return s;
}

namespace {

template <typename Emit>
void enumerate_impl(const Lattice& L, const Rational& m,
                    const std::optional<std::vector<Rational>>& shift, Emit&& emit) {
    if (m <= 0) throw domain_error("shell norm must be positive");
    Enumerator e(L, m, shift);
    e.run(emit);
}

}  // namespace

std::size_t count_shell(const Lattice& L, const Rational& m,
                        const std::optional<std::vector<Rational>>& coset_shift_coeff,
                        const ShellOptions& options) {
    std::size_t count = 0;
    enumerate_impl(L, m, coset_shift_coeff, [&](const std::vector<long long>&) { ++count; });
    (void)options;
    return count;
}

Shell enumerate_shell(const Lattice& L, const Rational& m,
                      const std::optional<std::vector<Rational>>& coset_shift_coeff,
                      const ShellOptions& options) {
    if (options.predicted_size && *options.predicted_size > options.ceiling) {
        throw resource_error("predicted shell size " + std::to_string(*options.predicted_size) +
                             " exceeds ceiling " + std::to_string(options.ceiling));
    }
    Shell s;
    s.lattice_ = &L;
    s.norm_ = m;
    s.ambient_ = L.has_ambient();
    int n = L.rank();

    long long du = 1;
    std::vector<Rational> shift_ambient;
    if (coset_shift_coeff) {
        Integer lcm = 1;
        for (const Rational& x : *coset_shift_coeff)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
        du = lcm.get_si();
        if (s.ambient_) {
            shift_ambient.assign(L.ambient_dim(), 0);
            for (int i = 0; i < n; ++i)
                for (int k = 0; k < L.ambient_dim(); ++k)
                    shift_ambient[k] += (*coset_shift_coeff)[i] * L.basis()[i][k];
        }
    }

    if (s.ambient_) {
        s.dim_ = L.ambient_dim();
        // scaled integer basis and shift for fast exact coordinates
        Integer bden = 1;
        for (const auto& row : L.basis())
            for (const Rational& x : row) mpz_lcm(bden.get_mpz_t(), bden.get_mpz_t(), x.get_den_mpz_t());
        long long db = bden.get_si();
        s.denom_ = db * du;
        std::vector<long long> bs(static_cast<std::size_t>(n) * s.dim_);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < s.dim_; ++k) {
                Rational scaled = L.basis()[i][k] * static_cast<long>(db);
                bs[static_cast<std::size_t>(i) * s.dim_ + k] = scaled.get_num().get_si();
            }
        std::vector<long long> us(s.dim_, 0);
        for (int k = 0; k < s.dim_; ++k) {
            if (!shift_ambient.empty()) {
                Rational scaled = shift_ambient[k] * static_cast<long>(s.denom_);
                us[k] = scaled.get_num().get_si();
            }
        }
        enumerate_impl(L, m, coset_shift_coeff, [&](const std::vector<long long>& c) {
            if (s.flat_.size() / s.dim_ >= options.ceiling)
                throw resource_error("shell size exceeds ceiling " + std::to_string(options.ceiling));
            for (int k = 0; k < s.dim_; ++k) {
                long long x = us[k];
                for (int i = 0; i < n; ++i) x += c[i] * du * bs[static_cast<std::size_t>(i) * s.dim_ + k];
                if (x > INT32_MAX || x < INT32_MIN) throw resource_error("coordinate overflow");
                s.flat_.push_back(static_cast<std::int32_t>(x));
            }
        });
    } else {
        s.dim_ = n;
        s.denom_ = du;
        std::vector<long long> us(n, 0);
        if (coset_shift_coeff)
            for (int i = 0; i < n; ++i) {
                Rational scaled = (*coset_shift_coeff)[i] * static_cast<long>(du);
                us[i] = scaled.get_num().get_si();
            }
        enumerate_impl(L, m, coset_shift_coeff, [&](const std::vector<long long>& c) {
            if (s.flat_.size() / s.dim_ >= options.ceiling)
                throw resource_error("shell size exceeds ceiling " + std::to_string(options.ceiling));
            for (int i = 0; i < n; ++i)
                s.flat_.push_back(static_cast<std::int32_t>(du * c[i] + us[i]));
        });
    }

    // sort vectors lexicographically
    std::size_t count = s.flat_.size() / s.dim_;
    std::vector<std::size_t> order(count);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const std::int32_t* pa = s.flat_.data() + a * s.dim_;
        const std::int32_t* pb = s.flat_.data() + b * s.dim_;
        return std::lexicographical_compare(pa, pa + s.dim_, pb, pb + s.dim_);
    });
    std::vector<std::int32_t> sorted;
    sorted.reserve(s.flat_.size());
    for (std::size_t idx : order) {
        const std::int32_t* p = s.flat_.data() + idx * s.dim_;
        sorted.insert(sorted.end(), p, p + s.dim_);
    }
    s.flat_ = std::move(sorted);

    if (s.ambient_)
        s.sym_ = coset_symmetry(L, shift_ambient);
    else
        s.sym_ = {{0, s.dim_, false, FlipSymmetry::none}};
    return s;
}

Shell enumerate_coset_shell(const ShadowCoset& coset, const Rational& m, const ShellOptions& options) {
    if (coset.trivial) return enumerate_shell(*coset.lattice, m, std::nullopt, options);
    return enumerate_shell(*coset.lattice, m, coset.shift_coeff, options);
}

std::size_t count_coset_shell(const ShadowCoset& coset, const Rational& m, const ShellOptions& options) {
    if (coset.trivial) return count_shell(*coset.lattice, m, std::nullopt, options);
    return count_shell(*coset.lattice, m, coset.shift_coeff, options);
}

namespace {

// Orbit key of a vector under the shell's verified symmetry blocks.
std::vector<std::int32_t> orbit_key(const Shell& s, const std::vector<SymBlock>& sym, std::size_t i) {
    std::vector<std::int32_t> key;
    key.reserve(static_cast<std::size_t>(s.dim()) + sym.size());
    const std::int32_t* v = s.at(i);
    for (const SymBlock& block : sym) {
        std::vector<std::int32_t> part(v + block.offset, v + block.offset + block.size);
        if (block.flips == FlipSymmetry::all) {
            for (auto& x : part) x = std::abs(x);
            key.push_back(-1);
        } else if (block.flips == FlipSymmetry::even) {
            int negatives = 0;
            bool zero = false;
            for (auto& x : part) {
                if (x < 0) {
                    ++negatives;
                    x = -x;
                } else if (x == 0) {
                    zero = true;
                }
            }
            key.push_back(zero ? -1 : negatives % 2);
        } else {
            key.push_back(-2);
        }
        if (block.perm) std::sort(part.begin(), part.end());
        key.insert(key.end(), part.begin(), part.end());
    }
    return key;
}

}  // namespace

ClassedPairCounts classed_pair_counts(const Shell& X, const std::vector<int>& point_class) {
    std::size_t count = X.size();
    if (count == 0) throw domain_error("empty shell");
    std::vector<int> pc = point_class;
    if (pc.empty()) pc.assign(count, 0);
    if (pc.size() != count) throw domain_error("point class size mismatch");

    const std::vector<SymBlock>& sym = X.sym();

    // orbit classes keyed by (symmetry key, point class)
    std::map<std::pair<std::vector<std::int32_t>, int>, std::pair<std::size_t, unsigned long long>>
        classes;
    for (std::size_t i = 0; i < count; ++i) {
        auto key = std::make_pair(orbit_key(X, sym, i), pc[i]);
        auto it = classes.emplace(std::move(key), std::make_pair(i, 0ULL)).first;
        it->second.second++;
    }

    // Gram rows for coefficient-coordinate shells
    const bool ambient = X.ambient() || X.lattice() == nullptr;
    ClassedPairCounts result;
    std::map<std::tuple<int, int, long long>, unsigned long long> raw;
    int dim = X.dim();
    std::vector<long long> gx(dim);
    for (const auto& [key, rep_count] : classes) {
        auto [rep, cls_size] = rep_count;
        const std::int32_t* a = X.at(rep);
        if (!ambient) {
            const auto& G = X.lattice()->gram_i64();
            for (int k = 0; k < dim; ++k) {
                long long row = 0;
                for (int l = 0; l < dim; ++l) row += G[k][l] * a[l];
                gx[k] = row;
            }
        }
        for (std::size_t j = 0; j < count; ++j) {
            const std::int32_t* b = X.at(j);
            long long dot = 0;
            if (ambient) {
                for (int k = 0; k < dim; ++k) dot += static_cast<long long>(a[k]) * b[k];
            } else {
                for (int k = 0; k < dim; ++k) dot += gx[k] * b[k];
            }
            raw[{pc[rep], pc[j], dot}] += cls_size;
        }
    }
    long long den2 = static_cast<long long>(X.denom()) * X.denom();
    for (const auto& [key, n] : raw) {
        auto [cx, cy, dot] = key;
        Rational ip(static_cast<long>(dot), static_cast<long>(den2));
        ip.canonicalize();
        result.counts[{cx, cy, ip}] += n;
    }
    return result;
}

IPDistribution ip_distribution(const Shell& X) {
    ClassedPairCounts classed = classed_pair_counts(X, {});
    IPDistribution d;
    for (const auto& [key, n] : classed.counts) d.counts[std::get<2>(key)] += n;
    return d;
}

unsigned long long IPDistribution::total() const {
    unsigned long long t = 0;
    for (const auto& [ip, n] : counts) t += n;
    return t;
}

}  // namespace lattheta
