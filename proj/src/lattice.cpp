#include "lattheta/lattice.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <functional>
#include <sstream>

#include "lattheta/shells.hpp"

namespace lattheta {

namespace linalg {

Integer det(std::vector<std::vector<Rational>> m) {
    std::size_t n = m.size();
    Rational d = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            d = -d;
        }
        d *= m[col][col];
        for (std::size_t row = col + 1; row < n; ++row) {
            if (m[row][col] == 0) continue;
            Rational f = m[row][col] / m[col][col];
            for (std::size_t k = col; k < n; ++k) m[row][k] -= f * m[col][k];
        }
    }
    if (d.get_den() != 1) throw domain_error("determinant of integer matrix not integral");
    return d.get_num();
}

bool is_positive_definite(const std::vector<std::vector<Integer>>& m) {
    // symmetric elimination without pivoting: positive definite iff every
    // pivot stays positive
    std::size_t n = m.size();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(m[i][j]);
    for (std::size_t k = 0; k < n; ++k) {
        if (a[k][k] <= 0) return false;
        for (std::size_t r = k + 1; r < n; ++r) {
            if (a[r][k] == 0) continue;
            Rational f = a[r][k] / a[k][k];
            for (std::size_t c = k; c < n; ++c) a[r][c] -= f * a[k][c];
        }
    }
    return true;
}

std::vector<Rational> solve(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
    std::size_t n = a.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) throw domain_error("singular system");
        std::swap(a[pivot], a[col]);
        std::swap(b[pivot], b[col]);
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || a[row][col] == 0) continue;
            Rational f = a[row][col] / a[col][col];
            for (std::size_t k = col; k < n; ++k) a[row][k] -= f * a[col][k];
            b[row] -= f * b[col];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

int rank(std::vector<std::vector<Rational>> m) {
    if (m.empty()) return 0;
    std::size_t rows = m.size(), cols = m[0].size();
    int r = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[row]);
        for (std::size_t i = row + 1; i < rows; ++i) {
            if (m[i][col] == 0) continue;
            Rational f = m[i][col] / m[row][col];
            for (std::size_t k = col; k < cols; ++k) m[i][k] -= f * m[row][k];
        }
        ++row;
        ++r;
    }
    return r;
}

std::vector<int> solve_f2(std::vector<std::vector<int>> a, std::vector<int> b) {
    std::size_t n = a.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] % 2 == 0) ++pivot;
        if (pivot == n) throw domain_error("F2 system singular (Gram not odd-unimodular?)");
        std::swap(a[pivot], a[col]);
        std::swap(b[pivot], b[col]);
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || a[row][col] % 2 == 0) continue;
            for (std::size_t k = 0; k < n; ++k) a[row][k] = (a[row][k] + a[col][k]) % 2;
            b[row] = (b[row] + b[col]) % 2;
        }
    }
    std::vector<int> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = ((b[i] % 2) + 2) % 2;
    return x;
}

}  // namespace linalg

int BinaryCode::dimension() const {
    // rank over F2
    std::vector<std::uint64_t> rows = generators;
    int r = 0;
    for (int col = 0; col < length; ++col) {
        std::uint64_t mask = 1ULL << col;
        std::size_t pivot = r;
        while (pivot < rows.size() && !(rows[pivot] & mask)) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[pivot], rows[r]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != static_cast<std::size_t>(r) && (rows[i] & mask)) rows[i] ^= rows[r];
        ++r;
    }
    return r;
}

std::vector<std::uint64_t> BinaryCode::codewords() const {
    std::vector<std::uint64_t> words{0};
    for (std::uint64_t g : generators) {
        std::vector<std::uint64_t> next;
        next.reserve(words.size() * 2);
        for (std::uint64_t w : words) {
            next.push_back(w);
            next.push_back(w ^ g);
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        words = std::move(next);
    }
    return words;
}

std::map<int, long long> BinaryCode::weight_enumerator() const {
    std::map<int, long long> w;
    for (std::uint64_t c : codewords()) w[std::popcount(c)]++;
    return w;
}

BinaryCode BinaryCode::even_weight(int n) {
    BinaryCode c;
    c.length = n;
    c.coordinate_symmetric = true;
    for (int i = 0; i + 1 < n; ++i) c.generators.push_back((1ULL << i) | (1ULL << (n - 1)));
    return c;
}

BinaryCode BinaryCode::hamming7() {
    BinaryCode c;
    c.length = 7;
    c.coordinate_symmetric = false;
    auto bits = [](std::initializer_list<int> idx) {
        std::uint64_t v = 0;
        for (int i : idx) v |= 1ULL << i;
        return v;
    };
    c.generators = {bits({0, 4, 5}), bits({1, 4, 6}), bits({2, 5, 6}), bits({3, 4, 5, 6})};
    return c;
}

BinaryCode BinaryCode::repetition(int n) {
    BinaryCode c;
    c.length = n;
    c.coordinate_symmetric = true;
    c.generators = {(n == 64 ? ~0ULL : (1ULL << n) - 1)};
    return c;
}

namespace {

std::vector<std::vector<Rational>> identity_basis(int n) {
    std::vector<std::vector<Rational>> b(n, std::vector<Rational>(n, 0));
    for (int i = 0; i < n; ++i) b[i][i] = 1;
    return b;
}

}  // namespace

void Lattice::validate_and_finish() {
    if (rank_ <= 0) throw domain_error("lattice rank must be positive");
    if (gram_.size() != static_cast<std::size_t>(rank_))
        throw domain_error("Gram size mismatch");
    for (const auto& row : gram_)
        if (row.size() != static_cast<std::size_t>(rank_)) throw domain_error("Gram not square");
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j)
            if (gram_[i][j] != gram_[j][i]) throw domain_error("Gram not symmetric");

    if (!basis_.empty()) {
        std::size_t cols = basis_[0].size();
        for (const auto& row : basis_)
            if (row.size() != cols) throw domain_error("ragged basis");
        for (int i = 0; i < rank_; ++i) {
            for (int j = i; j < rank_; ++j) {
                Rational dot = 0;
                for (std::size_t k = 0; k < cols; ++k) dot += basis_[i][k] * basis_[j][k];
                if (dot != Rational(gram_[i][j])) throw domain_error("Gram != basis * basis^T");
            }
        }
    }

    if (!linalg::is_positive_definite(gram_))
        throw domain_error("Gram matrix not positive definite");

    std::vector<std::vector<Rational>> g(rank_, std::vector<Rational>(rank_));
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j) g[i][j] = Rational(gram_[i][j]);
    det_ = linalg::det(std::move(g));

    even_ = true;
    for (int i = 0; i < rank_; ++i)
        if (gram_[i][i] % 2 != 0) even_ = false;

    gram64_.assign(rank_, std::vector<long long>(rank_));
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j) {
            if (!gram_[i][j].fits_slong_p()) throw resource_error("Gram entry exceeds 64 bits");
            gram64_[i][j] = gram_[i][j].get_si();
        }

    if (sym_.empty()) sym_.push_back({0, ambient_dim(), false, FlipSymmetry::none});
}

Lattice Lattice::cubic(int n) {
    Lattice l;
    l.rank_ = n;
    l.name_ = "Z" + std::to_string(n);
    l.basis_ = identity_basis(n);
    l.gram_.assign(n, std::vector<Integer>(n, 0));
    for (int i = 0; i < n; ++i) l.gram_[i][i] = 1;
    l.sym_ = {{0, n, true, FlipSymmetry::all}};
    l.validate_and_finish();
    return l;
}

Lattice Lattice::witt(int n) {
    if (n <= 0 || n % 4 != 0) throw domain_error("Witt lattice needs a positive multiple of 4");
    Lattice l;
    l.rank_ = n;
    l.name_ = "W" + std::to_string(n);
    // D_n simple roots with e1-e2 traded for the glue vector (1/2,...,1/2)
    l.basis_.assign(n, std::vector<Rational>(n, 0));
    for (int k = 0; k < n; ++k) l.basis_[0][k] = Rational(1, 2);
    for (int i = 1; i + 1 < n; ++i) {
        l.basis_[i][i] = 1;
        l.basis_[i][i + 1] = -1;
    }
    l.basis_[n - 1][n - 2] = 1;
    l.basis_[n - 1][n - 1] = 1;
    l.gram_.assign(n, std::vector<Integer>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rational dot = 0;
            for (int k = 0; k < n; ++k) dot += l.basis_[i][k] * l.basis_[j][k];
            l.gram_[i][j] = dot.get_num();
        }
    l.sym_ = {{0, n, true, FlipSymmetry::even}};
    l.validate_and_finish();
    return l;
}

Lattice Lattice::root_d(int n) {
    if (n < 3) throw domain_error("D_n needs n >= 3");
    Lattice l;
    l.rank_ = n;
    l.name_ = "D" + std::to_string(n);
    l.basis_.assign(n, std::vector<Rational>(n, 0));
    for (int i = 0; i + 1 < n; ++i) {
        l.basis_[i][i] = 1;
        l.basis_[i][i + 1] = -1;
    }
    l.basis_[n - 1][n - 2] = 1;
    l.basis_[n - 1][n - 1] = 1;
    l.gram_.assign(n, std::vector<Integer>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rational dot = 0;
            for (int k = 0; k < n; ++k) dot += l.basis_[i][k] * l.basis_[j][k];
            l.gram_[i][j] = dot.get_num();
        }
    l.sym_ = {{0, n, true, FlipSymmetry::all}};
    l.validate_and_finish();
    return l;
}

Lattice Lattice::root_a(int n) {
    if (n < 1) throw domain_error("A_n needs n >= 1");
    Lattice l;
    l.rank_ = n;
    l.name_ = "A" + std::to_string(n);
    l.basis_.assign(n, std::vector<Rational>(n + 1, 0));
    for (int i = 0; i < n; ++i) {
        l.basis_[i][i] = 1;
        l.basis_[i][i + 1] = -1;
    }
    l.gram_.assign(n, std::vector<Integer>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            l.gram_[i][j] = i == j ? 2 : (std::abs(i - j) == 1 ? -1 : 0);
    l.sym_ = {{0, n + 1, true, FlipSymmetry::none}};
    l.validate_and_finish();
    return l;
}

Lattice Lattice::e8() {
    Lattice l = witt(8);
    l.name_ = "E8";
    return l;
}

Lattice Lattice::e7() {
    // E7 as the orthogonal complement of an E8 root pair sum: basis rows in R^8.
    Lattice l;
    l.rank_ = 7;
    l.name_ = "E7";
    Rational h(1, 2);
    // simple roots of E7 inside R^8 (Bourbaki numbering)
    l.basis_.push_back({h, -h, -h, -h, -h, -h, -h, h});
    l.basis_.push_back({1, 1, 0, 0, 0, 0, 0, 0});
    l.basis_.push_back({-1, 1, 0, 0, 0, 0, 0, 0});
    l.basis_.push_back({0, -1, 1, 0, 0, 0, 0, 0});
    l.basis_.push_back({0, 0, -1, 1, 0, 0, 0, 0});
    l.basis_.push_back({0, 0, 0, -1, 1, 0, 0, 0});
    l.basis_.push_back({0, 0, 0, 0, -1, 1, 0, 0});
    l.gram_.assign(7, std::vector<Integer>(7, 0));
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j) {
            Rational dot = 0;
            for (int k = 0; k < 8; ++k) dot += l.basis_[i][k] * l.basis_[j][k];
            if (dot.get_den() != 1) throw domain_error("E7 basis produced non-integral Gram");
            l.gram_[i][j] = dot.get_num();
        }
    l.validate_and_finish();
    return l;
}

Lattice Lattice::e6() {
    Lattice l;
    l.rank_ = 6;
    l.name_ = "E6";
    Rational h(1, 2);
    l.basis_.push_back({h, -h, -h, -h, -h, -h, -h, h});
    l.basis_.push_back({1, 1, 0, 0, 0, 0, 0, 0});
    l.basis_.push_back({-1, 1, 0, 0, 0, 0, 0, 0});
    l.basis_.push_back({0, -1, 1, 0, 0, 0, 0, 0});
    l.basis_.push_back({0, 0, -1, 1, 0, 0, 0, 0});
    l.basis_.push_back({0, 0, 0, -1, 1, 0, 0, 0});
    l.gram_.assign(6, std::vector<Integer>(6, 0));
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            Rational dot = 0;
            for (int k = 0; k < 8; ++k) dot += l.basis_[i][k] * l.basis_[j][k];
            if (dot.get_den() != 1) throw domain_error("E6 basis produced non-integral Gram");
            l.gram_[i][j] = dot.get_num();
        }
    l.validate_and_finish();
    return l;
}

Lattice Lattice::construction_a(const BinaryCode& code) {
    int n = code.length;
    if (n <= 0 || n > 48) throw domain_error("Construction A: unsupported code length");
    // Echelonize the generators; pivots lift to code rows, other coordinates to 2e_j.
    std::vector<std::uint64_t> rows = code.generators;
    std::vector<int> pivots;
    int r = 0;
    for (int col = 0; col < n; ++col) {
        std::uint64_t mask = 1ULL << col;
        int pivot = -1;
        for (std::size_t i = r; i < rows.size(); ++i)
            if (rows[i] & mask) {
                pivot = static_cast<int>(i);
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[pivot], rows[r]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != static_cast<std::size_t>(r) && (rows[i] & mask)) rows[i] ^= rows[r];
        pivots.push_back(col);
        ++r;
    }
    Lattice l;
    l.rank_ = n;
    l.name_ = "CA[" + std::to_string(n) + "," + std::to_string(r) + "]";
    l.basis_.assign(n, std::vector<Rational>(n, 0));
    int row_idx = 0;
    for (int i = 0; i < r; ++i, ++row_idx)
        for (int k = 0; k < n; ++k) l.basis_[row_idx][k] = (rows[i] >> k) & 1;
    std::vector<bool> is_pivot(n, false);
    for (int p : pivots) is_pivot[p] = true;
    for (int k = 0; k < n; ++k)
        if (!is_pivot[k]) l.basis_[row_idx++][k] = 2;
    l.gram_.assign(n, std::vector<Integer>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rational dot = 0;
            for (int k = 0; k < n; ++k) dot += l.basis_[i][k] * l.basis_[j][k];
            l.gram_[i][j] = dot.get_num();
        }
    l.sym_ = {{0, n, code.coordinate_symmetric, FlipSymmetry::all}};
    l.validate_and_finish();
    return l;
}

Lattice Lattice::direct_sum(const Lattice& a, const Lattice& b) {
    Lattice l;
    l.rank_ = a.rank_ + b.rank_;
    l.name_ = a.name_ + "+" + b.name_;
    if (a.has_ambient() && b.has_ambient()) {
        int da = a.ambient_dim(), db = b.ambient_dim();
        l.basis_.assign(l.rank_, std::vector<Rational>(da + db, 0));
        for (int i = 0; i < a.rank_; ++i)
            for (int k = 0; k < da; ++k) l.basis_[i][k] = a.basis_[i][k];
        for (int i = 0; i < b.rank_; ++i)
            for (int k = 0; k < db; ++k) l.basis_[a.rank_ + i][da + k] = b.basis_[i][k];
        for (const SymBlock& s : a.sym_) l.sym_.push_back(s);
        for (SymBlock s : b.sym_) {
            s.offset += da;
            l.sym_.push_back(s);
        }
    }
    l.gram_.assign(l.rank_, std::vector<Integer>(l.rank_, 0));
    for (int i = 0; i < a.rank_; ++i)
        for (int j = 0; j < a.rank_; ++j) l.gram_[i][j] = a.gram_[i][j];
    for (int i = 0; i < b.rank_; ++i)
        for (int j = 0; j < b.rank_; ++j) l.gram_[a.rank_ + i][a.rank_ + j] = b.gram_[i][j];
    l.validate_and_finish();
    return l;
}

Lattice Lattice::from_gram(const std::vector<std::vector<Integer>>& gram, const std::string& name) {
    Lattice l;
    l.rank_ = static_cast<int>(gram.size());
    l.name_ = name;
    l.gram_ = gram;
    l.validate_and_finish();
    return l;
}

Lattice Lattice::parse_spec(const std::string& spec) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : spec) {
        if (c == '+') {
            parts.push_back(cur);
            cur.clear();
        } else if (!isspace(static_cast<unsigned char>(c))) {
            cur.push_back(c);
        }
    }
    parts.push_back(cur);
    std::optional<Lattice> acc;
    for (const std::string& p : parts) {
        auto colon = p.find(':');
        if (colon == std::string::npos) throw parse_error("lattice spec needs ':' in " + p);
        std::string kind = p.substr(0, colon);
        std::string arg = p.substr(colon + 1);
        Lattice next = [&]() -> Lattice {
            if (kind == "Z") return cubic(std::stoi(arg));
            if (kind == "W") return witt(std::stoi(arg));
            if (kind == "D") return root_d(std::stoi(arg));
            if (kind == "A") return root_a(std::stoi(arg));
            if (kind == "E") {
                int n = std::stoi(arg);
                if (n == 6) return e6();
                if (n == 7) return e7();
                if (n == 8) return e8();
                throw parse_error("E lattice must be E:6, E:7 or E:8");
            }
            if (kind == "CA") {
                if (arg == "even4") return construction_a(BinaryCode::even_weight(4));
                if (arg == "hamming7") return construction_a(BinaryCode::hamming7());
                if (arg.rfind("even", 0) == 0)
                    return construction_a(BinaryCode::even_weight(std::stoi(arg.substr(4))));
                throw parse_error("unknown code: " + arg);
            }
            if (kind == "gram") {
                std::ifstream in(arg);
                if (!in) throw parse_error("cannot open Gram file: " + arg);
                std::stringstream buf;
                buf << in.rdbuf();
                return from_gram(read_gram_text(buf.str()), arg);
            }
            throw parse_error("unknown lattice kind: " + kind);
        }();
        if (acc)
            acc = direct_sum(*acc, next);
        else
            acc = std::move(next);
    }
    return *acc;
}

long Lattice::shell_one_count() const {
    if (!p_) {
        ShellOptions opt;
        p_ = static_cast<long>(count_shell(*this, 1, std::nullopt, opt));
    }
    return *p_;
}

Rational Lattice::min_norm() const {
    if (min_norm_) return *min_norm_;
    ShellOptions opt;
    long long max_diag = 0;
    for (int i = 0; i < rank_; ++i) max_diag = std::max(max_diag, gram64_[i][i]);
    for (long m = 1; m <= max_diag; ++m) {
        if (count_shell(*this, m, std::nullopt, opt) > 0) {
            min_norm_ = Rational(m);
            return *min_norm_;
        }
    }
    throw domain_error("no lattice vector of norm <= max diagonal (unexpected)");
}

ShadowCoset Lattice::shadow_coset() const {
    if (!is_selfdual()) throw domain_error("shadow is defined for selfdual lattices only");
    ShadowCoset coset;
    coset.lattice = this;
    if (is_even()) {
        coset.trivial = true;
        coset.shift_coeff.assign(rank_, 0);
        if (has_ambient()) coset.shift.assign(ambient_dim(), 0);
        coset.min_norm = min_norm();
        return coset;
    }
    coset.trivial = false;
    // characteristic vector: <w, b_i> = <b_i, b_i> mod 2, solved over F2
    std::vector<std::vector<int>> a(rank_, std::vector<int>(rank_));
    std::vector<int> b(rank_);
    for (int i = 0; i < rank_; ++i) {
        b[i] = static_cast<int>(((gram64_[i][i] % 2) + 2) % 2);
        for (int j = 0; j < rank_; ++j) a[i][j] = static_cast<int>(((gram64_[i][j] % 2) + 2) % 2);
    }
    std::vector<int> w = linalg::solve_f2(a, b);
    coset.shift_coeff.assign(rank_, 0);
    for (int i = 0; i < rank_; ++i) {
        coset.shift_coeff[i] = Rational(w[i], 2);
        coset.shift_coeff[i].canonicalize();
    }
    if (has_ambient()) {
        coset.shift.assign(ambient_dim(), 0);
        for (int i = 0; i < rank_; ++i)
            for (int k = 0; k < ambient_dim(); ++k) coset.shift[k] += coset.shift_coeff[i] * basis_[i][k];
    }
    // minimal shadow norm: norms lie on n/4 + 2Z, are positive and at most n/4
    ShellOptions opt;
    Rational grid_min(rank_ % 8, 4);
    grid_min.canonicalize();
    if (grid_min == 0) grid_min = 2;
    for (Rational m = grid_min;; m += 2) {
        if (m > rank_) throw domain_error("no shadow vector of norm <= n (unexpected)");
        if (count_shell(*this, m, coset.shift_coeff, opt) > 0) {
            coset.min_norm = m;
            break;
        }
    }
    return coset;
}

long Lattice::sigma() const {
    if (sigma_) return *sigma_;
    if (!is_selfdual()) throw domain_error("sigma is defined for selfdual lattices only");
    if (is_even()) {
        sigma_ = 0;
        return 0;
    }
    Rational s = shadow_coset().min_norm * 4;
    sigma_ = static_cast<long>(s.get_num().get_si());
    return *sigma_;
}

bool Lattice::contains(const std::vector<Rational>& x) const {
    std::vector<Rational> c = to_coords(x);
    for (const Rational& v : c)
        if (v.get_den() != 1) return false;
    // verify x is in the span (to_coords only solves against the Gram)
    if (has_ambient()) {
        std::vector<Rational> recon(ambient_dim(), 0);
        for (int i = 0; i < rank_; ++i)
            for (int k = 0; k < ambient_dim(); ++k) recon[k] += c[i] * basis_[i][k];
        for (int k = 0; k < ambient_dim(); ++k)
            if (recon[k] != x[k]) return false;
    }
    return true;
}

std::vector<Rational> Lattice::to_coords(const std::vector<Rational>& x) const {
    if (!has_ambient()) throw domain_error("lattice has no ambient embedding");
    if (x.size() != static_cast<std::size_t>(ambient_dim()))
        throw domain_error("vector dimension mismatch");
    // solve G c = B x
    std::vector<Rational> rhs(rank_, 0);
    for (int i = 0; i < rank_; ++i)
        for (int k = 0; k < ambient_dim(); ++k) rhs[i] += basis_[i][k] * x[k];
    std::vector<std::vector<Rational>> g(rank_, std::vector<Rational>(rank_));
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j) g[i][j] = Rational(gram_[i][j]);
    return linalg::solve(std::move(g), std::move(rhs));
}

namespace {

struct ComponentInfo {
    int rank;
    long long roots;
};

std::string identify_component(const ComponentInfo& c) {
    long long r = c.rank;
    if (c.roots == r * (r + 1)) return "A" + std::to_string(r);
    if (r >= 4 && c.roots == 2 * r * (r - 1)) return "D" + std::to_string(r);
    if (r == 6 && c.roots == 72) return "E6";
    if (r == 7 && c.roots == 126) return "E7";
    if (r == 8 && c.roots == 240) return "E8";
    throw std::logic_error("norm-2 root system not in the A/D/E catalog (rank " +
                           std::to_string(r) + ", " + std::to_string(c.roots) + " roots)");
}

std::string assemble_system_name(std::map<std::string, int>& mult, int empty_rank) {
    std::vector<std::string> parts;
    for (const auto& [name, k] : mult)
        parts.push_back(k > 1 ? std::to_string(k) + name : name);
    if (empty_rank > 0 && parts.empty()) return "O" + std::to_string(empty_rank);
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += "+";
        out += parts[i];
    }
    return out.empty() ? "empty" : out;
}

}  // namespace

LatticeInvariants Lattice::invariants() const {
    LatticeInvariants inv;
    inv.selfdual = is_selfdual();
    inv.even = is_even();
    inv.min_norm = min_norm();
    ShellOptions opt;
    inv.p = is_even() ? 0 : static_cast<long>(count_shell(*this, 1, std::nullopt, opt)) / 2;
    if (inv.selfdual) inv.sigma = sigma();

    Shell two = enumerate_shell(*this, 2, std::nullopt, opt);
    // roots up to sign
    std::size_t count = two.size();
    std::vector<std::size_t> reps;
    std::vector<std::vector<long long>> rep_coeffs;
    for (std::size_t i = 0; i < count; ++i) {
        std::vector<long long> c = two.coeff_vector(i);
        bool neg_first = false;
        for (long long v : c) {
            if (v != 0) {
                neg_first = v < 0;
                break;
            }
        }
        if (!neg_first) {
            reps.push_back(i);
            rep_coeffs.push_back(std::move(c));
        }
    }
    std::size_t nroots = reps.size();
    std::vector<std::size_t> parent(nroots);
    for (std::size_t i = 0; i < nroots; ++i) parent[i] = i;
    std::function<std::size_t(std::size_t)> find = [&](std::size_t i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };
    auto ip = [&](const std::vector<long long>& a, const std::vector<long long>& b) {
        long long s = 0;
        for (int ii = 0; ii < rank_; ++ii) {
            long long row = 0;
            for (int jj = 0; jj < rank_; ++jj) row += gram64_[ii][jj] * b[jj];
            s += a[ii] * row;
        }
        return s;
    };
    // norm-1 directions of the lattice (the Z^p part)
    Shell ones = enumerate_shell(*this, 1, std::nullopt, opt);
    std::vector<std::vector<long long>> unit_coeffs;
    for (std::size_t i = 0; i < ones.size(); ++i) unit_coeffs.push_back(ones.coeff_vector(i));

    for (std::size_t i = 0; i < nroots; ++i)
        for (std::size_t j = i + 1; j < nroots; ++j)
            if (ip(rep_coeffs[i], rep_coeffs[j]) != 0) parent[find(i)] = find(j);

    std::map<std::size_t, std::vector<std::size_t>> comps;
    for (std::size_t i = 0; i < nroots; ++i) comps[find(i)].push_back(i);

    std::map<std::string, int> mult_full, mult_l;
    int span_full = 0, span_l = 0;
    for (const auto& [root, members] : comps) {
        std::vector<std::vector<Rational>> span_m;
        bool orthogonal_to_units = true;
        for (std::size_t idx : members) {
            std::vector<Rational> row(rank_);
            for (int k = 0; k < rank_; ++k) row[k] = Rational(static_cast<long>(rep_coeffs[idx][k]));
            span_m.push_back(std::move(row));
            for (const auto& u : unit_coeffs)
                if (ip(rep_coeffs[idx], u) != 0) orthogonal_to_units = false;
        }
        ComponentInfo info{linalg::rank(std::move(span_m)), static_cast<long long>(members.size()) * 2};
        std::string name = identify_component(info);
        mult_full[name]++;
        span_full += info.rank;
        if (orthogonal_to_units) {
            mult_l[name]++;
            span_l += info.rank;
        }
    }
    inv.full_root_system = assemble_system_name(mult_full, rank_);
    int n_l = rank_ - static_cast<int>(inv.p);  // rank of the minimum-2 part
    inv.root_system = assemble_system_name(mult_l, n_l);
    return inv;
}

std::vector<std::vector<Integer>> read_gram_text(const std::string& text) {
    std::istringstream in(text);
    long n;
    if (!(in >> n) || n <= 0) throw parse_error("Gram text must start with the rank");
    std::vector<std::vector<Integer>> g(n, std::vector<Integer>(n));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            std::string tok;
            if (!(in >> tok)) throw parse_error("Gram text: expected " + std::to_string(n * n) + " entries");
            g[i][j] = Integer(tok);
        }
    return g;
}

}  // namespace lattheta
