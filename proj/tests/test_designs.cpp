#include "lattheta/designs.hpp"

#include "doctest.h"
#include "lattheta/modforms.hpp"
#include "lattheta/strength.hpp"

using namespace lattheta;

namespace {

Rational poly_eval(const std::vector<Rational>& coeffs, const Rational& t) {
    Rational acc = 0;
    for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * t + coeffs[k];
    return acc;
}

}  // namespace

TEST_CASE("harmonic dimensions") {
    CHECK(dim_harmonics(8, 2) == 35);
    CHECK(dim_harmonics(2, 5) == 2);
    CHECK(dim_harmonics(3, 4) == 9);
    CHECK(dim_harmonics(24, 2) == 299);
}

TEST_CASE("Gegenbauer closed forms for small degree") {
    for (int n : {2, 3, 4, 7, 8, 16, 24}) {
        const GegenbauerPoly& g0 = gegenbauer(n, 0);
        CHECK(poly_eval(g0.coefficients(), Rational(1, 3)) == 1);

        // Q^(1)(t) = n t
        const GegenbauerPoly& g1 = gegenbauer(n, 1);
        CHECK(g1.eval(Rational(1, 2)) == Rational(n) / 2);

        // Q^(2)(t) = (n+2)/2 (n t^2 - 1)
        const GegenbauerPoly& g2 = gegenbauer(n, 2);
        for (Rational t : {Rational(0), Rational(1, 2), Rational(1), Rational(-2, 3)}) {
            Rational expected = Rational(n + 2, 2) * (n * t * t - 1);
            expected.canonicalize();
            CHECK(g2.eval(t) == expected);
        }

        // Q^(3)(t) = n(n+4)/6 ((n+2) t^3 - 3t)
        const GegenbauerPoly& g3 = gegenbauer(n, 3);
        for (Rational t : {Rational(1), Rational(1, 2), Rational(-1, 5)}) {
            Rational expected = Rational(n * (n + 4), 6) * ((n + 2) * t * t * t - 3 * t);
            expected.canonicalize();
            CHECK(g3.eval(t) == expected);
        }

        // Q^(4)(t) = n(n+6)/24 ((n+2)(n+4) t^4 - 6(n+2) t^2 + 3)
        const GegenbauerPoly& g4 = gegenbauer(n, 4);
        for (Rational t : {Rational(1), Rational(1, 2), Rational(0), Rational(3, 7)}) {
            Rational t2 = t * t;
            Rational expected =
                Rational(n * (n + 6), 24) * ((n + 2) * (n + 4) * t2 * t2 - 6 * (n + 2) * t2 + 3);
            expected.canonicalize();
            CHECK(g4.eval(t) == expected);
        }
    }
}

TEST_CASE("Gegenbauer normalisation Q(1) = dim Har") {
    for (int n : {2, 3, 5, 8, 12, 24})
        for (int j = 0; j <= 16; ++j)
            CHECK(gegenbauer(n, j).eval(1) == Rational(dim_harmonics(n, j)));
}

TEST_CASE("kernel sum examples") {
    // E8 roots at degree 8: strictly positive (tau(1) = 1 != 0)
    Shell e8_roots = enumerate_shell(Lattice::e8(), 2);
    WeightedSet e8w = uniform_weights(e8_roots);
    CHECK(kernel_sum(e8w, 8) > 0);

    // (Z4)_2 at degree 4: a 5-design shell
    Shell z4_2 = enumerate_shell(Lattice::cubic(4), 2);
    CHECK(kernel_sum(uniform_weights(z4_2), 4) == 0);

    // unit square in R^2 at degree 4: per-point sum 8
    Shell square = Shell::from_vectors({{Rational(1), Rational(0)},
                                        {Rational(-1), Rational(0)},
                                        {Rational(0), Rational(1)},
                                        {Rational(0), Rational(-1)}});
    CHECK(kernel_sum(uniform_weights(square), 4) == 8);
}

TEST_CASE("kernel positivity on random antipodal sets") {
    Rng rng(424242);
    for (int round = 0; round < 10; ++round) {
        // random antipodal integer vectors on a common sphere: pick a norm
        // by sampling vectors of a fixed shell of Z^3/Z^4
        int n = 3 + static_cast<int>(rng.below(2));
        long m = 1 + static_cast<long>(rng.below(20));
        Shell shell = enumerate_shell(Lattice::cubic(n), m);
        if (shell.size() == 0) continue;
        WeightedSet w = uniform_weights(shell);
        for (int degree = 2; degree <= 10; degree += 2) CHECK(kernel_sum(w, degree) >= 0);
    }
}

TEST_CASE("odd-degree kernel sums vanish on antipodal sets") {
    Shell z7_3 = enumerate_shell(Lattice::cubic(7), 3);
    WeightedSet w = uniform_weights(z7_3);
    for (int degree = 1; degree <= 7; degree += 2) CHECK(kernel_sum(w, degree) == 0);
}

TEST_CASE("strength verdicts for known shells") {
    // (W8)_2: 7 1/2 with failing degree 8
    Shell w8_2 = enumerate_shell(Lattice::witt(8), 2);
    StrengthVerdict v = strength(uniform_weights(w8_2), 12);
    CHECK(v.strength_times_two == 15);
    CHECK(v.exactness == StrengthVerdict::Exactness::exact);
    REQUIRE(!v.failing_degrees.empty());
    CHECK(v.failing_degrees[0].degree == 8);

    // (Z7)_3: a 5-design, not more
    Shell z7_3 = enumerate_shell(Lattice::cubic(7), 3);
    StrengthVerdict v7 = strength(uniform_weights(z7_3), 10);
    CHECK(v7.strength_times_two == 10);
    CHECK(v7.display() == "5");

    // (Z4)_1: strength 3, fails at 4
    Shell z4_1 = enumerate_shell(Lattice::cubic(4), 1);
    StrengthVerdict v4 = strength(uniform_weights(z4_1), 8);
    CHECK(v4.strength_times_two == 6);
    CHECK(v4.failing_degrees[0].degree == 4);
}

TEST_CASE("non-antipodal sets are rejected") {
    Shell s = Shell::from_vectors({{Rational(1), Rational(0)}, {Rational(0), Rational(1)}});
    CHECK_THROWS_AS(strength(uniform_weights(s), 4), domain_error);
}

TEST_CASE("uniform weights equal the unweighted verdict") {
    Shell z4_2 = enumerate_shell(Lattice::cubic(4), 2);
    WeightedSet uniform = uniform_weights(z4_2);
    // explicit per-class uniform weights through the parity classes
    WeightedSet classed;
    classed.points = &z4_2;
    classed.point_class.resize(z4_2.size());
    for (std::size_t i = 0; i < z4_2.size(); ++i) {
        int w = 0;
        for (int k = 0; k < z4_2.dim(); ++k) w += std::abs(z4_2.at(i)[k]) % 2;
        classed.point_class[i] = w;
    }
    classed.class_weight.assign(5, Rational(1, static_cast<long>(z4_2.size())));
    for (auto& x : classed.class_weight) x.canonicalize();
    for (int d = 2; d <= 8; d += 2) CHECK(kernel_sum(uniform, d) == kernel_sum(classed, d));
}

TEST_CASE("Hamming orbit weights") {
    BinaryCode hamming = BinaryCode::hamming7();
    Shell shell = enumerate_shell(Lattice::cubic(7), 3);  // W(y) = 3 for all y
    WeightedSet w = code_orbit_weights(hamming, shell);
    // lambda: W=0 -> 1, W=3 -> 1/5, W=4 -> 1/5, W=7 -> 1, else 0
    // over this shell only W=3 appears, so weights are uniform
    for (std::size_t i = 0; i < shell.size(); ++i)
        CHECK(w.weight_of(i) == Rational(1, static_cast<long>(shell.size())));
}

TEST_CASE("closed-form lambda equals explicit orbit counting") {
    BinaryCode hamming = BinaryCode::hamming7();
    Lattice lam = Lattice::construction_a(hamming);
    auto enumerator = hamming.weight_enumerator();
    for (long m : {3, 4, 7}) {
        Shell shell = enumerate_shell(Lattice::cubic(7), m);
        // pick a handful of sample points per parity weight
        std::map<int, std::vector<std::size_t>> samples;
        for (std::size_t i = 0; i < shell.size(); ++i) {
            int w = 0;
            for (int k = 0; k < 7; ++k) w += std::abs(shell.at(i)[k]) % 2;
            if (samples[w].size() < 2) samples[w].push_back(i);
        }
        // permutations of 7 elements
        std::vector<int> perm{0, 1, 2, 3, 4, 5, 6};
        for (const auto& [w, idxs] : samples) {
            Rational lambda_closed(static_cast<long>(enumerator.count(w) ? enumerator.at(w) : 0));
            if (lambda_closed != 0) {
                lambda_closed /= Rational(binomial(7, w));
                lambda_closed.canonicalize();
            }
            for (std::size_t idx : idxs) {
                // count permutations sending the parity pattern into the code
                // (sign flips never change membership mod 2)
                long long hits = 0;
                long long total = 0;
                std::sort(perm.begin(), perm.end());
                do {
                    ++total;
                    std::uint64_t word = 0;
                    for (int k = 0; k < 7; ++k)
                        if (std::abs(shell.at(idx)[perm[k]]) % 2) word |= 1ULL << k;
                    auto words = hamming.codewords();
                    if (std::find(words.begin(), words.end(), word) != words.end()) ++hits;
                } while (std::next_permutation(perm.begin(), perm.end()));
                Rational lambda_counted(static_cast<long>(hits), static_cast<long>(total));
                lambda_counted.canonicalize();
                CHECK(lambda_counted == lambda_closed);
            }
        }
    }
}

TEST_CASE("weighted 5-designs from the Hamming code") {
    BinaryCode hamming = BinaryCode::hamming7();
    for (long m : {7, 8}) {
        Shell shell = enumerate_shell(Lattice::cubic(7), m);
        WeightedSet w = code_orbit_weights(hamming, shell);
        for (int degree = 1; degree <= 5; ++degree) CHECK(kernel_sum(w, degree) == 0);
    }
}

TEST_CASE("moment cross-check at degrees 4 and 6") {
    // P = x1^4 + x2^4 - 6 x1^2 x2^2 spans the C_4 obstruction for Z^n shells
    auto p4 = [](const std::vector<Rational>& x) -> Rational {
        Rational a = x[0] * x[0], b = x[1] * x[1];
        return a * a + b * b - 6 * a * b;
    };
    auto q6 = [](const std::vector<Rational>& x) -> Rational {
        Rational a = x[0] * x[0], b = x[1] * x[1], c = x[2] * x[2];
        return a * a * a + b * b * b + c * c * c - 15 * (a * a * b + b * b * c + c * c * a) +
               90 * a * b * c;
    };
    for (int n : {2, 3, 4, 7, 8}) {
        Lattice l = Lattice::cubic(n);
        for (long m = 1; m <= 20; ++m) {
            Shell shell = enumerate_shell(l, m);
            if (shell.size() == 0) continue;
            WeightedSet w = uniform_weights(shell);
            CHECK((kernel_sum(w, 4) == 0) == (sum_over_shell(shell, p4) == 0));
            if (n >= 3) CHECK((kernel_sum(w, 6) == 0) == (sum_over_shell(shell, q6) == 0));
        }
    }
}

TEST_CASE("convex combinations of weightings stay designs") {
    // (Z7)_12 = 2 (Z7)_3 ∪ Q: the code weighting and the rescaled-shell
    // weighting are both 5-designs, hence so is every convex combination,
    // including the uniform one.
    BinaryCode hamming = BinaryCode::hamming7();
    Shell shell = enumerate_shell(Lattice::cubic(7), 12);
    WeightedSet code_w = code_orbit_weights(hamming, shell);

    WeightedSet rescaled;
    rescaled.points = &shell;
    rescaled.point_class = code_w.point_class;  // classes by parity weight: 0 or 4
    long count_w0 = 0;
    for (std::size_t i = 0; i < shell.size(); ++i)
        if (code_w.point_class[i] == 0) ++count_w0;
    rescaled.class_weight.assign(8, 0);
    rescaled.class_weight[0] = Rational(1, count_w0);
    rescaled.class_weight[0].canonicalize();

    for (int degree = 1; degree <= 5; ++degree) {
        CHECK(kernel_sum(code_w, degree) == 0);
        CHECK(kernel_sum(rescaled, degree) == 0);
    }
    for (auto [num, den] : {std::pair<long, long>{1, 4}, {1, 2}, {3, 4}}) {
        Rational alpha(num, den);
        WeightedSet mix = code_w;
        for (std::size_t c = 0; c < mix.class_weight.size(); ++c)
            mix.class_weight[c] =
                alpha * code_w.class_weight[c] + (1 - alpha) * rescaled.class_weight[c];
        for (int degree = 1; degree <= 5; ++degree) CHECK(kernel_sum(mix, degree) == 0);
    }
    // the uniform weighting is one such convex combination: verdict 5-design
    StrengthVerdict v = strength(uniform_weights(shell), 6);
    CHECK(v.strength_times_two >= 10);
}
