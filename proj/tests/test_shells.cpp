#include "lattheta/shells.hpp"

#include <algorithm>
#include <set>

#include "doctest.h"
#include "lattheta/modforms.hpp"
#include "lattheta/strength.hpp"
#include "oracles.hpp"

using namespace lattheta;

TEST_CASE("cubic shells against the coordinate-box oracle") {
    Lattice z4 = Lattice::cubic(4);
    Shell s = enumerate_shell(z4, 2);
    CHECK(s.size() == 24);
    CHECK(s.size() == static_cast<std::size_t>(oracles::sum_of_squares_count(4, 2)));

    Lattice z7 = Lattice::cubic(7);
    CHECK(count_shell(z7, 3) == 280);  // C(7,3) * 2^3
    CHECK(count_shell(z7, 3) == static_cast<std::size_t>(oracles::sum_of_squares_count(7, 3)));
}

TEST_CASE("Witt(12) has no norm-1 vectors") {
    CHECK(count_shell(Lattice::witt(12), 1) == 0);
}

TEST_CASE("every enumerated vector has the exact norm and the set is antipodal") {
    Lattice w12 = Lattice::witt(12);
    Shell s = enumerate_shell(w12, 3);
    CHECK(s.size() == 2048);
    std::set<std::vector<Rational>> all;
    for (std::size_t i = 0; i < s.size(); ++i) {
        std::vector<Rational> v = s.vector_at(i);
        Rational norm = 0;
        for (const Rational& x : v) norm += x * x;
        CHECK(norm == 3);
        all.insert(std::move(v));
    }
    CHECK(all.size() == s.size());  // duplicate-free
    for (const auto& v : all) {
        std::vector<Rational> neg;
        for (const Rational& x : v) neg.push_back(-x);
        CHECK(all.count(neg) == 1);
    }
}

TEST_CASE("shell vectors come out sorted") {
    Shell s = enumerate_shell(Lattice::cubic(3), 5);
    for (std::size_t i = 1; i < s.size(); ++i) {
        const std::int32_t* a = s.at(i - 1);
        const std::int32_t* b = s.at(i);
        CHECK(std::lexicographical_compare(a, a + s.dim(), b, b + s.dim()));
    }
}

TEST_CASE("resource ceiling") {
    ShellOptions opt;
    opt.ceiling = 10;
    CHECK_THROWS_AS(enumerate_shell(Lattice::cubic(4), 2, std::nullopt, opt), resource_error);
    opt.ceiling = 1000;
    opt.predicted_size = 5000;
    CHECK_THROWS_AS(enumerate_shell(Lattice::cubic(4), 2, std::nullopt, opt), resource_error);
}

TEST_CASE("ip distribution of E8 roots") {
    Shell roots = enumerate_shell(Lattice::e8(), 2);
    REQUIRE(roots.size() == 240);
    IPDistribution d = ip_distribution(roots);
    CHECK(d.total() == 240ULL * 240);
    CHECK(d.counts.at(Rational(2)) == 240);        // N_2 = 1 per point
    CHECK(d.counts.at(Rational(1)) == 240 * 56);   // N_1 = 2h-4 = 56
    CHECK(d.counts.at(Rational(0)) == 240 * 126);  // N_0 = nh - 2 - 2 N_1
    CHECK(d.counts.at(Rational(-1)) == 240 * 56);
    CHECK(d.counts.at(Rational(-2)) == 240);
}

TEST_CASE("ip distribution of a two-point set") {
    Shell s = Shell::from_vectors({{Rational(1)}, {Rational(-1)}});
    IPDistribution d = ip_distribution(s);
    CHECK(d.counts.at(Rational(1)) == 2);
    CHECK(d.counts.at(Rational(-1)) == 2);
    CHECK(d.total() == 4);
}

TEST_CASE("(Z4)_2 pair distribution sums to 24^2") {
    Shell s = enumerate_shell(Lattice::cubic(4), 2);
    CHECK(ip_distribution(s).total() == 576);
}

TEST_CASE("mixed-norm point sets are rejected") {
    CHECK_THROWS_AS(Shell::from_vectors({{Rational(1)}, {Rational(2)}}), domain_error);
}

TEST_CASE("theta consistency for cubic and Witt families") {
    Exponent cutoff = 20 * kQStep;
    for (int n : {2, 3, 5}) {
        QSeries theta = expand(family_theta(FamilyDescriptor::cubic(n)), cutoff);
        Lattice l = Lattice::cubic(n);
        for (long m = 1; m <= 12; ++m)
            CHECK(Rational(static_cast<long>(count_shell(l, m))) == theta.coeff_q(m));
    }
    QSeries w12_theta = expand(family_theta(FamilyDescriptor::witt(12)), cutoff);
    Lattice w12 = Lattice::witt(12);
    for (long m = 1; m <= 6; ++m)
        CHECK(Rational(static_cast<long>(count_shell(w12, m))) == w12_theta.coeff_q(m));
}

TEST_CASE("shadow shell norms stay on the n/4 + 2N grid") {
    Lattice z5 = Lattice::cubic(5);
    ShadowCoset coset = z5.shadow_coset();
    CHECK(coset.min_norm == Rational(5, 4));
    CHECK(count_coset_shell(coset, Rational(5, 4)) == 32);  // (±1/2)^5
    // off-grid norms are empty
    CHECK(count_coset_shell(coset, Rational(7, 4)) == 0);
    CHECK(count_coset_shell(coset, 2) == 0);
}

TEST_CASE("coset enumeration matches the shadowed theta series") {
    Exponent cutoff = 12 * kQStep;
    Lattice w12 = Lattice::witt(12);
    ShadowCoset coset = w12.shadow_coset();
    QSeries sh = expand(shadow(family_theta(FamilyDescriptor::witt(12))), cutoff);
    for (Rational m = 1; m <= 7; m += 2) {
        Rational scaled = m * static_cast<long>(kQStep);
        CHECK(Rational(static_cast<long>(count_coset_shell(coset, m))) ==
              sh.coeff(scaled.get_num().get_si()));
    }
}

TEST_CASE("TSV export") {
    Shell s = enumerate_shell(Lattice::cubic(1), 4);
    CHECK(s.to_tsv() == "-2\n2\n");
    Shell half = enumerate_coset_shell(Lattice::cubic(1).shadow_coset(), Rational(1, 4));
    CHECK(half.to_tsv() == "-1/2\n1/2\n");
}
