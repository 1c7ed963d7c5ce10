#include "lattheta/modforms.hpp"

#include <cmath>

#include "doctest.h"
#include "lattheta/util.hpp"

using namespace lattheta;

TEST_CASE("catalog expansions match the displayed coefficients") {
    Exponent cutoff = 12 * kQStep;
    QSeries q = expand(forms::q(), cutoff);
    CHECK(q.coeff_q(0) == 1);
    CHECK(q.coeff_q(1) == 0);
    CHECK(q.coeff_q(2) == 240);
    CHECK(q.coeff_q(4) == 2160);

    QSeries r = expand(forms::r(), cutoff);
    CHECK(r.coeff_q(0) == 1);
    CHECK(r.coeff_q(2) == -504);

    QSeries phi = expand(forms::phi(), cutoff);
    CHECK(phi.coeff_q(0) == 1);
    CHECK(phi.coeff_q(1) == -24);
    CHECK(phi.coeff_q(2) == 24);
    CHECK(phi.coeff_q(3) == -96);
}

TEST_CASE("defining-sum oracle for the base thetas") {
    Exponent cutoff = 150 * kQStep;
    QSeries th3 = expand(forms::th3(), cutoff);
    QSeries th4 = expand(forms::th4(), cutoff);
    QSeries th2 = expand(forms::th2(), cutoff);
    for (long m = 0; m <= 150; ++m) {
        bool sq = false;
        long root = 0;
        for (long a = 1; a * a <= m; ++a)
            if (a * a == m) {
                sq = true;
                root = a;
            }
        Rational expected = m == 0 ? 1 : (sq ? 2 : 0);
        CHECK(th3.coeff_q(m) == expected);
        Rational expected4 = m == 0 ? 1 : (sq ? (root % 2 ? -2 : 2) : 0);
        CHECK(th4.coeff_q(m) == expected4);
    }
    // Th2: coefficient 2 exactly at odd squares over 4
    for (const auto& [e, c] : th2.terms()) {
        CHECK(c == 2);
        long long num = e * 4 / kQStep;  // 4m must be an odd square
        CHECK(e * 4 % kQStep == 0);
        long long root = std::llround(std::sqrt(static_cast<double>(num)));
        CHECK(root * root == num);
        CHECK(root % 2 == 1);
    }
}

TEST_CASE("shadow of the named forms") {
    Exponent cutoff = 10 * kQStep;
    ThetaPolynomial sh_de8 = shadow(forms::de8());
    // -(1/16) Th3^4 Th4^4
    CHECK(sh_de8 == ThetaPolynomial::word({0, 4, 4}, Rational(-1, 16)));
    QSeries s = expand(sh_de8, cutoff);
    CHECK(s.coeff_q(0) == Rational(-1, 16));
    CHECK(s.coeff_q(2) == 1);
    CHECK(s.coeff_q(4) == -7);

    ThetaPolynomial sh_phi = shadow(forms::phi());
    CHECK(sh_phi == ThetaPolynomial::word({0, 4, 0}) + ThetaPolynomial::word({0, 0, 4}));
    QSeries p = expand(sh_phi, cutoff);
    CHECK(p.coeff_q(0) == 2);
    CHECK(p.coeff_q(2) == 48);
    CHECK(p.coeff_q(4) == 48);
}

TEST_CASE("Sh Q = Q, Sh R = -R, Sh De24 = De24") {
    Exponent cutoff = 200 * kQStep;
    CHECK(verify_identity(shadow(forms::q()), forms::q(), cutoff).equal);
    CHECK(verify_identity(shadow(forms::r()), -forms::r(), cutoff).equal);
    // De24 = (1/256) Th2^8 Th3^8 Th4^8 is literally shadow-fixed
    CHECK(shadow(forms::de24()) == forms::de24());
}

TEST_CASE("shadow rejects Th2 exponents not divisible by 4") {
    CHECK_THROWS_AS(shadow(forms::th2()), domain_error);
    CHECK_THROWS_AS(shadow(ThetaPolynomial::word({2, 0, 0})), domain_error);
}

TEST_CASE("shadow is multiplicative on admissible polynomials") {
    Rng rng(5150);
    auto random_poly = [&rng]() {
        ThetaPolynomial p;
        for (int t = 0; t < 3; ++t) {
            ThetaWord w{4 * static_cast<int>(rng.below(3)), static_cast<int>(rng.below(5)),
                        static_cast<int>(rng.below(5))};
            p = p + ThetaPolynomial::word(w, Rational(rng.range(-5, 5)));
        }
        return p;
    };
    for (int round = 0; round < 25; ++round) {
        ThetaPolynomial f = random_poly();
        ThetaPolynomial g = random_poly();
        CHECK(shadow(f * g) == shadow(f) * shadow(g));
    }
}

TEST_CASE("weight additivity and homogeneity") {
    CHECK(forms::q().homogeneous_weight2() == 8);        // weight 4
    CHECK(forms::r().homogeneous_weight2() == 12);       // weight 6
    CHECK(forms::de24().homogeneous_weight2() == 24);    // weight 12
    CHECK((forms::q() * forms::r()).homogeneous_weight2() == 20);
    ThetaPolynomial mixed = forms::q() + forms::th3();
    CHECK(!mixed.homogeneous_weight2().has_value());
}

TEST_CASE("verify_identity examples") {
    Exponent cutoff = 400 * kQStep;
    ThetaPolynomial lhs = ThetaPolynomial::word({4, 0, 0}) + ThetaPolynomial::word({0, 0, 4});
    CHECK(verify_identity(lhs, ThetaPolynomial::word({0, 4, 0}), cutoff).equal);

    ThetaPolynomial q_def = ThetaPolynomial::word({0, 8, 0}) - forms::de8().scaled(16);
    CHECK(verify_identity(forms::q(), q_def, cutoff).equal);

    IdentityCheck bad = verify_identity(ThetaPolynomial::word({0, 4, 0}),
                                        ThetaPolynomial::word({0, 0, 4}), cutoff);
    CHECK(!bad.equal);
    CHECK(bad.first_difference == kQStep);
    CHECK(bad.lhs_coeff == 8);
    CHECK(bad.rhs_coeff == -8);
}

TEST_CASE("De24 is supported on even exponents >= 2") {
    QSeries de24 = expand(forms::de24(), 60 * kQStep);
    for (const auto& [e, c] : de24.terms()) {
        CHECK(e % (2 * kQStep) == 0);
        CHECK(e >= 2 * kQStep);
    }
}

TEST_CASE("form expression parser") {
    CHECK(parse_form("Phi*Th3^7*De8") == forms::phi() * ThetaPolynomial::word({0, 7, 0}) * forms::de8());
    CHECK(parse_form("Th3^8-16*De8") == forms::q());
    CHECK(parse_form(" Q ") == forms::q());
    CHECK(parse_form("1/16*Th2^4*Th4^4") == forms::de8());
    CHECK(parse_form("Sh(De8)") == shadow(forms::de8()));
    CHECK(parse_form("(Th3^4+Th2^4)^2") ==
          (ThetaPolynomial::word({0, 4, 0}) + ThetaPolynomial::word({4, 0, 0})).pow(2));
    CHECK_THROWS_AS(parse_form("Bogus"), parse_error);
    CHECK_THROWS_AS(parse_form("Th3^"), parse_error);
    CHECK_THROWS_AS(parse_form("Th3)"), parse_error);
}

TEST_CASE("expansion memo under concurrent use") {
    clear_expand_memo();
    std::vector<QSeries> results(8);
    parallel_for(8, 4, [&](std::size_t i) {
        // half the workers share a form, half use distinct ones
        ThetaPolynomial p = i % 2 ? forms::de24() : forms::q().pow(1 + static_cast<unsigned>(i / 2));
        results[i] = expand(p, 40 * kQStep);
    });
    CHECK(results[1] == results[3]);
    CHECK(results[1] == expand(forms::de24(), 40 * kQStep));
    CHECK(results[0] == expand(forms::q(), 40 * kQStep));
}
