#include "lattheta/lattice.hpp"

#include "doctest.h"
#include "lattheta/shells.hpp"

using namespace lattheta;

TEST_CASE("cubic lattice invariants") {
    Lattice z4 = Lattice::cubic(4);
    CHECK(z4.is_selfdual());
    CHECK(!z4.is_even());
    CHECK(z4.sigma() == 4);
    CHECK(z4.min_norm() == 1);

    LatticeInvariants inv = Lattice::cubic(7).invariants();
    CHECK(inv.selfdual);
    CHECK(!inv.even);
    CHECK(inv.sigma == 7);
    CHECK(inv.min_norm == 1);
    CHECK(inv.p == 7);
    CHECK(inv.root_system == "empty");  // no roots beyond the Z-part
    CHECK(inv.full_root_system == "D7");
}

TEST_CASE("Witt lattices") {
    CHECK_THROWS_AS(Lattice::witt(10), domain_error);

    Lattice w8 = Lattice::witt(8);
    CHECK(w8.is_selfdual());
    CHECK(w8.is_even());
    CHECK(w8.det() == 1);
    CHECK(count_shell(w8, 2) == 240);

    Lattice w12 = Lattice::witt(12);
    CHECK(w12.is_selfdual());
    CHECK(!w12.is_even());
    CHECK(w12.min_norm() == 2);
    CHECK(w12.sigma() == 4);

    Lattice w16 = Lattice::witt(16);
    LatticeInvariants inv = w16.invariants();
    CHECK(inv.even);
    CHECK(inv.sigma == 0);
    CHECK(inv.min_norm == 2);
    CHECK(inv.root_system == "D16");
}

TEST_CASE("Witt parity matches rank mod 8") {
    for (int n = 8; n <= 24; n += 4) CHECK(Lattice::witt(n).is_even() == (n % 8 == 0));
}

TEST_CASE("construction A of the even-weight code of length 4") {
    Lattice d4 = Lattice::construction_a(BinaryCode::even_weight(4));
    CHECK(d4.det() == 4);  // index 2 in Z^4
    CHECK(count_shell(d4, 2) == 24);
    CHECK(d4.is_even());
}

TEST_CASE("construction A index is 2^(n-k)") {
    BinaryCode hamming = BinaryCode::hamming7();
    CHECK(hamming.dimension() == 4);
    Lattice l = Lattice::construction_a(hamming);
    // det = |Z^n : Λ|^2 = (2^(7-4))^2
    CHECK(l.det() == 64);

    BinaryCode even6 = BinaryCode::even_weight(6);
    CHECK(Lattice::construction_a(even6).det() == 4);
}

TEST_CASE("Hamming code weight enumerator") {
    auto w = BinaryCode::hamming7().weight_enumerator();
    CHECK(w[0] == 1);
    CHECK(w[3] == 7);
    CHECK(w[4] == 7);
    CHECK(w[7] == 1);
    CHECK(BinaryCode::hamming7().codewords().size() == 16);
}

TEST_CASE("shadow coset of Z^1 is Z + 1/2") {
    Lattice z1 = Lattice::cubic(1);
    ShadowCoset coset = z1.shadow_coset();
    CHECK(!coset.trivial);
    CHECK(coset.shift == std::vector<Rational>{Rational(1, 2)});
    CHECK(coset.min_norm == Rational(1, 4));
    CHECK(count_coset_shell(coset, Rational(1, 4)) == 2);
    CHECK(count_coset_shell(coset, Rational(9, 4)) == 2);
}

TEST_CASE("shadow coset of Witt(12)") {
    Lattice w12 = Lattice::witt(12);
    ShadowCoset coset = w12.shadow_coset();
    CHECK(!coset.trivial);
    CHECK(coset.min_norm == 1);
    CHECK(count_coset_shell(coset, 1) == 24);
    // c_1 = -2N = -24 and |Sh(Λ)_1| = (-1)^1 2^(n-12k) c_1 = 24
    CHECK(w12.sigma() == 4);
}

TEST_CASE("shadow of an even lattice is the lattice") {
    Lattice w8 = Lattice::witt(8);
    ShadowCoset coset = w8.shadow_coset();
    CHECK(coset.trivial);
    CHECK(coset.min_norm == 2);
    CHECK(count_coset_shell(coset, 2) == 240);
}

TEST_CASE("shadow needs selfduality") {
    Lattice d4 = Lattice::construction_a(BinaryCode::even_weight(4));
    CHECK_THROWS_AS(d4.shadow_coset(), domain_error);
    CHECK_THROWS_AS(d4.sigma(), domain_error);
}

TEST_CASE("sigma is additive on direct sums") {
    Lattice sum = Lattice::direct_sum(Lattice::cubic(3), Lattice::witt(12));
    CHECK(sum.is_selfdual());
    CHECK(sum.sigma() == 3 + 4);
}

TEST_CASE("shadow norms satisfy 4<x,x> = n mod 8") {
    for (const char* spec : {"Z:3", "Z:5", "W:12", "Z:2+W:12"}) {
        Lattice l = Lattice::parse_spec(spec);
        ShadowCoset coset = l.shadow_coset();
        int n = l.rank();
        // the whole coset: any norm m with a nonempty shell obeys 4m = n (8)
        Rational m0 = coset.min_norm;
        for (int step = 0; step < 3; ++step) {
            Rational m = m0 + 2 * step;
            if (count_coset_shell(coset, m) > 0) {
                Rational residue = 4 * m - n;
                CHECK(residue.get_den() == 1);
                CHECK(((residue.get_num() % 8) + 8) % 8 == 0);
            }
        }
    }
}

TEST_CASE("selfdual family members have determinant 1") {
    for (const char* spec : {"Z:1", "Z:8", "W:8", "W:12", "W:16", "W:20", "W:12+W:12"})
        CHECK(Lattice::parse_spec(spec).det() == 1);
}

TEST_CASE("sigma of long-shadow members is n - 8") {
    Lattice w12 = Lattice::witt(12);
    CHECK(w12.sigma() == w12.rank() - 8);
    Lattice z = Lattice::cubic(6);
    CHECK(z.sigma() == 6);
}

TEST_CASE("root lattices") {
    Lattice e8 = Lattice::e8();
    CHECK(e8.det() == 1);
    CHECK(count_shell(e8, 2) == 240);

    Lattice e7 = Lattice::e7();
    CHECK(e7.det() == 2);
    CHECK(count_shell(e7, 2) == 126);

    Lattice e6 = Lattice::e6();
    CHECK(e6.det() == 3);
    CHECK(count_shell(e6, 2) == 72);

    Lattice d8 = Lattice::root_d(8);
    CHECK(d8.det() == 4);
    CHECK(count_shell(d8, 2) == 112);

    Lattice a5 = Lattice::root_a(5);
    CHECK(a5.det() == 6);
    CHECK(count_shell(a5, 2) == 30);
}

TEST_CASE("from_gram validation") {
    CHECK_THROWS_AS(Lattice::from_gram({{Integer(1), Integer(2)}, {Integer(2), Integer(1)}}),
                    domain_error);  // not positive definite
    CHECK_THROWS_AS(Lattice::from_gram({{Integer(1), Integer(2)}, {Integer(1), Integer(1)}}),
                    domain_error);  // not symmetric
    Lattice l = Lattice::from_gram({{Integer(2), Integer(1)}, {Integer(1), Integer(2)}}, "A2");
    CHECK(l.det() == 3);
    CHECK(count_shell(l, 2) == 6);
}

TEST_CASE("gram text import") {
    auto g = read_gram_text("2  2 1  1 2");
    CHECK(g.size() == 2);
    CHECK(g[0][1] == 1);
    CHECK_THROWS_AS(read_gram_text("2 1 2 3"), parse_error);
}

TEST_CASE("W16 shell 2 identification uses the shell graph") {
    LatticeInvariants inv = Lattice::witt(16).invariants();
    CHECK(inv.root_system == "D16");
    LatticeInvariants w12sq = Lattice::parse_spec("W:12+W:12").invariants();
    CHECK(w12sq.root_system == "2D12");
    LatticeInvariants mixed = Lattice::parse_spec("W:12+W:8").invariants();
    CHECK(mixed.root_system == "D12+E8");
}
