#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "monoalg/errors.hpp"
#include "monoalg/gf.hpp"
#include "naive_fp.hpp"

using namespace monoalg;

TEST_CASE("primality test") {
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(is_prime(2147483647ull));  // 2^31 - 1
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(561));  // Carmichael
    CHECK_FALSE(is_prime(1ull << 40));
    CHECK_THROWS_AS(PrimeField(4), std::invalid_argument);
}

TEST_CASE("prime field arithmetic") {
    PrimeField f5(5);
    CHECK(f5.add(3, 4) == 2);
    CHECK(f5.sub(1, 3) == 3);
    CHECK(f5.mul(3, 4) == 2);
    CHECK(f5.inv(2) == 3);  // 2*3 = 6 = 1 mod 5
    CHECK(f5.pow(2, 4) == 1);
    CHECK_THROWS_AS(f5.inv(0), std::domain_error);

    PrimeField big(2147483647ull);
    for (Residue a : {2ull, 12345ull, 2147483646ull}) CHECK(big.mul(a, big.inv(a)) == 1);
}

TEST_CASE("canonical moduli match exhaustive enumeration") {
    // degree 1: the canonical modulus is Y itself
    CHECK(ext_field(2, 1)->modulus() == std::vector<Residue>{0, 1});
    CHECK(ext_field(7, 1)->modulus() == std::vector<Residue>{0, 1});

    // degree 2 over F_2 and F_3: enumerate all monic quadratics and pick the
    // lexicographically first without a root (degree 2: no root <=> irreducible)
    for (long long p : {2, 3}) {
        std::vector<Residue> expected;
        for (const auto& f : naive::nmonic_of_degree(2, p)) {
            bool has_root = false;
            for (long long x = 0; x < p; ++x)
                if (naive::neval(f, x, p) == 0) has_root = true;
            if (!has_root) {
                expected.assign(f.begin(), f.end());
                break;
            }
        }
        CHECK(ext_field(static_cast<Residue>(p), 2)->modulus() == expected);
    }
    CHECK(ext_field(2, 2)->modulus() == std::vector<Residue>{1, 1, 1});  // Y^2+Y+1
    CHECK(ext_field(3, 2)->modulus() == std::vector<Residue>{1, 0, 1});  // Y^2+1

    // general degrees: canonical modulus is irreducible and nothing smaller is
    for (auto [p, d] : {std::pair<long long, std::uint32_t>{2, 3}, {2, 4}, {3, 3}, {5, 2}}) {
        auto f = ext_field(static_cast<Residue>(p), d);
        naive::NPoly m(f->modulus().begin(), f->modulus().end());
        CHECK(naive::nirreducible(m, p));
        for (const auto& g : naive::nmonic_of_degree(d, p)) {
            if (g == m) break;
            CHECK_FALSE(naive::nirreducible(g, p));
        }
    }
}

TEST_CASE("field construction is deterministic and interned") {
    auto a = ext_field(3, 4);
    auto b = ext_field(3, 4);
    CHECK(a == b);  // same object
    CHECK(a->modulus() == b->modulus());
}

TEST_CASE("arithmetic in F_4") {
    auto f4 = ext_field(2, 2);
    FieldElement y = f4->gen();
    CHECK(y * y == y + f4->one());  // Y^2 = Y + 1 mod Y^2+Y+1
    CHECK(y * f4->one() == y);
    CHECK((y * y * y).is_one());  // Y has order 3
}

TEST_CASE("units invert exhaustively for q <= 64") {
    for (auto [p, d] :
         {std::pair<Residue, std::uint32_t>{2, 1}, {2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6},
          {3, 1}, {3, 2}, {3, 3}, {5, 1}, {5, 2}, {7, 1}, {7, 2}, {61, 1}}) {
        auto f = ext_field(p, d);
        for (std::uint64_t k = 1; k < f->size(); ++k) {
            FieldElement x = f->element_at(k);
            CHECK((x * x.inverse()).is_one());
        }
        CHECK_THROWS_AS(f->zero().inverse(), std::domain_error);
    }
}

TEST_CASE("frobenius properties") {
    auto f4 = ext_field(2, 2);
    FieldElement y = f4->gen();
    CHECK(y.frobenius(1) == y + f4->one());  // Y^2 reduced mod Y^2+Y+1
    CHECK(y.frobenius(0) == y);
    CHECK(y.frobenius(2) == y);  // order d

    // the fixed set of x -> x^p is exactly the prime subfield, and the map
    // is a ring homomorphism; exhaustive over q <= 64
    for (auto [p, d] : {std::pair<Residue, std::uint32_t>{2, 2}, {2, 3}, {2, 6}, {3, 2}, {3, 3}, {5, 2}, {7, 2}}) {
        auto f = ext_field(p, d);
        std::uint64_t fixed = 0;
        for (std::uint64_t k = 0; k < f->size(); ++k) {
            FieldElement x = f->element_at(k);
            if (x.frobenius(1) == x) ++fixed;
            CHECK(x.frobenius(1).frobenius(d - 1) == x);
            for (std::uint64_t l = 0; l < std::min<std::uint64_t>(f->size(), 8); ++l) {
                FieldElement z = f->element_at(l);
                CHECK((x + z).frobenius(1) == x.frobenius(1) + z.frobenius(1));
                CHECK((x * z).frobenius(1) == x.frobenius(1) * z.frobenius(1));
            }
        }
        CHECK(fixed == p);
        for (Residue v = 0; v < p; ++v) CHECK(f->from_int(v).frobenius(1) == f->from_int(v));
    }
}

TEST_CASE("galois labels") {
    CHECK(automorphism_labels(*ext_field(2, 1)) == std::vector<std::uint32_t>{0});
    CHECK(automorphism_labels(*ext_field(2, 2)) == std::vector<std::uint32_t>{0, 1});
    CHECK(automorphism_labels(*ext_field(2, 3)) == std::vector<std::uint32_t>{0, 1, 2});
}

TEST_CASE("element enumeration round trips") {
    auto f8 = ext_field(2, 3);
    std::set<std::vector<Residue>> seen;
    for (std::uint64_t k = 0; k < 8; ++k) {
        FieldElement x = f8->element_at(k);
        CHECK(f8->index_of(x) == k);
        seen.insert(x.coeffs());
    }
    CHECK(seen.size() == 8);
    CHECK(f8->element_at(0).is_zero());
}

TEST_CASE("primitive elements generate the unit group") {
    for (auto [p, d] : {std::pair<Residue, std::uint32_t>{2, 2}, {2, 3}, {3, 2}, {5, 1}}) {
        auto f = ext_field(p, d);
        FieldElement g = f->primitive_element();
        std::set<std::vector<Residue>> powers;
        FieldElement acc = f->one();
        for (std::uint64_t i = 0; i + 1 < f->size(); ++i) {
            powers.insert(acc.coeffs());
            acc = acc * g;
        }
        CHECK(powers.size() == f->size() - 1);
    }
}

TEST_CASE("cross-field operations are rejected") {
    auto f4 = ext_field(2, 2);
    auto f8 = ext_field(2, 3);
    CHECK_THROWS_AS(f4->gen() + f8->gen(), std::invalid_argument);
    CHECK_THROWS_AS(f4->gen() * ext_field(3, 2)->gen(), std::invalid_argument);
}

TEST_CASE("rank over F_p") {
    PrimeField f2(2);
    CHECK(fp_rank({{1, 0}, {0, 1}}, f2) == 2);
    CHECK(fp_rank({{1, 1}, {1, 1}}, f2) == 1);
    CHECK(fp_rank({{0, 0}, {0, 0}}, f2) == 0);
    CHECK(fp_invertible({{1, 0, 0}, {0, 1, 1}, {0, 0, 1}}, f2));
    CHECK_FALSE(fp_invertible({{1, 1}, {1, 1}}, f2));
    PrimeField f5(5);
    CHECK(fp_rank({{2, 4}, {1, 2}}, f5) == 1);  // second row is 3x the first
    CHECK(fp_rank({{2, 4}, {1, 3}}, f5) == 2);
}
