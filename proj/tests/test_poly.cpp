#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "monoalg/errors.hpp"
#include "monoalg/poly.hpp"
#include "naive_fp.hpp"

using namespace monoalg;

namespace {

Polynomial from_ints(const FieldPtr& f, std::vector<Residue> cs) {
    return Polynomial::from_residues(f, cs);
}

// independent irreducibility check over F_q: exhaustive trial division by
// every monic polynomial of degree 1 .. deg/2
bool divisor_search_irreducible(const Polynomial& f) {
    const auto& fld = f.field();
    const std::uint32_t deg = static_cast<std::uint32_t>(f.degree());
    if (deg < 1) return false;
    const std::uint64_t q = fld->size();
    for (std::uint32_t d = 1; 2 * d <= deg; ++d) {
        std::vector<std::uint64_t> idx(d, 0);
        for (;;) {
            std::vector<FieldElement> cs;
            for (std::uint32_t i = 0; i < d; ++i) cs.push_back(fld->element_at(idx[i]));
            cs.push_back(fld->one());
            if ((f % Polynomial::from_coeffs(fld, cs)).is_zero()) return false;
            std::uint32_t i = d;
            bool done = false;
            while (i-- > 0) {
                if (++idx[i] < q) break;
                idx[i] = 0;
                if (i == 0) done = true;
            }
            if (done) break;
        }
    }
    return true;
}

Polynomial random_monic(const FieldPtr& f, std::uint32_t deg, std::mt19937_64& rng) {
    std::vector<Residue> cs(deg + 1, 0);
    for (std::uint32_t i = 0; i < deg; ++i) cs[i] = rng() % f->p();
    cs[deg] = 1;
    return from_ints(f, cs);
}

}  // namespace

TEST_CASE("basic arithmetic") {
    auto f2 = ext_field(2, 1);
    Polynomial x = Polynomial::x(f2);
    CHECK(gcd(x * x + x, x) == x);                         // gcd(X^2+X, X) = X
    CHECK(derivative(x * x + x + Polynomial::one(f2)) ==   // (X^2+X+1)' = 2X+1 = 1
          Polynomial::one(f2));
    Polynomial a = from_ints(f2, {1, 1, 0, 1});
    CHECK(a * Polynomial::one(f2) == a);
    CHECK((a + a).is_zero());
}

TEST_CASE("divmod invariants") {
    std::mt19937_64 rng(7);
    for (Residue p : {2ull, 3ull, 5ull}) {
        auto f = ext_field(p, 1);
        for (int trial = 0; trial < 200; ++trial) {
            Polynomial a = random_monic(f, 1 + rng() % 10, rng);
            Polynomial b = random_monic(f, 1 + rng() % 6, rng);
            auto [q, r] = divmod(a, b);
            CHECK(q * b + r == a);
            CHECK(r.degree() < b.degree());
        }
    }
    auto f2 = ext_field(2, 1);
    CHECK_THROWS_AS(divmod(Polynomial::x(f2), Polynomial::zero(f2)), std::domain_error);
}

TEST_CASE("squarefree decomposition") {
    auto f2 = ext_field(2, 1);
    Polynomial x = Polynomial::x(f2);
    Polynomial xp1 = x + Polynomial::one(f2);

    auto sfd = squarefree_decomposition(x * x * xp1);
    REQUIRE(sfd.size() == 2);
    CHECK(sfd[0] == std::pair{xp1, 1u});
    CHECK(sfd[1] == std::pair{x, 2u});

    Polynomial irr = from_ints(f2, {1, 1, 1});
    auto single = squarefree_decomposition(irr);
    REQUIRE(single.size() == 1);
    CHECK(single[0] == std::pair{irr, 1u});

    // X^4+X^2+1 = (X^2+X+1)^2 over F_2; derivative vanishes, p-th root branch
    auto doubled = squarefree_decomposition(from_ints(f2, {1, 0, 1, 0, 1}));
    REQUIRE(doubled.size() == 1);
    CHECK(doubled[0] == std::pair{irr, 2u});
}

TEST_CASE("factor worked examples") {
    auto f2 = ext_field(2, 1);
    Polynomial x = Polynomial::x(f2);
    Polynomial xp1 = x + Polynomial::one(f2);

    Factorization f = factor(x * x * x + x * x);  // X^2 (X+1)
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0] == std::pair{x, 2u});
    CHECK(f.factors[1] == std::pair{xp1, 1u});
    CHECK(f.unit.is_one());

    Factorization g = factor(from_ints(f2, {1, 1, 1}));
    REQUIRE(g.factors.size() == 1);
    CHECK(g.factors[0].second == 1);

    // X^q - X over F_q splits into all monic linear polynomials
    auto f4 = ext_field(2, 2);
    Polynomial x4 = Polynomial::x(f4);
    Factorization h = factor(pow(x4, 4) + x4);
    REQUIRE(h.factors.size() == 4);
    for (const auto& [q, e] : h.factors) {
        CHECK(q.degree() == 1);
        CHECK(e == 1);
    }
    CHECK(h.product() == pow(x4, 4) + x4);

    CHECK_THROWS_AS(factor(Polynomial::one(f2)), std::domain_error);
}

TEST_CASE("factor recombines on random inputs") {
    std::mt19937_64 rng(42);
    for (Residue p : {2ull, 3ull, 5ull}) {
        auto f = ext_field(p, 1);
        for (std::uint32_t deg = 1; deg <= 12; ++deg) {
            for (int trial = 0; trial < 1000; ++trial) {
                std::vector<Residue> cs(deg + 1, 0);
                for (std::uint32_t i = 0; i < deg; ++i) cs[i] = rng() % p;
                cs[deg] = 1 + rng() % (p - 1);
                Polynomial input = from_ints(f, cs);
                Factorization fac = factor(input);
                CHECK(fac.product() == input);
                std::uint64_t total = 0;
                for (const auto& [q, e] : fac.factors) {
                    total += static_cast<std::uint64_t>(q.degree()) * e;
                    CHECK(q.is_monic());
                }
                CHECK(total == static_cast<std::uint64_t>(deg));
            }
        }
    }
}

TEST_CASE("factor recovers known products over extension fields") {
    // exercises equal-degree splitting over F_4 (trace method) and F_9
    // (exponent method) with several factors of the same degree
    std::mt19937_64 rng(99);
    for (auto [p, d] : {std::pair<Residue, std::uint32_t>{2, 2}, {3, 2}}) {
        auto f = ext_field(p, d);
        // collect a pool of distinct monic irreducibles of degrees 1 and 2
        std::vector<Polynomial> pool;
        for (std::uint32_t deg : {1u, 2u}) {
            std::vector<std::uint64_t> idx(deg, 0);
            for (;;) {
                std::vector<FieldElement> cs;
                for (std::uint32_t i = 0; i < deg; ++i) cs.push_back(f->element_at(idx[i]));
                cs.push_back(f->one());
                Polynomial cand = Polynomial::from_coeffs(f, cs);
                if (is_irreducible(cand)) pool.push_back(cand);
                std::uint32_t i = deg;
                bool done = false;
                while (i-- > 0) {
                    if (++idx[i] < f->size()) break;
                    idx[i] = 0;
                    if (i == 0) done = true;
                }
                if (done || pool.size() > 24) break;
            }
        }
        for (int trial = 0; trial < 30; ++trial) {
            std::vector<std::pair<Polynomial, std::uint32_t>> chosen;
            Polynomial prod = Polynomial::one(f);
            std::set<std::size_t> used;
            const std::size_t k = 2 + rng() % 3;
            for (std::size_t t = 0; t < k; ++t) {
                std::size_t pick = rng() % pool.size();
                if (used.count(pick)) continue;
                used.insert(pick);
                const std::uint32_t mult = 1 + rng() % 3;
                chosen.emplace_back(pool[pick], mult);
                prod = prod * pow(pool[pick], mult);
            }
            std::sort(chosen.begin(), chosen.end(),
                      [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
            Factorization fac = factor(prod);
            CHECK(fac.factors == chosen);
        }
    }
}

TEST_CASE("factor output is irreducible (exhaustive small cases)") {
    for (Residue p : {2ull, 3ull}) {
        auto f = ext_field(p, 1);
        for (std::uint32_t deg = 1; deg <= 5; ++deg) {
            for (const auto& np : naive::nmonic_of_degree(deg, static_cast<long long>(p))) {
                Polynomial poly = from_ints(f, std::vector<Residue>(np.begin(), np.end()));
                Factorization fac = factor(poly);
                CHECK(fac.product() == poly);
                for (const auto& [q, e] : fac.factors) {
                    naive::NPoly nq;
                    for (int i = 0; i <= q.degree(); ++i)
                        nq.push_back(static_cast<long long>(q.coeff(i).coeff(0)));
                    CHECK(naive::nirreducible(nq, static_cast<long long>(p)));
                }
            }
        }
    }
}

TEST_CASE("irreducibility agrees with trial division") {
    for (Residue p : {2ull, 3ull}) {
        auto f = ext_field(p, 1);
        for (std::uint32_t deg = 1; deg <= 5; ++deg) {
            for (const auto& np : naive::nmonic_of_degree(deg, static_cast<long long>(p))) {
                Polynomial poly = from_ints(f, std::vector<Residue>(np.begin(), np.end()));
                CHECK(is_irreducible(poly) == naive::nirreducible(np, static_cast<long long>(p)));
            }
        }
    }
}

TEST_CASE("irreducibility over extension fields") {
    // exhaustive divisor-search oracle over F_4 and F_9 up to degree 4
    std::mt19937_64 rng(11);
    for (auto [p, d] : {std::pair<Residue, std::uint32_t>{2, 2}, {3, 2}}) {
        auto f = ext_field(p, d);
        for (std::uint32_t deg = 1; deg <= 4; ++deg) {
            for (int trial = 0; trial < 40; ++trial) {
                std::vector<FieldElement> cs;
                for (std::uint32_t i = 0; i < deg; ++i) cs.push_back(f->element_at(rng() % f->size()));
                cs.push_back(f->one());
                Polynomial poly = Polynomial::from_coeffs(f, cs);
                CHECK(is_irreducible(poly) == divisor_search_irreducible(poly));
            }
        }
    }
    auto f2 = ext_field(2, 1);
    CHECK(is_irreducible(Polynomial::x(f2)));
    CHECK_FALSE(is_irreducible(Polynomial::x(f2) * Polynomial::x(f2)));
}

TEST_CASE("irreducible counts") {
    PrimeField f2(2), f3(3), f5(5);
    CHECK(count_irreducibles(f2, 1) == 2);
    CHECK(count_irreducibles(f2, 2) == 1);
    CHECK(count_irreducibles(f2, 3) == 2);
    CHECK(count_irreducibles(f2, 4) == 3);
    CHECK(count_irreducibles(f3, 2) == 3);
    CHECK(count_irreducibles(f5, 2) == 10);

    // cross-check against exhaustive enumeration
    for (auto [p, dmax] : {std::pair<long long, std::uint32_t>{2, 4}, {3, 4}, {5, 2}}) {
        for (std::uint32_t d = 1; d <= dmax; ++d) {
            std::uint64_t n = 0;
            for (const auto& g : naive::nmonic_of_degree(d, p))
                if (naive::nirreducible(g, p)) ++n;
            CHECK(count_irreducibles(PrimeField(static_cast<Residue>(p)), d) == n);
        }
    }

    // partition of F_{p^d} by minimal polynomial degrees
    for (auto [p, d] : {std::pair<Residue, std::uint32_t>{2, 6}, {3, 4}, {5, 3}}) {
        std::uint64_t total = 0, power = 1;
        for (std::uint32_t i = 0; i < d; ++i) power *= p;
        for (std::uint32_t e = 1; e <= d; ++e)
            if (d % e == 0) total += e * count_irreducibles(PrimeField(p), e);
        CHECK(total == power);
    }
}

TEST_CASE("irreducible enumeration") {
    PrimeField f2(2);
    auto one_quadratic = enumerate_irreducibles(f2, 2, 1);
    REQUIRE(one_quadratic.size() == 1);
    CHECK(one_quadratic[0] == from_ints(ext_field(2, 1), {1, 1, 1}));

    CHECK_THROWS_AS(enumerate_irreducibles(f2, 2, 2), InfeasibleError);

    auto linears = enumerate_irreducibles(f2, 1, 2);
    REQUIRE(linears.size() == 2);
    CHECK(linears[0] == Polynomial::x(ext_field(2, 1)));
    CHECK(linears[1] == Polynomial::x(ext_field(2, 1)) + Polynomial::one(ext_field(2, 1)));

    // enumeration is ordered and strictly increasing
    auto cubics = enumerate_irreducibles(PrimeField(3), 3, 8);
    for (std::size_t i = 1; i < cubics.size(); ++i) CHECK(poly_less(cubics[i - 1], cubics[i]));
    for (const auto& c : cubics) CHECK(is_irreducible(c));
}

TEST_CASE("root finding") {
    auto f2 = ext_field(2, 1);
    auto f4 = ext_field(2, 2);

    Polynomial q = from_ints(f2, {1, 1, 1});  // X^2+X+1
    FieldElement r = find_root(q, f4);
    CHECK(r == f4->gen());  // the class of Y is the lexicographically first root
    CHECK(evaluate(q, r).is_zero());

    // linear case: root of X + c is -c
    auto f5 = ext_field(5, 1);
    Polynomial lin = from_ints(f5, {2, 1});
    CHECK(find_root(lin, f5) == f5->from_int(3));

    // the canonical modulus of L vanishes on the class of Y; find_root picks
    // the lexicographically first of its d roots (cross-checked by scan)
    for (auto [p, d] : {std::pair<Residue, std::uint32_t>{2, 3}, {3, 2}, {5, 2}, {2, 4}}) {
        auto l = ext_field(p, d);
        Polynomial mod_poly = Polynomial::from_residues(ext_field(p, 1), l->modulus());
        CHECK(evaluate(mod_poly, l->gen()).is_zero());
        FieldElement root = find_root(mod_poly, l);
        for (std::uint64_t k = 0; k < l->size(); ++k) {
            FieldElement a = l->element_at(k);
            if (evaluate(mod_poly, a).is_zero()) {
                CHECK(root == a);
                break;
            }
        }
    }
}

TEST_CASE("pow_mod matches naive powering") {
    auto f3 = ext_field(3, 1);
    Polynomial x = Polynomial::x(f3);
    Polynomial m = from_ints(f3, {1, 2, 0, 1});
    Polynomial direct = Polynomial::one(f3);
    for (int i = 0; i < 11; ++i) direct = (direct * x) % m;
    CHECK(pow_mod(x, 11, m) == direct);
}
