#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "monoalg/algebra.hpp"
#include "monoalg/classify.hpp"
#include "monoalg/errors.hpp"

using namespace monoalg;

namespace {

CanonicalForm form(Residue p, std::vector<FormPart> parts) {
    return CanonicalForm(PrimeField(p), std::move(parts));
}

}  // namespace

TEST_CASE("canonical form validation") {
    CHECK_THROWS_AS(form(2, {{1, 1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(form(2, {{1, 1, 1}, {1, 1, 2}}), std::invalid_argument);  // duplicate key
    CanonicalForm f = form(2, {{1, 2, 1}, {1, 1, 1}});  // sorted on construction
    CHECK(f.parts()[0].j == 1);
    CHECK(f.dimension() == 3);
    CHECK(f.slot_count() == 2);
    CHECK(form(2, {{2, 2, 1}}).dimension() == 4);

    CanonicalForm free = CanonicalForm::free_algebra(PrimeField(2));
    CHECK(free.is_free());
    CHECK_THROWS_AS(free.dimension(), std::logic_error);
    CHECK_FALSE(free == form(2, {{1, 1, 1}}));
}

TEST_CASE("componentwise ring structure") {
    auto alg = ProductAlgebra::make(form(2, {{1, 1, 1}, {1, 2, 1}}));  // F_2 x F_2[Y]/(Y^2)
    AlgebraElement one = alg->one();
    AlgebraElement zero = alg->zero();
    CHECK(one.is_one());
    CHECK(zero.is_zero());

    for (std::uint64_t k = 0; k < alg->element_count(); ++k) {
        AlgebraElement x = alg->element_at(k);
        CHECK(one * x == x);
        CHECK(x + zero == x);
        CHECK((x - x).is_zero());
    }

    // nilpotency in the second slot: Y * Y = 0
    auto f2 = ext_field(2, 1);
    AlgebraElement y = alg->element({{f2->zero()}, {f2->zero(), f2->one()}});
    CHECK((y * y).is_zero());

    // orthogonal idempotents in (F_2)^2
    auto sq = ProductAlgebra::make(form(2, {{1, 1, 2}}));
    AlgebraElement e0 = sq->basis_idempotent(0);
    AlgebraElement e1 = sq->basis_idempotent(1);
    CHECK((e0 * e1).is_zero());
    CHECK(e0 + e1 == sq->one());
}

TEST_CASE("basis idempotents") {
    auto alg = ProductAlgebra::make(form(3, {{1, 2, 2}, {2, 1, 1}}));
    AlgebraElement sum = alg->zero();
    for (std::uint32_t s = 0; s < alg->slots(); ++s) {
        AlgebraElement e = alg->basis_idempotent(s);
        CHECK(is_idempotent(e));
        sum = sum + e;
    }
    CHECK(sum.is_one());
    CHECK_THROWS_AS(alg->basis_idempotent(3), std::out_of_range);

    auto single = ProductAlgebra::make(form(2, {{2, 2, 1}}));
    CHECK(single->basis_idempotent(0) == single->one());
}

TEST_CASE("idempotent enumeration counts 2^slots") {
    for (auto parts : std::vector<std::vector<FormPart>>{
             {{1, 1, 2}},                     // F_2 x F_2
             {{1, 1, 1}, {1, 2, 1}},          // F_2 x F_2[Y]/(Y^2)
             {{1, 1, 3}},                     // (F_2)^3
             {{1, 2, 2}, {2, 1, 1}},          // mixed
         }) {
        auto alg = ProductAlgebra::make(form(2, parts));
        auto idems = idempotents(alg);
        CHECK(idems.size() == (std::size_t{1} << alg->slots()));
        std::set<std::vector<Residue>> distinct;
        for (const auto& e : idems) {
            CHECK(is_idempotent(e));
            distinct.insert(alg->flatten(e));
        }
        CHECK(distinct.size() == idems.size());
    }
}

TEST_CASE("every idempotent is a sum of basis idempotents") {
    // brute force over all elements of every product algebra of dimension <= 10
    // over F_2 and <= 6 over F_3
    for (auto [p, dmax] : {std::pair<Residue, std::uint64_t>{2, 10}, {3, 6}}) {
        for (const auto& f : enumerate_forms(PrimeField(p), dmax, false)) {
            auto alg = ProductAlgebra::make(f);
            std::set<std::vector<Residue>> from_enum;
            for (const auto& e : idempotents(alg)) from_enum.insert(alg->flatten(e));
            std::uint64_t found = 0;
            for (std::uint64_t k = 0; k < alg->element_count(); ++k) {
                AlgebraElement x = alg->element_at(k);
                if (is_idempotent(x)) {
                    ++found;
                    CHECK(from_enum.count(alg->flatten(x)) == 1);
                }
            }
            CHECK(found == from_enum.size());
        }
    }
}

TEST_CASE("idempotent cap") {
    auto alg = ProductAlgebra::make(form(2, {{1, 1, 5}}));
    CHECK_THROWS_AS(idempotents(alg, 4), CapExceededError);
}

TEST_CASE("idempotent count at twelve slots") {
    auto alg = ProductAlgebra::make(form(2, {{1, 1, 12}}));
    auto idems = idempotents(alg);
    CHECK(idems.size() == 4096);
    for (std::size_t k = 0; k < idems.size(); k += 129) CHECK(is_idempotent(idems[k]));
}

TEST_CASE("unit eigenspace of an idempotent") {
    auto alg = ProductAlgebra::make(form(2, {{1, 1, 1}, {1, 2, 1}, {2, 1, 1}}));

    // a basis idempotent selects its own slot
    for (std::uint32_t s = 0; s < alg->slots(); ++s) {
        Eigenring e = eigenspace_one(alg->basis_idempotent(s));
        REQUIRE(e.slots.size() == 1);
        CHECK(e.slots[0] == s);
        CHECK(e.type.dimension() ==
              static_cast<std::uint64_t>(alg->form().slot_degree(s)) * alg->form().slot_length(s));
    }

    CHECK(eigenspace_one(alg->one()).slots.size() == alg->slots());
    CHECK(eigenspace_one(alg->one()).type == alg->form());
    CHECK(eigenspace_one(alg->zero()).slots.empty());

    // E_1(a) really is {x : ax = x}
    for (const auto& a : idempotents(alg)) {
        Eigenring e = eigenspace_one(a);
        std::set<std::uint32_t> sel(e.slots.begin(), e.slots.end());
        for (std::uint64_t k = 0; k < alg->element_count(); ++k) {
            AlgebraElement x = alg->element_at(k);
            bool fixed = a * x == x;
            bool supported = true;
            for (std::uint32_t s = 0; s < alg->slots(); ++s)
                if (!sel.count(s) && !trunc_is_zero(x.component(s))) supported = false;
            CHECK(fixed == supported);
        }
    }

    auto f2 = ext_field(2, 1);
    auto small = ProductAlgebra::make(form(2, {{1, 3, 1}}));
    AlgebraElement y = small->element({{f2->zero(), f2->one(), f2->zero()}});
    CHECK_FALSE(is_idempotent(y));
    CHECK_THROWS_AS(eigenspace_one(y), std::invalid_argument);
}

TEST_CASE("scalar action") {
    auto alg = ProductAlgebra::make(form(5, {{1, 2, 1}}));
    AlgebraElement one = alg->one();
    CHECK(one.scaled(3) + one.scaled(2) == alg->zero());
    CHECK(one.scaled(1) == one);
}

TEST_CASE("form mismatch is rejected") {
    auto a = ProductAlgebra::make(form(2, {{1, 1, 2}}));
    auto b = ProductAlgebra::make(form(2, {{1, 2, 1}}));
    CHECK_THROWS_AS(a->one() + b->one(), std::invalid_argument);
    CHECK_THROWS_AS(a->one() * b->one(), std::invalid_argument);
}
