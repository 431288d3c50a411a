#include <doctest.h>

#include <random>

#include "c2inv/error.hpp"
#include "c2inv/invariants.hpp"
#include "naive.hpp"

using namespace c2inv;

TEST_SUITE("invariants") {

TEST_CASE("sigma examples")
{
    CHECK(sigma(Poly::y(1, 1)).to_string() == Poly::parse(1, "y1 + x1").to_string());
    auto f = Poly::parse(2, "x1*y2^3 + x2");
    auto want = Poly::x(2, 2) + Poly::x(2, 1) * (Poly::y(2, 2) + Poly::x(2, 2)).pow(3);
    CHECK(sigma(f) == want);
    CHECK(sigma(norm(1, 1)) == norm(1, 1));
    CHECK(is_invariant(norm(2, 2)));
    CHECK_FALSE(is_invariant(Poly::y(1, 1)));
}

TEST_CASE("sigma agrees with substitution, is an involution and a ring map")
{
    std::mt19937 rng(77);
    for (int t = 0; t < 2000; ++t) {
        const std::size_t m = 1 + t % 3;
        auto f = gen::poly(rng, m, 4, 4);
        auto g = gen::poly(rng, m, 4, 3);
        REQUIRE(sigma(sigma(f)) == f);
        REQUIRE(sigma(f * g) == sigma(f) * sigma(g));
        REQUIRE(sigma(f + g) == sigma(f) + sigma(g));
        if (t % 4 == 0)
            REQUIRE(naive::from(sigma(f)) == naive::sigma(naive::from(f)));
        REQUIRE(is_invariant(f + sigma(f)));
    }
}

TEST_CASE("transfer examples")
{
    CHECK(transfer(Subset::parse("1")) == Poly::x(1, 1));
    CHECK(transfer(Subset::parse("11")).to_string() == "x1*y2 + x2*y1 + x1*x2");
    CHECK(transfer(Subset::parse("000")).is_zero());
    auto sum = transfer(Subset::parse("11")) + Poly::parse(2, "y1*y2") +
               (Poly::y(2, 1) + Poly::x(2, 1)) * (Poly::y(2, 2) + Poly::x(2, 2));
    CHECK(sum.is_zero());
    CHECK(lead_term(transfer(Subset::parse("11"))).to_string() == "x1*y2");
    CHECK(lead_term(transfer(Subset::parse("011"))).to_string() == "x2*y3");
}

TEST_CASE("transfer matches the expansion and the leading-term formula for every A, m <= 4")
{
    for (std::size_t m = 1; m <= 4; ++m)
        for (std::uint32_t v = 1; v < (1u << m); ++v) {
            auto a = Subset::from_bits(m, v);
            auto tr = transfer(a);
            REQUIRE(tr == transfer_by_expansion(a));
            REQUIRE(naive::from(tr) == naive::transfer(a));
            REQUIRE(is_invariant(tr));
            auto lt = Monomial::x(m, a.leading()) * Monomial::y_pow(a.without_leading());
            REQUIRE(lead_term(tr) == lt);
            REQUIRE(tr.size() == (std::size_t{1} << a.size()) - 1);
        }
}

TEST_CASE("nbar powers")
{
    CHECK(nbar_pow(Subset::parse("1")) == Poly::parse(1, "y1 + x1"));
    CHECK(nbar_pow(1, {2}) == Poly::parse(1, "y1^2 + x1^2"));
    CHECK(nbar_pow(Subset::parse("11")) + Poly::parse(2, "y1*y2") == transfer(Subset::parse("11")));
    CHECK(nbar_pow(Subset::parse("1")) * Poly::y(1, 1) == norm(1, 1));
}

TEST_CASE("generator sets")
{
    CHECK_THROWS_AS(generator_set(0), EmptyError);
    auto g1 = generator_set(1);
    CHECK(g1.count() == 2);
    CHECK(g1.traces.empty());
    auto g2 = generator_set(2);
    CHECK(g2.count() == 5);
    std::vector<std::string> names;
    for (const auto& n : g2.named())
        names.push_back(n.name);
    CHECK(names == std::vector<std::string>{"x1", "x2", "N1", "N2", "tr_11"});
    CHECK(generator_set(3).count() == 10);
    for (std::size_t m = 1; m <= 6; ++m) {
        auto g = generator_set(m);
        CHECK(g.count() == (std::size_t{1} << m) + m - 1);
        for (const auto& n : g.named())
            CHECK(is_invariant(n.poly));
    }
    auto j = to_json(g2);
    CHECK(j["schema"] == 1);
    CHECK(j["tr_11"] == "x1*y2 + x2*y1 + x1*x2");
}

TEST_CASE("closed-form generator count")
{
    CHECK(count_minimal_generators(2, 3) == 10);
    CHECK(count_minimal_generators(2, 1) == 2);
    for (unsigned m = 1; m <= 16; ++m)
        CHECK(count_minimal_generators(2, m) == BigInt(1) * ((1u << m) + m - 1));
    CHECK_THROWS_AS(count_minimal_generators(4, 2), PreconditionError);
    CHECK(binomial(5, 3) == 10);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(60, 30) == BigInt("118264581564861424"));
}

}
