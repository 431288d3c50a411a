#include <doctest.h>

#include <algorithm>
#include <random>

#include "c2inv/error.hpp"
#include "c2inv/oracle.hpp"
#include "c2inv/poly.hpp"
#include "naive.hpp"

using namespace c2inv;

TEST_SUITE("poly") {

TEST_CASE("subset arithmetic")
{
    auto a = Subset::parse("110");
    auto b = Subset::parse("011");
    CHECK((a & b).to_string() == "010");
    CHECK((a - b).to_string() == "100");
    CHECK((b - a).to_string() == "001");
    CHECK((a | b).to_string() == "111");
    CHECK(b.leading() == 2);
    CHECK(b.without_leading().to_string() == "001");
    CHECK(Subset::parse("101").subset_of(Subset::parse("111")));
    CHECK_FALSE(Subset::parse("111").subset_of(Subset::parse("101")));
    CHECK(a.size() == 2);
    CHECK(Subset::parse("110").value() == 6);
    CHECK(Subset::delta(3, 1).to_string() == "100");
    CHECK(Subset::full(4).to_string() == "1111");
    CHECK((Subset::parse("100") + Subset::parse("001")).to_string() == "101");
}

TEST_CASE("subset errors")
{
    CHECK_THROWS_AS(Subset::parse("000").leading(), EmptyError);
    CHECK_THROWS_AS(Subset::parse("000").without_leading(), EmptyError);
    CHECK_THROWS_AS(Subset::parse("1a0"), ParseError);
    CHECK_THROWS_AS(Subset::parse(3, "11"), ParseError);
    CHECK_THROWS_AS(Subset::parse("110") + Subset::parse("011"), PreconditionError);
    CHECK_THROWS_AS(Subset::parse("11") & Subset::parse("110"), DimensionError);
}

TEST_CASE("proper subsets enumerate L < A")
{
    auto a = Subset::parse("1011");
    auto subs = a.proper_subsets();
    CHECK(subs.size() == 7);
    CHECK(subs.front().value() == 0);
    for (const auto& l : subs) {
        CHECK(l.subset_of(a));
        CHECK(l != a);
    }
    CHECK(std::is_sorted(subs.begin(), subs.end()));
    CHECK(Subset(3).proper_subsets().empty());
}

TEST_CASE("grevlex examples")
{
    auto lhs = Monomial::x(2, 1) * Monomial::y(2, 2);
    auto rhs = Monomial::y(2, 1) * Monomial::x(2, 2);
    CHECK(compare_monomials(lhs, rhs) == std::strong_ordering::greater);
    CHECK(compare_monomials(Monomial::y(1, 1), Monomial::x(1, 1)) == std::strong_ordering::greater);
    CHECK(compare_monomials(lhs, lhs) == std::strong_ordering::equal);
    CHECK(compare_monomials(Monomial::x(2, 1, 2), Monomial::y(2, 1)) == std::strong_ordering::greater);
    CHECK_THROWS_AS(compare_monomials(Monomial(1), Monomial(2)), DimensionError);
}

TEST_CASE("grevlex is a total order matching the definition (m = 2, degree <= 4)")
{
    std::vector<Monomial> all;
    for (std::size_t d = 0; d <= 4; ++d)
        for (auto& mono : monomials_of_degree(2, d))
            all.push_back(mono);
    CHECK(all.size() == 1 + 4 + 10 + 20 + 35);
    for (const auto& a : all)
        for (const auto& b : all) {
            int want = naive::grevlex({a.exps().begin(), a.exps().end()}, {b.exps().begin(), b.exps().end()});
            auto got = compare_monomials(a, b);
            CHECK(got == (want > 0 ? std::strong_ordering::greater
                                   : want < 0 ? std::strong_ordering::less : std::strong_ordering::equal));
            CHECK((got == std::strong_ordering::equal) == (a == b));
        }
    // transitivity: sorting with the comparator yields a chain consistent pairwise
    auto sorted = all;
    std::sort(sorted.begin(), sorted.end(),
              [](const Monomial& a, const Monomial& b) { return compare_monomials(a, b) < 0; });
    for (std::size_t i = 0; i < sorted.size(); ++i)
        for (std::size_t j = i + 1; j < sorted.size(); ++j)
            CHECK(compare_monomials(sorted[i], sorted[j]) < 0);
}

TEST_CASE("addition and multiplication examples")
{
    const auto x1 = Poly::x(1, 1), y1 = Poly::y(1, 1);
    CHECK((x1 + y1) + y1 == x1);
    CHECK(x1 + Poly(1) == x1);
    CHECK((x1 * x1).to_string() == "x1^2");
    CHECK(((y1 + x1) * (y1 + x1)).to_string() == "y1^2 + x1^2");
    CHECK((y1 + x1) * y1 == Poly::parse(1, "y1^2 + x1*y1"));
    CHECK(Poly::parse(2, "x1*y2 + x2*y1 + x1*x2").lead_term().to_string() == "x1*y2");
    CHECK(lead_term(x1).to_string() == "x1");
    CHECK_THROWS_AS(lead_term(Poly(2)), EmptyError);
    CHECK_THROWS_AS(Poly::x(1, 1) + Poly::x(2, 1), DimensionError);
    CHECK(Poly(3).to_string() == "0");
    CHECK(Poly::one(2).to_string() == "1");
}

TEST_CASE("terms are strictly decreasing")
{
    std::mt19937 rng(11);
    for (int t = 0; t < 200; ++t) {
        auto f = gen::poly(rng, 3, 12, 3);
        for (std::size_t k = 1; k < f.size(); ++k)
            CHECK(compare_monomials(f.terms()[k - 1], f.terms()[k]) > 0);
    }
}

TEST_CASE("ring laws on random triples")
{
    std::mt19937 rng(20240601);
    for (int t = 0; t < 10000; ++t) {
        const std::size_t m = 1 + t % 3;
        auto f = gen::poly(rng, m, 4, 2);
        auto g = gen::poly(rng, m, 4, 2);
        auto h = gen::poly(rng, m, 4, 2);
        REQUIRE(f + g == g + f);
        REQUIRE(f * g == g * f);
        REQUIRE((f + g) + h == f + (g + h));
        REQUIRE((f * g) * h == f * (g * h));
        REQUIRE(f * (g + h) == f * g + f * h);
        REQUIRE((f + f).is_zero());
        REQUIRE(f * Poly::one(m) == f);
        if (t % 10 == 0)
            REQUIRE(naive::from(f * g) == naive::from(f) * naive::from(g));
        // Frobenius
        REQUIRE((f + g).pow(2) == f.pow(2) + g.pow(2));
    }
}

TEST_CASE("print and parse round trip")
{
    std::mt19937 rng(5);
    for (int t = 0; t < 500; ++t) {
        const std::size_t m = 1 + t % 4;
        auto f = gen::poly(rng, m, 6, 3);
        CHECK(Poly::parse(m, f.to_string()) == f);
    }
    CHECK(Poly::parse(2, "x1 + x1") == Poly(2));
    CHECK_THROWS_AS(Poly::parse(2, "x3"), ParseError);
    CHECK_THROWS_AS(Poly::parse(2, "x1 +"), ParseError);
    CHECK_THROWS_AS(Poly::parse(2, "z1"), ParseError);
}

}
