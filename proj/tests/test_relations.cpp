#include <doctest.h>

#include <set>

#include "c2inv/error.hpp"
#include "c2inv/relations.hpp"

using namespace c2inv;

namespace {
Subset s(const char* bits) { return Subset::parse(bits); }
bool in_kernel(const Relation& r) { return pi_eval(r.element).is_zero(); }
}

TEST_SUITE("relations") {

TEST_CASE("type I")
{
    auto r = type_I(s("111"));
    CHECK(r.element.to_string() == "x3*Tr(110) + x2*Tr(101) + x1*Tr(011) + x1*x2*x3");
    CHECK(in_kernel(r));
    CHECK(r.degree() == 3);
    CHECK(r.id() == "I(111)");
    auto r4 = type_I(s("1101"));
    CHECK(r4.degree() == 3);
    CHECK(in_kernel(r4));
    CHECK_THROWS_AS(type_I(s("110")), PreconditionError);
}

TEST_CASE("type II")
{
    auto r = type_II(s("11"), s("11"));
    CHECK(r.element.to_string() == "Tr(11)*Tr(11) + x1*x2*Tr(11) + x2^2*N1 + x1^2*N2");
    CHECK(in_kernel(r));
    auto r2 = type_II(s("110"), s("011"));
    CHECK(r2.element == QPoly::parse(3, "Tr(110)*Tr(011) + x2*Tr(111) + x1*x3*N2"));
    CHECK(in_kernel(r2));
    CHECK(r2.degree() == 4);
    CHECK_THROWS_AS(type_II(s("100"), s("011")), PreconditionError);
}

TEST_CASE("type III cases")
{
    auto c = type_III(s("110"), s("011"));
    CHECK(c.family == Family::IIIc);
    CHECK(c.element == QPoly::parse(3, "Tr(110)*Tr(011) + x2*Tr(111) + N2*x1*x3"));
    CHECK(in_kernel(c));
    auto b = type_III(s("11"), s("11"));
    CHECK(b.family == Family::IIIb);
    CHECK(b.index == 1u);
    CHECK(b.element == type_II(s("11"), s("11")).element);
    auto a = type_III(s("1100"), s("0011"));
    CHECK(a.family == Family::IIIa);
    CHECK(a.index == 3u);
    CHECK(a.element.to_string() == "Tr(1100)*Tr(0011) + x4*Tr(1110) + x3*Tr(1101) + x3*x4*Tr(1100)");
    CHECK(a.id() == "IIIa(1100,0011;j=3)");
    CHECK(in_kernel(a));
    CHECK_THROWS_AS(type_III(s("1000"), s("0011")), PreconditionError);
    CHECK_THROWS_AS(type_III_with_index(s("1100"), s("0011"), 1), PreconditionError);
    CHECK_THROWS_AS(type_III_with_index(s("110"), s("011"), 2), PreconditionError);
}

TEST_CASE("every admissible relation instance lies in the kernel (m <= 3)")
{
    // the full m = 4 sweep lives in the acceptance run
    for (std::size_t m = 2; m <= 3; ++m) {
        auto subs = subsets_of_size_at_least(m, 2);
        for (const auto& a : subs) {
            if (a.size() >= 3)
                REQUIRE(in_kernel(type_I(a)));
            for (const auto& b : subs) {
                REQUIRE(in_kernel(type_II(a, b)));
                const bool nested = b.subset_of(a);
                if (a.disjoint(b)) {
                    for (auto j : b.positions())
                        REQUIRE(in_kernel(type_III_with_index(a, b, j)));
                } else if (nested) {
                    for (auto i : (a & b).positions())
                        REQUIRE(in_kernel(type_III_with_index(a, b, i)));
                } else if (!a.subset_of(b)) {
                    REQUIRE(in_kernel(type_III_with_index(a, b, std::nullopt)));
                }
            }
        }
    }
}

TEST_CASE("relations are homogeneous of degree |A| + |B|")
{
    auto subs = subsets_of_size_at_least(3, 2);
    for (const auto& a : subs)
        for (const auto& b : subs) {
            CHECK(q_degree(type_II(a, b).element) == a.size() + b.size());
            CHECK(q_degree(type_III(a, b).element) == a.size() + b.size());
        }
}

TEST_CASE("bases and counts")
{
    CHECK(relation_basis(1, Flavor::III).empty());
    CHECK(relation_basis(2, Flavor::II).size() == 1);
    auto b3 = relation_basis(3, Flavor::III);
    CHECK(b3.size() == 11);
    CHECK(b3.front().family == Family::I);
    CHECK(relation_basis(3, Flavor::I).size() == 1);
    CHECK(relation_basis(4, Flavor::II).size() == 71);
    CHECK(count_relations(2) == 1);
    CHECK(count_relations(3) == 11);
    CHECK(count_relations(4) == 71);
    for (std::size_t m = 2; m <= 7; ++m) {
        // traces number 2^m - m - 1; unordered pairs with repetition plus the type I count
        const long long t = (1LL << m) - m - 1;
        const long long type_i = t - (long long)(m * (m - 1) / 2);
        CHECK(count_relations(m) == type_i + t * (t + 1) / 2);
        if (m <= 5)
            CHECK(relation_basis(m, Flavor::III).size() == count_relations(m));
    }
    std::set<std::string> ids;
    for (const auto& r : relation_basis(4, Flavor::III))
        ids.insert(r.id());
    CHECK(ids.size() == 71);
}

TEST_CASE("orientation and flavors")
{
    CHECK(type_II_orientation(s("011"), s("111")) == std::pair{s("111"), s("011")});
    CHECK(type_II_orientation(s("011"), s("110")) == std::pair{s("110"), s("011")});
    CHECK(type_III_orientation(s("011"), s("111")) == std::pair{s("111"), s("011")});
    CHECK(parse_flavor("II") == Flavor::II);
    CHECK_THROWS_AS(parse_flavor("IV"), ParseError);
    auto j = type_III(s("110"), s("011")).to_json();
    CHECK(j["family"] == "IIIc");
}

}
