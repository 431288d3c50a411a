#include <doctest.h>

#include "c2inv/error.hpp"
#include "c2inv/oracle.hpp"
#include "c2inv/relations.hpp"

using namespace c2inv;

namespace {

// Coefficient of t^d in prod over generators of 1 / (1 - t^deg).
std::size_t q_dimension(std::size_t m, std::size_t d)
{
    std::vector<std::size_t> degs;
    for (std::size_t i = 0; i < m; ++i) {
        degs.push_back(1);
        degs.push_back(2);
    }
    for (const auto& a : subsets_of_size_at_least(m, 2))
        degs.push_back(a.size());
    std::vector<std::size_t> coeff(d + 1, 0);
    coeff[0] = 1;
    for (auto g : degs)
        for (std::size_t k = g; k <= d; ++k)
            coeff[k] += coeff[k - g];
    return coeff[d];
}

std::vector<Relation> without(std::vector<Relation> rels, std::size_t k)
{
    rels.erase(rels.begin() + static_cast<std::ptrdiff_t>(k));
    return rels;
}

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("graded bases have the expected sizes")
{
    for (std::size_t m = 1; m <= 3; ++m)
        for (std::size_t d = 0; d <= 6; ++d) {
            CHECK(q_monomials_of_degree(m, d).size() == q_dimension(m, d));
            CHECK(BigInt(monomials_of_degree(m, d).size()) == binomial(long(d + 2 * m - 1), long(2 * m - 1)));
        }
}

TEST_CASE("pi matrix: serial and parallel agree")
{
    auto basis = GradedBasis::build(3, 5);
    PiEvaluator pi(3);
    CHECK(pi_matrix(basis, pi, Exec::serial) == pi_matrix(basis, pi, Exec::parallel));
}

TEST_CASE("image of pi is the whole invariant subspace")
{
    for (std::size_t m = 1; m <= 3; ++m)
        for (std::size_t d = 0; d <= 2 * m + 1; ++d)
            CHECK(pi_rank(m, d) == invariant_subspace_dim(m, d));
    CHECK(invariant_subspace_dim(1, 2) == 2);
    CHECK(invariant_subspace_dim(2, 2) == 6);
    CHECK(invariant_subspace_dim(4, 0) == 1);
}

TEST_CASE("kernel bases")
{
    CHECK(kernel_basis(2, 3).empty());
    for (std::size_t d = 0; d <= 6; ++d)
        CHECK(kernel_dim(1, d) == 0);
    auto k3 = kernel_basis(3, 3);
    CHECK(k3.size() >= 1);
    for (const auto& v : kernel_basis(3, 4))
        CHECK(pi_eval(v).is_zero());
    CHECK(kernel_dim(3, 4) == kernel_basis(3, 4).size());
    const auto t1 = type_I(Subset::parse("111"));
    auto basis = relation_basis(3, Flavor::III);
    CHECK(span_contains(basis, 3, 3, t1.element));
    CHECK_FALSE(span_contains(basis, 3, 3, QPoly::tr(Subset::parse("111"))));
    for (std::size_t d = 3; d <= 6; ++d)
        for (const auto& v : kernel_basis(3, d))
            CHECK(span_contains(basis, 3, d, v));
}

TEST_CASE("size guard refuses large matrices")
{
    OracleOptions tiny;
    tiny.budget = 50;
    CHECK_THROWS_AS(kernel_basis(3, 6, tiny), BudgetExceeded);
    CHECK_THROWS_AS(verify_second_main(3, 6, Flavor::III, tiny), BudgetExceeded);
    try {
        check_budget(100, 100, tiny);
        FAIL("no refusal");
    } catch (const BudgetExceeded& e) {
        CHECK(std::string(e.what()).find("10000") != std::string::npos);
    }
}

TEST_CASE("second main theorem at m = 2 and m = 3")
{
    auto r2 = verify_second_main(2, 4, Flavor::III);
    CHECK(r2.passed());
    CHECK(r2.relation_count == 1);
    CHECK(r2.max_degree() == 4);
    for (auto flavor : {Flavor::II, Flavor::III}) {
        auto r3 = verify_second_main(3, 6, flavor);
        CHECK(r3.passed());
        CHECK(r3.relation_count == 11);
        CHECK(r3.max_degree() == 6);
    }
    auto r3 = verify_second_main(3, 6, Flavor::III);
    CHECK(r3.summary() == "PASS: generation + minimality, 11 relations, max degree 6");
    CHECK(r3.to_json()["schema"] == 1);
}

TEST_CASE("serial and parallel verification agree")
{
    OracleOptions serial;
    serial.exec = Exec::serial;
    auto a = verify_second_main(3, 6, Flavor::II, serial);
    auto b = verify_second_main(3, 6, Flavor::II);
    CHECK(a.table() == b.table());
    CHECK(a.to_json() == b.to_json());
}

TEST_CASE("dropping a relation is detected")
{
    auto basis = relation_basis(3, Flavor::III);
    auto r = verify_relations(3, 6, without(basis, 0), "no type I");
    CHECK_FALSE(r.generation());
    CHECK(r.first_generation_failure() == 3u);
    CHECK(r.summary().rfind("FAIL", 0) == 0);
    CHECK(r.degrees[3].counterexample.has_value());

    auto dup = basis;
    dup.push_back(basis[1]);
    CHECK_FALSE(verify_relations(3, 6, dup, "duplicate").minimality());

    // the type II relation for the same pair is redundant next to the type III one
    auto extra = basis;
    extra.push_back(type_II(Subset::parse("110"), Subset::parse("011")));
    auto rep = verify_relations(3, 6, extra, "both flavors");
    CHECK(rep.generation());
    CHECK_FALSE(rep.minimality());

    Relation bogus = basis[0];
    bogus.element = QPoly::tr(Subset::parse("111"));
    auto bad = basis;
    bad.push_back(bogus);
    CHECK_FALSE(verify_relations(3, 6, bad, "bogus").in_kernel());
}

TEST_CASE("degree of the largest minimal relation")
{
    CHECK(max_relation_degree(2) == 4u);
    CHECK(max_relation_degree(3) == 6u);
    CHECK(max_relation_degree(1) == std::nullopt);
    auto p3 = minimal_generator_profile(3, 7);
    // one type I relation in degree 3, then one per pair of traces in degree |A| + |B|
    std::vector<std::size_t> want(8, 0);
    want[3] = 1;
    auto traces = subsets_of_size_at_least(3, 2);
    for (std::size_t i = 0; i < traces.size(); ++i)
        for (std::size_t j = i; j < traces.size(); ++j)
            ++want[traces[i].size() + traces[j].size()];
    CHECK(p3.per_degree == want);
}

}
