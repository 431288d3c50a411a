#include "c2inv/invariants.hpp"

#include "c2inv/error.hpp"

namespace c2inv {

namespace {

// Expands x^b (y + x)^a over F_2 for one summand; Lucas: C(a, k) is odd iff k is a submask of a.
void expand_summand(const Monomial& mono, std::size_t i, std::vector<Exponent>& exps, std::vector<Monomial>& out)
{
    std::size_t m = mono.m();
    if (i > m) {
        out.emplace_back(m, exps);
        return;
    }
    Exponent a = mono.y_exp(i);
    Exponent b = mono.x_exp(i);
    Exponent k = a;
    while (true) {
        exps[2 * (i - 1)] = k;
        exps[2 * (i - 1) + 1] = b + (a - k);
        expand_summand(mono, i + 1, exps, out);
        if (k == 0)
            break;
        k = (k - 1) & a;
    }
}

}  // namespace

Poly sigma(const Poly& f)
{
    std::vector<Monomial> images;
    std::vector<Exponent> scratch(2 * f.m(), 0);
    for (const auto& t : f.terms())
        expand_summand(t, 1, scratch, images);
    return Poly::from_terms(f.m(), std::move(images));
}

bool is_invariant(const Poly& f) { return sigma(f) == f; }

Poly transfer(const Subset& a)
{
    Poly ya(Monomial::y_pow(a));
    return ya + sigma(ya);
}

Poly transfer_by_expansion(const Subset& a)
{
    std::vector<Monomial> terms;
    for (const auto& l : a.proper_subsets())
        terms.push_back(Monomial::x_pow(a - l) * Monomial::y_pow(l));
    return Poly::from_terms(a.m(), std::move(terms));
}

Poly nbar_pow(std::size_t m, const std::vector<Exponent>& exps)
{
    if (exps.size() != m)
        throw PreconditionError("Nbar exponent sequence must have length m");
    Poly out = Poly::one(m);
    for (std::size_t i = 1; i <= m; ++i) {
        if (exps[i - 1] == 0)
            continue;
        out *= (Poly::y(m, i) + Poly::x(m, i)).pow(exps[i - 1]);
    }
    return out;
}

Poly nbar_pow(const Subset& a)
{
    std::vector<Exponent> exps(a.m(), 0);
    for (std::size_t i : a.positions())
        exps[i - 1] = 1;
    return nbar_pow(a.m(), exps);
}

Poly norm(std::size_t m, std::size_t i)
{
    return Poly(Monomial::y(m, i, 2)) + Poly(Monomial::x(m, i) * Monomial::y(m, i));
}

std::vector<NamedGenerator> GeneratorSet::named() const
{
    std::vector<NamedGenerator> out;
    for (std::size_t i = 0; i < xs.size(); ++i)
        out.push_back({"x" + std::to_string(i + 1), xs[i], 1});
    for (std::size_t i = 0; i < norms.size(); ++i)
        out.push_back({"N" + std::to_string(i + 1), norms[i], 2});
    for (const auto& [a, poly] : traces)
        out.push_back({"tr_" + a.to_string(), poly, a.size()});
    return out;
}

GeneratorSet generator_set(std::size_t m)
{
    if (m == 0)
        throw EmptyError("generator_set needs m >= 1");
    GeneratorSet gens;
    gens.m = m;
    for (std::size_t i = 1; i <= m; ++i) {
        gens.xs.push_back(Poly::x(m, i));
        gens.norms.push_back(norm(m, i));
    }
    for (const auto& a : subsets_of_size_at_least(m, 2))
        gens.traces.emplace_back(a, transfer(a));
    return gens;
}

nlohmann::ordered_json to_json(const GeneratorSet& gens)
{
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["m"] = gens.m;
    for (const auto& g : gens.named())
        j[g.name] = g.poly.to_string();
    return j;
}

BigInt binomial(long long n, long long k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    BigInt out = 1;
    for (long long i = 1; i <= k; ++i) {
        out *= n - k + i;
        out /= i;
    }
    return out;
}

BigInt count_minimal_generators(unsigned p, unsigned m)
{
    if (p < 2)
        throw PreconditionError("p must be prime");
    for (unsigned d = 2; d * d <= p; ++d)
        if (p % d == 0)
            throw PreconditionError("p=" + std::to_string(p) + " is not prime");
    if (m == 0)
        throw PreconditionError("m must be at least 1");
    BigInt pm = boost::multiprecision::pow(BigInt(p), m);
    long long mm = m, pp = p;
    return pm - binomial(mm + 2 * pp - 2, mm) + BigInt(mm) * binomial(mm + pp - 2, mm) + binomial(mm, 2) +
           BigInt(2 * mm);
}

}  // namespace c2inv
