#pragma once

// Deliberately slow reference arithmetic used to cross-check the library.

#include <random>
#include <set>
#include <vector>

#include "c2inv/poly.hpp"
#include "c2inv/qring.hpp"

namespace naive {

using Exps = std::vector<unsigned>;  // y1, x1, y2, x2, ...

struct Poly {
    std::size_t m = 0;
    std::set<Exps> terms;

    explicit Poly(std::size_t m_ = 0) : m(m_) {}

    static Poly one(std::size_t m)
    {
        Poly p(m);
        p.terms.insert(Exps(2 * m, 0));
        return p;
    }
    static Poly var(std::size_t m, std::size_t slot)
    {
        Poly p(m);
        Exps e(2 * m, 0);
        e[slot] = 1;
        p.terms.insert(e);
        return p;
    }
    static Poly x(std::size_t m, std::size_t i) { return var(m, 2 * (i - 1) + 1); }
    static Poly y(std::size_t m, std::size_t i) { return var(m, 2 * (i - 1)); }

    void toggle(const Exps& e)
    {
        if (!terms.erase(e))
            terms.insert(e);
    }
    Poly operator+(const Poly& o) const
    {
        Poly r = *this;
        for (const auto& e : o.terms)
            r.toggle(e);
        return r;
    }
    Poly operator*(const Poly& o) const
    {
        Poly r(m);
        for (const auto& a : terms)
            for (const auto& b : o.terms) {
                Exps e(2 * m);
                for (std::size_t k = 0; k < e.size(); ++k)
                    e[k] = a[k] + b[k];
                r.toggle(e);
            }
        return r;
    }
    bool operator==(const Poly&) const = default;
};

inline Poly from(const c2inv::Poly& f)
{
    Poly p(f.m());
    for (const auto& mono : f.terms())
        p.terms.insert(Exps(mono.exps().begin(), mono.exps().end()));
    return p;
}

// sigma by substituting y_i -> y_i + x_i and multiplying out factor by factor.
inline Poly sigma(const Poly& f)
{
    Poly r(f.m);
    for (const auto& e : f.terms) {
        Poly t = Poly::one(f.m);
        for (std::size_t i = 1; i <= f.m; ++i) {
            for (unsigned k = 0; k < e[2 * (i - 1) + 1]; ++k)
                t = t * Poly::x(f.m, i);
            for (unsigned k = 0; k < e[2 * (i - 1)]; ++k)
                t = t * (Poly::y(f.m, i) + Poly::x(f.m, i));
        }
        r = r + t;
    }
    return r;
}

inline Poly y_pow(const c2inv::Subset& a)
{
    Poly t = Poly::one(a.m());
    for (auto i : a.positions())
        t = t * Poly::y(a.m(), i);
    return t;
}

inline Poly transfer(const c2inv::Subset& a) { return y_pow(a) + sigma(y_pow(a)); }

inline Poly norm(std::size_t m, std::size_t i) { return Poly::y(m, i) * (Poly::y(m, i) + Poly::x(m, i)); }

inline Poly pi(const c2inv::QPoly& q)
{
    const std::size_t m = q.m();
    Poly r(m);
    for (const auto& t : q.terms()) {
        Poly p = Poly::one(m);
        for (std::size_t i = 1; i <= m; ++i) {
            for (unsigned k = 0; k < t.x_exps()[i - 1]; ++k)
                p = p * Poly::x(m, i);
            for (unsigned k = 0; k < t.n_exps()[i - 1]; ++k)
                p = p * norm(m, i);
        }
        for (const auto& a : t.traces())
            p = p * naive::transfer(a);
        r = r + p;
    }
    return r;
}

// Grevlex read straight off the definition: higher degree wins, otherwise the
// rightmost nonzero entry of a - b being negative means a > b.
inline int grevlex(const Exps& a, const Exps& b)
{
    long da = 0, db = 0;
    for (auto v : a)
        da += v;
    for (auto v : b)
        db += v;
    if (da != db)
        return da > db ? 1 : -1;
    for (std::size_t k = a.size(); k-- > 0;) {
        long diff = long(a[k]) - long(b[k]);
        if (diff != 0)
            return diff < 0 ? 1 : -1;
    }
    return 0;
}

}  // namespace naive

namespace gen {

inline c2inv::Monomial monomial(std::mt19937& rng, std::size_t m, unsigned max_exp)
{
    std::uniform_int_distribution<unsigned> d(0, max_exp);
    std::vector<c2inv::Exponent> e(2 * m);
    for (auto& v : e)
        v = d(rng);
    return c2inv::Monomial(m, e);
}

inline c2inv::Poly poly(std::mt19937& rng, std::size_t m, std::size_t max_terms, unsigned max_exp)
{
    std::uniform_int_distribution<std::size_t> n(0, max_terms);
    std::vector<c2inv::Monomial> ts;
    for (std::size_t k = n(rng); k > 0; --k)
        ts.push_back(monomial(rng, m, max_exp));
    return c2inv::Poly::from_terms(m, ts);
}

inline c2inv::Subset subset_at_least(std::mt19937& rng, std::size_t m, std::size_t min_size)
{
    auto all = c2inv::subsets_of_size_at_least(m, min_size);
    std::uniform_int_distribution<std::size_t> d(0, all.size() - 1);
    return all[d(rng)];
}

inline c2inv::QMonomial r_monomial(std::mt19937& rng, std::size_t m, unsigned max_exp)
{
    std::uniform_int_distribution<unsigned> d(0, max_exp);
    std::vector<c2inv::Exponent> xs(m), ns(m);
    for (auto& v : xs)
        v = d(rng);
    for (auto& v : ns)
        v = d(rng) / 2;
    return c2inv::QMonomial(m, xs, ns, {});
}

// Random Q-element whose terms carry at most max_tr_degree worth of traces.
inline c2inv::QPoly qpoly(std::mt19937& rng, std::size_t m, std::size_t max_terms, std::size_t max_tr_degree)
{
    std::uniform_int_distribution<std::size_t> n(1, max_terms);
    std::vector<c2inv::QMonomial> ts;
    for (std::size_t k = n(rng); k > 0; --k) {
        std::vector<c2inv::Subset> trs;
        std::size_t budget = std::uniform_int_distribution<std::size_t>(0, max_tr_degree)(rng);
        while (budget >= 2) {
            auto a = subset_at_least(rng, m, 2);
            if (a.size() > budget)
                break;
            budget -= a.size();
            trs.push_back(a);
        }
        auto r = r_monomial(rng, m, 1);
        ts.emplace_back(m, r.x_exps(), r.n_exps(), trs);
    }
    return c2inv::QPoly::from_terms(m, ts);
}

}  // namespace gen
