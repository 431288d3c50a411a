#include "c2inv/poly.hpp"

#include <algorithm>
#include <numeric>

#include "c2inv/error.hpp"
#include "text.hpp"

namespace c2inv {

Monomial::Monomial(std::size_t m) : m_(m), exps_(2 * m, 0) {}

Monomial::Monomial(std::size_t m, std::vector<Exponent> exps) : m_(m), exps_(std::move(exps))
{
    if (exps_.size() != 2 * m)
        throw PreconditionError("monomial needs exactly 2m=" + std::to_string(2 * m) + " exponents, got " +
                                std::to_string(exps_.size()));
}

Monomial Monomial::x(std::size_t m, std::size_t i, Exponent power)
{
    if (i < 1 || i > m)
        throw PreconditionError("x index out of range");
    Monomial out(m);
    out.exps_[2 * (i - 1) + 1] = power;
    return out;
}

Monomial Monomial::y(std::size_t m, std::size_t i, Exponent power)
{
    if (i < 1 || i > m)
        throw PreconditionError("y index out of range");
    Monomial out(m);
    out.exps_[2 * (i - 1)] = power;
    return out;
}

Monomial Monomial::x_pow(const Subset& a)
{
    Monomial out(a.m());
    for (std::size_t i : a.positions())
        out.exps_[2 * (i - 1) + 1] = 1;
    return out;
}

Monomial Monomial::y_pow(const Subset& a)
{
    Monomial out(a.m());
    for (std::size_t i : a.positions())
        out.exps_[2 * (i - 1)] = 1;
    return out;
}

std::uint64_t Monomial::degree() const { return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0}); }

bool Monomial::is_one() const
{
    return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

Monomial& Monomial::operator*=(const Monomial& other)
{
    check_same_m(m_, other.m_);
    for (std::size_t k = 0; k < exps_.size(); ++k)
        exps_[k] += other.exps_[k];
    return *this;
}

Monomial Monomial::operator*(const Monomial& other) const
{
    Monomial out = *this;
    out *= other;
    return out;
}

std::string Monomial::to_string() const
{
    std::string out;
    // Printed x-block first, then y-block, each by increasing index: "x1^2*y3".
    auto emit = [&](char name, std::size_t i, Exponent e) {
        if (e == 0)
            return;
        if (!out.empty())
            out += '*';
        out += name;
        out += std::to_string(i);
        if (e != 1)
            out += '^' + std::to_string(e);
    };
    for (std::size_t i = 1; i <= m_; ++i)
        emit('x', i, x_exp(i));
    for (std::size_t i = 1; i <= m_; ++i)
        emit('y', i, y_exp(i));
    return out.empty() ? "1" : out;
}

std::strong_ordering compare_monomials(const Monomial& a, const Monomial& b)
{
    check_same_m(a.m(), b.m());
    if (auto c = a.degree() <=> b.degree(); c != 0)
        return c;
    const auto& ea = a.exps();
    const auto& eb = b.exps();
    for (std::size_t k = ea.size(); k-- > 0;) {
        if (ea[k] != eb[k])
            return ea[k] < eb[k] ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
}

std::size_t MonomialHash::operator()(const Monomial& mono) const noexcept
{
    std::size_t h = mono.m();
    for (Exponent e : mono.exps())
        h = h * 1000003u ^ e;
    return h;
}

namespace {

bool grevlex_greater(const Monomial& a, const Monomial& b) { return compare_monomials(a, b) > 0; }

// Sorts decreasing and removes monomials occurring an even number of times.
std::vector<Monomial> canonicalize(std::vector<Monomial> terms)
{
    std::sort(terms.begin(), terms.end(), grevlex_greater);
    std::vector<Monomial> out;
    out.reserve(terms.size());
    for (std::size_t i = 0; i < terms.size();) {
        std::size_t j = i + 1;
        while (j < terms.size() && terms[j] == terms[i])
            ++j;
        if ((j - i) % 2 == 1)
            out.push_back(std::move(terms[i]));
        i = j;
    }
    return out;
}

}  // namespace

Poly::Poly(std::size_t m) : m_(m) {}

Poly::Poly(const Monomial& mono) : m_(mono.m()), terms_{mono} {}

Poly Poly::from_terms(std::size_t m, std::vector<Monomial> terms)
{
    for (const auto& t : terms)
        check_same_m(m, t.m());
    Poly out(m);
    out.terms_ = canonicalize(std::move(terms));
    return out;
}

bool Poly::contains(const Monomial& mono) const
{
    return std::binary_search(terms_.begin(), terms_.end(), mono, grevlex_greater);
}

const Monomial& Poly::lead_term() const
{
    if (terms_.empty())
        throw EmptyError("lead term of the zero polynomial");
    return terms_.front();
}

Poly& Poly::operator+=(const Poly& other)
{
    check_same_m(m_, other.m_);
    std::vector<Monomial> merged;
    merged.reserve(terms_.size() + other.terms_.size());
    auto a = terms_.begin();
    auto b = other.terms_.begin();
    while (a != terms_.end() && b != other.terms_.end()) {
        auto c = compare_monomials(*a, *b);
        if (c > 0)
            merged.push_back(std::move(*a++));
        else if (c < 0)
            merged.push_back(*b++);
        else {
            ++a;
            ++b;
        }
    }
    std::move(a, terms_.end(), std::back_inserter(merged));
    std::copy(b, other.terms_.end(), std::back_inserter(merged));
    terms_ = std::move(merged);
    return *this;
}

Poly operator+(const Poly& f, const Poly& g)
{
    Poly out = f;
    out += g;
    return out;
}

Poly operator*(const Poly& f, const Poly& g)
{
    check_same_m(f.m_, g.m_);
    std::vector<Monomial> products;
    products.reserve(f.size() * g.size());
    for (const auto& a : f.terms_)
        for (const auto& b : g.terms_)
            products.push_back(a * b);
    return Poly::from_terms(f.m_, std::move(products));
}

Poly operator*(const Poly& f, const Monomial& mono)
{
    check_same_m(f.m_, mono.m());
    // Multiplying by a monomial is injective and preserves grevlex order.
    Poly out = f;
    for (auto& t : out.terms_)
        t *= mono;
    return out;
}

Poly& Poly::operator*=(const Poly& other)
{
    *this = *this * other;
    return *this;
}

Poly Poly::pow(unsigned exponent) const
{
    Poly result = one(m_);
    Poly base = *this;
    while (exponent != 0) {
        if (exponent & 1u)
            result *= base;
        exponent >>= 1;
        if (exponent != 0)
            base *= base;
    }
    return result;
}

std::string Poly::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    for (const auto& t : terms_) {
        if (!out.empty())
            out += " + ";
        out += t.to_string();
    }
    return out;
}

Poly Poly::parse(std::size_t m, std::string_view input)
{
    std::string_view body = text::trim(input);
    if (body.empty())
        throw ParseError("empty polynomial text");
    if (body == "0")
        return Poly(m);
    std::vector<Monomial> terms;
    for (auto term : text::split(body, '+')) {
        if (term.empty())
            throw ParseError("empty term in '" + std::string(input) + "'");
        std::vector<Exponent> exps(2 * m, 0);
        for (auto factor : text::split(term, '*')) {
            auto [base, power] = text::split_power(factor);
            if (base == "1")
                continue;
            if (base.size() < 2 || (base[0] != 'x' && base[0] != 'y'))
                throw ParseError("unknown factor '" + std::string(factor) + "'");
            std::size_t i = text::parse_index(base, 1, m);
            exps[2 * (i - 1) + (base[0] == 'x' ? 1 : 0)] += static_cast<Exponent>(power);
        }
        terms.emplace_back(m, std::move(exps));
    }
    return Poly::from_terms(m, std::move(terms));
}

}  // namespace c2inv
