#include "c2inv/qring.hpp"

#include <algorithm>
#include <numeric>

#include "c2inv/error.hpp"
#include "c2inv/invariants.hpp"
#include "text.hpp"

namespace c2inv {

namespace {

bool trace_order(const Subset& a, const Subset& b) { return a.value() > b.value(); }

void check_trace(const Subset& a)
{
    if (a.size() < 2)
        throw PreconditionError("Q has no symbol Tr(" + a.to_string() + "); traces need |A| >= 2");
}

}  // namespace

QMonomial::QMonomial(std::size_t m) : m_(m), x_(m, 0), n_(m, 0) {}

QMonomial::QMonomial(std::size_t m, std::vector<Exponent> x_exps, std::vector<Exponent> n_exps,
                     std::vector<Subset> traces)
    : m_(m), x_(std::move(x_exps)), n_(std::move(n_exps)), tr_(std::move(traces))
{
    if (x_.size() != m || n_.size() != m)
        throw PreconditionError("Q-monomial exponent vectors must have length m");
    for (const auto& a : tr_) {
        check_same_m(m, a.m());
        check_trace(a);
    }
    std::sort(tr_.begin(), tr_.end(), trace_order);
}

QMonomial QMonomial::x(std::size_t m, std::size_t i, Exponent power)
{
    QMonomial out(m);
    if (i < 1 || i > m)
        throw PreconditionError("x index out of range");
    out.x_[i - 1] = power;
    return out;
}

QMonomial QMonomial::norm(std::size_t m, std::size_t i, Exponent power)
{
    QMonomial out(m);
    if (i < 1 || i > m)
        throw PreconditionError("N index out of range");
    out.n_[i - 1] = power;
    return out;
}

QMonomial QMonomial::x_pow(const Subset& a)
{
    QMonomial out(a.m());
    for (std::size_t i : a.positions())
        out.x_[i - 1] = 1;
    return out;
}

QMonomial QMonomial::norm_pow(const Subset& a)
{
    QMonomial out(a.m());
    for (std::size_t i : a.positions())
        out.n_[i - 1] = 1;
    return out;
}

QMonomial QMonomial::tr(const Subset& a)
{
    check_trace(a);
    QMonomial out(a.m());
    out.tr_.push_back(a);
    return out;
}

std::uint64_t QMonomial::degree() const
{
    std::uint64_t d = tr_degree();
    for (std::size_t i = 0; i < m_; ++i)
        d += x_[i] + 2 * static_cast<std::uint64_t>(n_[i]);
    return d;
}

std::uint64_t QMonomial::tr_degree() const
{
    std::uint64_t d = 0;
    for (const auto& a : tr_)
        d += a.size();
    return d;
}

std::uint64_t QMonomial::spread() const
{
    std::uint64_t s = 0;
    for (const auto& a : tr_)
        s += a.size() * a.size();
    return s;
}

QMonomial QMonomial::r_part() const
{
    QMonomial out = *this;
    out.tr_.clear();
    return out;
}

QMonomial QMonomial::without_traces(const std::vector<Subset>& drop) const
{
    QMonomial out = *this;
    for (const auto& a : drop) {
        auto it = std::find(out.tr_.begin(), out.tr_.end(), a);
        if (it == out.tr_.end())
            throw PreconditionError("trace factor Tr(" + a.to_string() + ") not present in " + to_string());
        out.tr_.erase(it);
    }
    return out;
}

bool QMonomial::divides(const QMonomial& other) const
{
    check_same_m(m_, other.m_);
    for (std::size_t i = 0; i < m_; ++i)
        if (x_[i] > other.x_[i] || n_[i] > other.n_[i])
            return false;
    // Both multisets are sorted the same way.
    return std::includes(other.tr_.begin(), other.tr_.end(), tr_.begin(), tr_.end(), trace_order);
}

QMonomial QMonomial::quotient(const QMonomial& divisor) const
{
    if (!divisor.divides(*this))
        throw PreconditionError(divisor.to_string() + " does not divide " + to_string());
    QMonomial out = without_traces(divisor.tr_);
    for (std::size_t i = 0; i < m_; ++i) {
        out.x_[i] -= divisor.x_[i];
        out.n_[i] -= divisor.n_[i];
    }
    return out;
}

QMonomial QMonomial::operator*(const QMonomial& other) const
{
    check_same_m(m_, other.m_);
    QMonomial out = *this;
    for (std::size_t i = 0; i < m_; ++i) {
        out.x_[i] += other.x_[i];
        out.n_[i] += other.n_[i];
    }
    std::vector<Subset> merged;
    merged.reserve(tr_.size() + other.tr_.size());
    std::merge(tr_.begin(), tr_.end(), other.tr_.begin(), other.tr_.end(), std::back_inserter(merged), trace_order);
    out.tr_ = std::move(merged);
    return out;
}

std::string QMonomial::to_string() const
{
    std::string out;
    auto emit = [&](const std::string& factor, Exponent e) {
        if (e == 0)
            return;
        if (!out.empty())
            out += '*';
        out += factor;
        if (e != 1)
            out += '^' + std::to_string(e);
    };
    for (std::size_t i = 0; i < m_; ++i)
        emit("x" + std::to_string(i + 1), x_[i]);
    for (std::size_t i = 0; i < m_; ++i)
        emit("N" + std::to_string(i + 1), n_[i]);
    for (const auto& a : tr_)
        emit("Tr(" + a.to_string() + ")", 1);
    return out.empty() ? "1" : out;
}

nlohmann::ordered_json QMonomial::to_json() const
{
    nlohmann::ordered_json j;
    j["x"] = x_;
    j["N"] = n_;
    auto traces = nlohmann::ordered_json::array();
    for (const auto& a : tr_)
        traces.push_back(a.to_string());
    j["Tr"] = traces;
    return j;
}

std::strong_ordering compare_qmonomials(const QMonomial& a, const QMonomial& b)
{
    check_same_m(a.m(), b.m());
    if (auto c = a.tr_degree() <=> b.tr_degree(); c != 0)
        return c;
    if (auto c = b.spread() <=> a.spread(); c != 0)
        return c;
    if (auto c = a.degree() <=> b.degree(); c != 0)
        return c;
    const auto& ta = a.traces();
    const auto& tb = b.traces();
    for (std::size_t k = 0; k < std::min(ta.size(), tb.size()); ++k)
        if (auto c = ta[k].value() <=> tb[k].value(); c != 0)
            return c;
    if (auto c = ta.size() <=> tb.size(); c != 0)
        return c;
    // Weighted grevlex on (x_1, N_1, ..., x_m, N_m); weighted R-degrees agree here.
    for (std::size_t i = a.m(); i-- > 0;) {
        if (a.n_exps()[i] != b.n_exps()[i])
            return a.n_exps()[i] < b.n_exps()[i] ? std::strong_ordering::greater : std::strong_ordering::less;
        if (a.x_exps()[i] != b.x_exps()[i])
            return a.x_exps()[i] < b.x_exps()[i] ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
}

std::size_t QMonomialHash::operator()(const QMonomial& mono) const noexcept
{
    std::size_t h = mono.m();
    for (Exponent e : mono.x_exps())
        h = h * 1000003u ^ e;
    for (Exponent e : mono.n_exps())
        h = h * 1000003u ^ e;
    for (const auto& a : mono.traces())
        h = h * 1000003u ^ (a.value() + 0x9e3779b9u);
    return h;
}

namespace {

bool q_greater(const QMonomial& a, const QMonomial& b) { return compare_qmonomials(a, b) > 0; }

std::vector<QMonomial> canonicalize(std::vector<QMonomial> terms)
{
    std::sort(terms.begin(), terms.end(), q_greater);
    std::vector<QMonomial> out;
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

QPoly::QPoly(std::size_t m) : m_(m) {}

QPoly::QPoly(const QMonomial& mono) : m_(mono.m()), terms_{mono} {}

QPoly QPoly::from_terms(std::size_t m, std::vector<QMonomial> terms)
{
    for (const auto& t : terms)
        check_same_m(m, t.m());
    QPoly out(m);
    out.terms_ = canonicalize(std::move(terms));
    return out;
}

QPoly QPoly::tr(const Subset& a)
{
    if (a.empty())
        return QPoly(a.m());
    if (a.size() == 1)
        return x_pow(a);
    return QPoly(QMonomial::tr(a));
}

bool QPoly::contains(const QMonomial& mono) const
{
    return std::binary_search(terms_.begin(), terms_.end(), mono, q_greater);
}

bool QPoly::is_tr_linear() const
{
    return std::all_of(terms_.begin(), terms_.end(), [](const QMonomial& t) { return t.tr_count() <= 1; });
}

QPoly& QPoly::operator+=(const QPoly& other)
{
    check_same_m(m_, other.m_);
    std::vector<QMonomial> merged;
    merged.reserve(terms_.size() + other.terms_.size());
    auto a = terms_.begin();
    auto b = other.terms_.begin();
    while (a != terms_.end() && b != other.terms_.end()) {
        auto c = compare_qmonomials(*a, *b);
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

QPoly operator+(const QPoly& f, const QPoly& g)
{
    QPoly out = f;
    out += g;
    return out;
}

QPoly operator*(const QPoly& f, const QPoly& g)
{
    check_same_m(f.m_, g.m_);
    std::vector<QMonomial> products;
    products.reserve(f.size() * g.size());
    for (const auto& a : f.terms_)
        for (const auto& b : g.terms_)
            products.push_back(a * b);
    return QPoly::from_terms(f.m_, std::move(products));
}

QPoly operator*(const QPoly& f, const QMonomial& mono)
{
    // Spread and tie-breaks can reorder terms under a monomial shift, so re-sort.
    check_same_m(f.m_, mono.m());
    std::vector<QMonomial> products;
    products.reserve(f.size());
    for (const auto& a : f.terms_)
        products.push_back(a * mono);
    return QPoly::from_terms(f.m_, std::move(products));
}

std::string QPoly::to_string() const
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

nlohmann::ordered_json QPoly::to_json() const
{
    nlohmann::ordered_json j;
    j["m"] = m_;
    j["text"] = to_string();
    auto terms = nlohmann::ordered_json::array();
    for (const auto& t : terms_)
        terms.push_back(t.to_json());
    j["terms"] = terms;
    return j;
}

QPoly QPoly::parse(std::size_t m, std::string_view input)
{
    std::string_view body = text::trim(input);
    if (body.empty())
        throw ParseError("empty Q-polynomial text");
    if (body == "0")
        return QPoly(m);
    std::vector<QMonomial> terms;
    for (auto term : text::split(body, '+')) {
        if (term.empty())
            throw ParseError("empty term in '" + std::string(input) + "'");
        // Singleton or empty traces are accepted and rewritten, so a term may vanish.
        QPoly value = QPoly::one(m);
        for (auto factor : text::split(term, '*')) {
            auto [base, power] = text::split_power(factor);
            QPoly f(m);
            if (base == "1")
                continue;
            if (base.starts_with("Tr(") && base.ends_with(")"))
                f = QPoly::tr(Subset::parse(m, base.substr(3, base.size() - 4)));
            else if (base.size() >= 2 && base[0] == 'x')
                f = QPoly::x(m, text::parse_index(base, 1, m));
            else if (base.size() >= 2 && base[0] == 'N')
                f = QPoly::norm(m, text::parse_index(base, 1, m));
            else
                throw ParseError("unknown factor '" + std::string(factor) + "'");
            for (unsigned long k = 0; k < power; ++k)
                value = value * f;
        }
        for (const auto& t : value.terms())
            terms.push_back(t);
    }
    return QPoly::from_terms(m, std::move(terms));
}

std::optional<std::uint64_t> q_degree(const QPoly& q)
{
    if (q.is_zero())
        throw EmptyError("q_degree of the zero element");
    std::uint64_t d = q.terms().front().degree();
    for (const auto& t : q.terms())
        if (t.degree() != d)
            return std::nullopt;
    return d;
}

std::uint64_t tr_degree(const QPoly& q)
{
    if (q.is_zero())
        throw EmptyError("tr_degree of the zero element");
    std::uint64_t d = 0;
    for (const auto& t : q.terms())
        d = std::max(d, t.tr_degree());
    return d;
}

namespace {
constexpr std::size_t kEagerTraceLimit = 10;
}

PiEvaluator::PiEvaluator(std::size_t m) : m_(m)
{
    for (std::size_t i = 1; i <= m; ++i)
        norms_.push_back(c2inv::norm(m, i));
    if (m <= kEagerTraceLimit) {
        traces_.reserve(std::size_t{1} << m);
        for (std::uint32_t v = 0; v < (1u << m); ++v)
            traces_.push_back(transfer(Subset::from_bits(m, v)));
    }
}

const Poly& PiEvaluator::trace(const Subset& a) const
{
    check_same_m(m_, a.m());
    if (traces_.empty()) {
        thread_local Poly scratch;
        scratch = transfer(a);
        return scratch;
    }
    return traces_[a.value()];
}

Poly PiEvaluator::eval(const QMonomial& mono) const
{
    check_same_m(m_, mono.m());
    std::vector<Exponent> exps(2 * m_, 0);
    for (std::size_t i = 0; i < m_; ++i)
        exps[2 * i + 1] = mono.x_exps()[i];
    Poly out(Monomial(m_, std::move(exps)));
    for (std::size_t i = 0; i < m_; ++i)
        if (mono.n_exps()[i] != 0)
            out *= norms_[i].pow(mono.n_exps()[i]);
    for (const auto& a : mono.traces())
        out *= trace(a);
    return out;
}

Poly PiEvaluator::eval(const QPoly& q) const
{
    check_same_m(m_, q.m());
    Poly out(m_);
    for (const auto& t : q.terms())
        out += eval(t);
    return out;
}

Poly pi_eval(const QPoly& q) { return PiEvaluator(q.m()).eval(q); }

}  // namespace c2inv
