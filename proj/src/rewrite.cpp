#include "c2inv/rewrite.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "c2inv/error.hpp"

namespace c2inv {

namespace {

constexpr std::size_t kStepLimit = 10'000'000;

// The two trace factors with the largest |A|; ties keep the larger bitstring.
std::pair<Subset, Subset> largest_pair(const QMonomial& term)
{
    std::vector<Subset> traces = term.traces();
    std::stable_sort(traces.begin(), traces.end(),
                     [](const Subset& a, const Subset& b) { return a.size() > b.size(); });
    return {traces[0], traces[1]};
}

class RelationCache {
  public:
    const Relation& get(const Subset& a, const Subset& b)
    {
        auto [ca, cb] = type_III_orientation(a, b);
        auto key = std::pair{ca.value(), cb.value()};
        auto it = cache_.find(key);
        if (it == cache_.end())
            it = cache_.emplace(key, type_III(ca, cb)).first;
        return it->second;
    }

  private:
    std::map<std::pair<std::uint32_t, std::uint32_t>, Relation> cache_;
};

}  // namespace

ReductionTrace normal_form(const QPoly& q)
{
    ReductionTrace trace;
    trace.input = q;
    QPoly current = q;
    RelationCache relations;
    while (trace.steps.size() < kStepLimit) {
        const auto& terms = current.terms();
        // Terms are sorted by the reduction order, so the first multi-trace term is the largest one.
        auto it = std::find_if(terms.begin(), terms.end(), [](const QMonomial& t) { return t.tr_count() >= 2; });
        if (it == terms.end())
            break;
        const QMonomial term = *it;
        auto [a, b] = largest_pair(term);
        const Relation& relation = relations.get(a, b);
        QMonomial multiplier = term.without_traces({a, b});
        current += relation.element * multiplier;
        trace.steps.push_back({relation, multiplier, term, term.tr_degree(), term.spread()});
    }
    if (!current.is_tr_linear())
        throw InternalError("normal_form exceeded its step limit");
    trace.result = std::move(current);
    return trace;
}

ReductionTrace reduce_product(const Subset& a, const Subset& b)
{
    check_same_m(a.m(), b.m());
    if (a.size() < 2 || b.size() < 2)
        throw PreconditionError("reduce_product needs |A|, |B| >= 2");
    return normal_form(QPoly::tr(a) * QPoly::tr(b));
}

QPoly ReductionTrace::replay() const
{
    QPoly out = input;
    for (const auto& step : steps)
        out += step.relation.element * step.multiplier;
    return out;
}

std::string ReductionTrace::to_text() const
{
    std::ostringstream out;
    out << "input: " << input.to_string() << "\n";
    for (std::size_t k = 0; k < steps.size(); ++k) {
        const auto& s = steps[k];
        out << "step " << (k + 1) << ": " << s.relation.id() << " * " << s.multiplier.to_string() << "  [rewrites "
            << s.rewritten.to_string() << "; tr_degree " << s.tr_degree << ", spread " << s.spread << "]\n";
    }
    out << "result: " << result.to_string() << "\n";
    return out.str();
}

nlohmann::ordered_json ReductionTrace::to_json() const
{
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["m"] = input.m();
    j["input"] = input.to_string();
    auto steps_json = nlohmann::ordered_json::array();
    for (const auto& s : steps) {
        nlohmann::ordered_json step;
        step["relation"] = s.relation.id();
        step["family"] = family_name(s.relation.family);
        step["multiplier"] = s.multiplier.to_string();
        step["rewritten"] = s.rewritten.to_string();
        step["tr_degree"] = s.tr_degree;
        step["spread"] = s.spread;
        steps_json.push_back(step);
    }
    j["steps"] = steps_json;
    j["result"] = result.to_string();
    return j;
}

Monomial summand_lead_term(const QMonomial& term)
{
    if (term.tr_count() > 1)
        throw PreconditionError("Gamma is defined for Tr-linear elements only");
    const std::size_t m = term.m();
    std::vector<Exponent> exps(2 * m, 0);
    for (std::size_t i = 0; i < m; ++i) {
        exps[2 * i + 1] = term.x_exps()[i];
        exps[2 * i] = 2 * term.n_exps()[i];
    }
    Monomial out(m, std::move(exps));
    if (term.tr_count() == 1) {
        const Subset& a = term.traces().front();
        out *= Monomial::x(m, a.leading()) * Monomial::y_pow(a.without_leading());
    }
    return out;
}

Monomial gamma(const QPoly& h)
{
    if (h.is_zero())
        throw EmptyError("Gamma of the zero element");
    if (!h.is_tr_linear())
        throw PreconditionError("Gamma is defined for Tr-linear elements only");
    Monomial best = summand_lead_term(h.terms().front());
    for (const auto& t : h.terms()) {
        Monomial lt = summand_lead_term(t);
        if (compare_monomials(lt, best) > 0)
            best = std::move(lt);
    }
    return best;
}

QPoly LinearReduction::combination() const
{
    QPoly out(input.m());
    for (const auto& s : steps)
        out += type_I(s.type_i).element * s.multiplier;
    return out;
}

nlohmann::ordered_json LinearReduction::to_json() const
{
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["m"] = input.m();
    j["input"] = input.to_string();
    auto steps_json = nlohmann::ordered_json::array();
    for (const auto& s : steps) {
        nlohmann::ordered_json step;
        step["relation"] = "I(" + s.type_i.to_string() + ")";
        step["multiplier"] = s.multiplier.to_string();
        step["gamma"] = s.gamma.to_string();
        step["attaining"] = s.attaining;
        steps_json.push_back(step);
    }
    j["steps"] = steps_json;
    j["remainder"] = remainder.to_string();
    return j;
}

namespace {

bool smaller_summand(const QMonomial& p, const QMonomial& q)
{
    const auto pa = p.traces().front().value();
    const auto qa = q.traces().front().value();
    if (pa != qa)
        return pa < qa;
    return p.x_exps() < q.x_exps();
}

}  // namespace

LinearReduction linear_reduce(const QPoly& h)
{
    if (!h.is_tr_linear())
        throw PreconditionError("linear_reduce needs a Tr-linear element");
    const std::size_t m = h.m();
    if (!PiEvaluator(m).eval(h).is_zero())
        throw PreconditionError("not a relation: pi(h) != 0");

    LinearReduction out;
    out.input = h;
    QPoly current = h;
    while (!current.is_zero()) {
        if (out.steps.size() >= kStepLimit)
            throw InternalError("linear_reduce exceeded its step limit");
        const Monomial g = gamma(current);
        std::vector<QMonomial> attaining;
        for (const auto& t : current.terms()) {
            if (summand_lead_term(t) != g)
                continue;
            if (t.tr_count() == 0)
                throw InternalError("Gamma(h) = " + g.to_string() + " attained by the R-monomial " + t.to_string());
            attaining.push_back(t);
        }
        if (attaining.size() < 2)
            throw InternalError("Gamma(h) = " + g.to_string() + " is attained by a single summand");
        std::sort(attaining.begin(), attaining.end(), smaller_summand);
        const QMonomial& s1 = attaining[0];
        const QMonomial& s2 = attaining[1];
        const Subset a1 = s1.traces().front();
        const Subset a2 = s2.traces().front();
        const std::size_t l1 = a1.leading();
        const std::size_t l2 = a2.leading();
        if (l1 == l2 || a1.without_leading() != a2.without_leading() || s1.n_exps() != s2.n_exps() ||
            s1.r_part() * QMonomial::x(m, l1) != s2.r_part() * QMonomial::x(m, l2))
            throw InternalError("summands " + s1.to_string() + " and " + s2.to_string() +
                                " share Gamma without the expected shape");

        const Subset c = a1.with(l2);
        QMonomial multiplier = s1.r_part().quotient(QMonomial::x(m, l2));
        QPoly subtracted = type_I(c).element * multiplier;
        std::size_t hits = 0;
        for (const auto& t : subtracted.terms())
            hits += summand_lead_term(t) == g ? 1 : 0;
        current += subtracted;
        out.steps.push_back({c, std::move(multiplier), g, attaining.size(), hits});
    }
    out.remainder = std::move(current);
    return out;
}

}  // namespace c2inv
