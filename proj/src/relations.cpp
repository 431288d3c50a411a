#include "c2inv/relations.hpp"

#include "c2inv/error.hpp"

namespace c2inv {

std::string family_name(Family family)
{
    switch (family) {
    case Family::I: return "I";
    case Family::II: return "II";
    case Family::IIIa: return "IIIa";
    case Family::IIIb: return "IIIb";
    case Family::IIIc: return "IIIc";
    }
    return "?";
}

std::string flavor_name(Flavor flavor)
{
    switch (flavor) {
    case Flavor::I: return "I";
    case Flavor::II: return "II";
    case Flavor::III: return "III";
    }
    return "?";
}

Flavor parse_flavor(const std::string& text)
{
    if (text == "I")
        return Flavor::I;
    if (text == "II")
        return Flavor::II;
    if (text == "III")
        return Flavor::III;
    throw ParseError("unknown flavor '" + text + "' (expected I, II or III)");
}

std::uint64_t Relation::degree() const { return a.size() + (b ? b->size() : 0); }

std::string Relation::id() const
{
    std::string out = family_name(family) + "(" + a.to_string();
    if (b)
        out += "," + b->to_string();
    if (index)
        out += std::string(family == Family::IIIa ? ";j=" : ";i=") + std::to_string(*index);
    return out + ")";
}

nlohmann::ordered_json Relation::to_json() const
{
    nlohmann::ordered_json j;
    j["family"] = family_name(family);
    j["A"] = a.to_string();
    if (b)
        j["B"] = b->to_string();
    if (index)
        j["index"] = *index;
    j["degree"] = degree();
    j["element"] = element.to_string();
    return j;
}

namespace {

void require_traces(const Subset& a, const Subset& b, const char* what)
{
    check_same_m(a.m(), b.m());
    if (a.size() < 2 || b.size() < 2)
        throw PreconditionError(std::string(what) + "(" + a.to_string() + "," + b.to_string() +
                                "): needs |A|, |B| >= 2; smaller traces give vacuous relations or "
                                "consequences of type I");
}

QPoly product(const Subset& a, const Subset& b) { return QPoly::tr(a) * QPoly::tr(b); }

}  // namespace

Relation type_I(const Subset& a)
{
    if (a.size() < 3)
        throw PreconditionError("type I relation for A=" + a.to_string() + " is vacuous (needs |A| >= 3)");
    QPoly element(a.m());
    for (const auto& l : a.proper_subsets()) {
        if (l.empty())
            continue;
        element += QPoly::x_pow(a - l) * QPoly::tr(l);
    }
    return Relation{Family::I, a, std::nullopt, std::nullopt, std::move(element)};
}

Relation type_II(const Subset& a, const Subset& b)
{
    require_traces(a, b, "type II");
    const Subset i = a & b;
    const Subset j = a - b;
    const Subset k = b - a;
    QPoly element = product(a, b);
    for (const auto& l : i.proper_subsets())
        element += QPoly::x_pow(i - l) * QPoly::norm_pow(l) * QPoly::tr((i - l) + j + k);
    QPoly tail(a.m());
    for (const auto& l : j.proper_subsets())
        tail += QPoly::x_pow(j - l) * QPoly::tr(l + k);
    element += QPoly::norm_pow(i) * tail;
    return Relation{Family::II, a, b, std::nullopt, std::move(element)};
}

std::pair<Subset, Subset> type_II_orientation(const Subset& a, const Subset& b)
{
    check_same_m(a.m(), b.m());
    if (a.size() > b.size() || (a.size() == b.size() && a.value() >= b.value()))
        return {a, b};
    return {b, a};
}

std::pair<Subset, Subset> type_III_orientation(const Subset& a, const Subset& b)
{
    check_same_m(a.m(), b.m());
    if (a.disjoint(b))
        return type_II_orientation(a, b);
    if (b.subset_of(a))
        return {a, b};
    if (a.subset_of(b))
        return {b, a};
    return a.value() >= b.value() ? std::pair{a, b} : std::pair{b, a};
}

Relation type_III_with_index(const Subset& a, const Subset& b, std::optional<std::size_t> index)
{
    require_traces(a, b, "type III");
    const std::size_t m = a.m();
    if (a.disjoint(b)) {
        if (!index || !b.contains(*index))
            throw PreconditionError("type IIIa(" + a.to_string() + "," + b.to_string() + ") needs an index j in B");
        const std::size_t jx = *index;
        const Subset dj = Subset::delta(m, jx);
        const Subset b1 = b - dj;
        QPoly element = product(a, b);
        element += QPoly::tr(a + dj) * QPoly::tr(b1);
        element += QPoly::x(m, jx) * QPoly::tr(a + b1);
        element += QPoly::x(m, jx) * QPoly::tr(a) * QPoly::tr(b1);
        return Relation{Family::IIIa, a, b, jx, std::move(element)};
    }
    if (b.subset_of(a)) {
        if (!index || !b.contains(*index))
            throw PreconditionError("type IIIb(" + a.to_string() + "," + b.to_string() +
                                    ") needs an index i in A & B");
        const std::size_t ix = *index;
        const Subset di = Subset::delta(m, ix);
        const Subset a1 = a - di;
        const Subset b1 = b - di;
        const Subset j = a - b;
        QPoly element = product(a, b);
        element += QPoly::x(m, ix) * QPoly::tr(a) * QPoly::tr(b1);
        element += QPoly::norm(m, ix) * QPoly::tr(a1) * QPoly::tr(b1);
        element += QPoly::x(m, ix) * QPoly::norm_pow(b1) * QPoly::tr(j + di);
        return Relation{Family::IIIb, a, b, ix, std::move(element)};
    }
    if (a.subset_of(b))
        throw PreconditionError("type III(" + a.to_string() + "," + b.to_string() +
                                "): A < B; interchange so that B <= A");
    if (index)
        throw PreconditionError("type IIIc takes no index");
    const Subset i = a & b;
    const Subset j = a - b;
    const Subset k = b - a;
    QPoly element = product(a, b);
    element += QPoly::tr(i + j + k) * QPoly::tr(i);
    element += QPoly::norm_pow(i) * QPoly::tr(j) * QPoly::tr(k);
    return Relation{Family::IIIc, a, b, std::nullopt, std::move(element)};
}

Relation type_III(const Subset& a, const Subset& b)
{
    require_traces(a, b, "type III");
    auto [ca, cb] = type_III_orientation(a, b);
    std::optional<std::size_t> index;
    if (ca.disjoint(cb))
        index = cb.leading();
    else if (cb.subset_of(ca))
        index = (ca & cb).leading();
    return type_III_with_index(ca, cb, index);
}

std::vector<std::pair<Subset, Subset>> trace_pairs(std::size_t m)
{
    std::vector<std::pair<Subset, Subset>> out;
    if (m < 2)
        return out;
    const auto traces = subsets_of_size_at_least(m, 2);
    for (std::size_t s = 0; s < traces.size(); ++s)
        for (std::size_t t = s; t < traces.size(); ++t)
            out.emplace_back(traces[s], traces[t]);
    return out;
}

std::vector<Relation> relation_basis(std::size_t m, Flavor flavor)
{
    std::vector<Relation> out;
    if (m <= 1)
        return out;
    for (const auto& a : subsets_of_size_at_least(m, 3))
        out.push_back(type_I(a));
    if (flavor == Flavor::I)
        return out;
    for (const auto& [a, b] : trace_pairs(m)) {
        if (flavor == Flavor::II) {
            auto [ca, cb] = type_II_orientation(a, b);
            out.push_back(type_II(ca, cb));
        } else {
            out.push_back(type_III(a, b));
        }
    }
    return out;
}

BigInt count_relations(std::size_t m)
{
    long long mm = static_cast<long long>(m);
    BigInt two_m = BigInt(1) << m;
    BigInt linear = two_m - binomial(mm, 2) - mm - 1;
    // C(2^m - m, 2) with a big-integer argument.
    BigInt n = two_m - mm;
    BigInt quadratic = n * (n - 1) / 2;
    return linear + quadratic;
}

}  // namespace c2inv
