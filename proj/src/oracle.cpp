#include "c2inv/oracle.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "c2inv/error.hpp"
#include "c2inv/invariants.hpp"

namespace c2inv {

namespace {

struct QGenerator {
    enum Kind { x, norm, trace } kind;
    std::size_t index;  // 0-based for x / norm
    Subset subset;
    std::size_t degree;
};

std::vector<QGenerator> q_generators(std::size_t m)
{
    std::vector<QGenerator> gens;
    for (std::size_t i = 0; i < m; ++i)
        gens.push_back({QGenerator::x, i, Subset(m), 1});
    for (std::size_t i = 0; i < m; ++i)
        gens.push_back({QGenerator::norm, i, Subset(m), 2});
    if (m >= 2)
        for (const auto& a : subsets_of_size_at_least(m, 2))
            gens.push_back({QGenerator::trace, 0, a, a.size()});
    return gens;
}

QMonomial generator_monomial(std::size_t m, const QGenerator& g)
{
    switch (g.kind) {
    case QGenerator::x: return QMonomial::x(m, g.index + 1);
    case QGenerator::norm: return QMonomial::norm(m, g.index + 1);
    case QGenerator::trace: return QMonomial::tr(g.subset);
    }
    return QMonomial(m);
}

void enumerate_q(std::size_t m, const std::vector<QGenerator>& gens, std::size_t at, std::size_t remaining,
                 std::size_t traces_left, std::vector<Exponent>& xs, std::vector<Exponent>& ns,
                 std::vector<Subset>& trs, std::vector<QMonomial>& out)
{
    if (remaining == 0) {
        out.emplace_back(m, xs, ns, trs);
        return;
    }
    if (at == gens.size())
        return;
    const auto& g = gens[at];
    enumerate_q(m, gens, at + 1, remaining, traces_left, xs, ns, trs, out);
    std::size_t used = 0;
    while (g.degree * (used + 1) <= remaining) {
        if (g.kind == QGenerator::trace && traces_left == 0)
            break;
        ++used;
        if (g.kind == QGenerator::x)
            ++xs[g.index];
        else if (g.kind == QGenerator::norm)
            ++ns[g.index];
        else {
            trs.push_back(g.subset);
            --traces_left;
        }
        enumerate_q(m, gens, at + 1, remaining - g.degree * used, traces_left, xs, ns, trs, out);
    }
    if (g.kind == QGenerator::x)
        xs[g.index] -= static_cast<Exponent>(used);
    else if (g.kind == QGenerator::norm)
        ns[g.index] -= static_cast<Exponent>(used);
    else {
        trs.resize(trs.size() - used);
        traces_left += used;
    }
}

void enumerate_poly(std::size_t at, std::size_t remaining, std::vector<Exponent>& exps, std::size_t m,
                    std::vector<Monomial>& out)
{
    if (at + 1 == exps.size()) {
        exps[at] = static_cast<Exponent>(remaining);
        out.emplace_back(m, exps);
        exps[at] = 0;
        return;
    }
    for (std::size_t e = 0; e <= remaining; ++e) {
        exps[at] = static_cast<Exponent>(e);
        enumerate_poly(at + 1, remaining - e, exps, m, out);
    }
    exps[at] = 0;
}

void set_bit(std::vector<Word>& row, std::size_t c) { row[c / kWordBits] ^= Word{1} << (c % kWordBits); }

}  // namespace

std::vector<QMonomial> q_monomials_of_degree(std::size_t m, std::size_t d, std::size_t max_traces)
{
    std::vector<QMonomial> out;
    std::vector<Exponent> xs(m, 0), ns(m, 0);
    std::vector<Subset> trs;
    enumerate_q(m, q_generators(m), 0, d, max_traces, xs, ns, trs, out);
    std::sort(out.begin(), out.end(),
              [](const QMonomial& a, const QMonomial& b) { return compare_qmonomials(a, b) > 0; });
    return out;
}

std::vector<Monomial> monomials_of_degree(std::size_t m, std::size_t d)
{
    std::vector<Monomial> out;
    if (m == 0)
        return out;
    std::vector<Exponent> exps(2 * m, 0);
    enumerate_poly(0, d, exps, m, out);
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return compare_monomials(a, b) > 0; });
    return out;
}

GradedBasis GradedBasis::build(std::size_t m, std::size_t d, std::size_t max_traces)
{
    GradedBasis b;
    b.m = m;
    b.degree = d;
    b.q_monomials = q_monomials_of_degree(m, d, max_traces);
    b.poly_monomials = monomials_of_degree(m, d);
    for (std::size_t k = 0; k < b.q_monomials.size(); ++k)
        b.q_index.emplace(b.q_monomials[k], k);
    for (std::size_t k = 0; k < b.poly_monomials.size(); ++k)
        b.poly_index.emplace(b.poly_monomials[k], k);
    return b;
}

std::vector<Word> GradedBasis::q_vector(const QPoly& q) const
{
    check_same_m(m, q.m());
    std::vector<Word> row(words_for(q_monomials.size()), 0);
    for (const auto& t : q.terms()) {
        auto it = q_index.find(t);
        if (it == q_index.end())
            throw PreconditionError("term " + t.to_string() + " is not in the degree-" + std::to_string(degree) +
                                    " Q-basis");
        set_bit(row, it->second);
    }
    return row;
}

std::vector<Word> GradedBasis::poly_vector(const Poly& f) const
{
    check_same_m(m, f.m());
    std::vector<Word> row(words_for(poly_monomials.size()), 0);
    for (const auto& t : f.terms()) {
        auto it = poly_index.find(t);
        if (it == poly_index.end())
            throw PreconditionError("monomial " + t.to_string() + " is not of degree " + std::to_string(degree));
        set_bit(row, it->second);
    }
    return row;
}

QPoly GradedBasis::q_element(std::span<const Word> bits) const
{
    std::vector<QMonomial> terms;
    for (std::size_t k = 0; k < q_monomials.size(); ++k)
        if ((bits[k / kWordBits] >> (k % kWordBits)) & 1u)
            terms.push_back(q_monomials[k]);
    return QPoly::from_terms(m, std::move(terms));
}

void check_budget(double rows, double cols, const OracleOptions& options)
{
    if (rows * cols > options.budget)
        throw BudgetExceeded(rows * cols, options.budget);
}

F2Matrix pi_matrix(const GradedBasis& basis, const PiEvaluator& pi, Exec exec)
{
    F2Matrix out(basis.q_monomials.size(), basis.poly_monomials.size());
    const auto n = static_cast<std::ptrdiff_t>(basis.q_monomials.size());
    auto fill = [&](std::ptrdiff_t r) {
        Poly image = pi.eval(basis.q_monomials[static_cast<std::size_t>(r)]);
        for (const auto& t : image.terms())
            out.flip(static_cast<std::size_t>(r), basis.poly_index.at(t));
    };
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 16)
        for (std::ptrdiff_t r = 0; r < n; ++r)
            fill(r);
    } else {
        for (std::ptrdiff_t r = 0; r < n; ++r)
            fill(r);
    }
    return out;
}

std::size_t pi_rank(std::size_t m, std::size_t d, const OracleOptions& options)
{
    auto basis = GradedBasis::build(m, d);
    check_budget(static_cast<double>(basis.q_monomials.size()), static_cast<double>(basis.poly_monomials.size()),
                 options);
    return rank(pi_matrix(basis, PiEvaluator(m), options.exec), options.exec);
}

std::size_t kernel_dim(std::size_t m, std::size_t d, const OracleOptions& options)
{
    return q_monomials_of_degree(m, d).size() - pi_rank(m, d, options);
}

std::vector<QPoly> kernel_basis(std::size_t m, std::size_t d, const OracleOptions& options, std::size_t max_traces)
{
    if (m == 0)
        throw PreconditionError("kernel_basis needs m >= 1");
    auto basis = GradedBasis::build(m, d, max_traces);
    const double rows = static_cast<double>(basis.q_monomials.size());
    check_budget(rows, static_cast<double>(basis.poly_monomials.size()) + rows, options);
    F2Matrix kernel = left_kernel(pi_matrix(basis, PiEvaluator(m), options.exec), options.exec);
    std::vector<QPoly> out;
    out.reserve(kernel.rows());
    for (std::size_t r = 0; r < kernel.rows(); ++r)
        out.push_back(basis.q_element(kernel.row(r)));
    return out;
}

std::size_t invariant_subspace_dim(std::size_t m, std::size_t d, const OracleOptions& options)
{
    auto monos = monomials_of_degree(m, d);
    check_budget(static_cast<double>(monos.size()), static_cast<double>(monos.size()), options);
    std::unordered_map<Monomial, std::size_t, MonomialHash> index;
    for (std::size_t k = 0; k < monos.size(); ++k)
        index.emplace(monos[k], k);
    F2Matrix map(monos.size(), monos.size());
    const auto n = static_cast<std::ptrdiff_t>(monos.size());
    auto fill = [&](std::ptrdiff_t r) {
        const auto& u = monos[static_cast<std::size_t>(r)];
        Poly image = sigma(Poly(u)) + Poly(u);
        for (const auto& t : image.terms())
            map.flip(static_cast<std::size_t>(r), index.at(t));
    };
    if (options.exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 16)
        for (std::ptrdiff_t r = 0; r < n; ++r)
            fill(r);
    } else {
        for (std::ptrdiff_t r = 0; r < n; ++r)
            fill(r);
    }
    return monos.size() - rank(std::move(map), options.exec);
}

namespace {

// Q-monomial lists for degrees 0..d, computed once per verification.
class MultiplierCache {
  public:
    explicit MultiplierCache(std::size_t m) : m_(m) {}
    const std::vector<QMonomial>& of_degree(std::size_t d)
    {
        while (by_degree_.size() <= d)
            by_degree_.push_back(q_monomials_of_degree(m_, by_degree_.size()));
        return by_degree_[d];
    }

  private:
    std::size_t m_;
    std::vector<std::vector<QMonomial>> by_degree_;
};

// Rows mu * r for every relation r of degree e in [min_e, max_e] (e <= d) and multiplier mu of degree d - e.
F2Matrix multiple_rows(const std::vector<const Relation*>& relations, const GradedBasis& basis,
                       MultiplierCache& cache, Exec exec)
{
    struct Job {
        const Relation* relation;
        const QMonomial* multiplier;
    };
    std::vector<Job> jobs;
    for (const Relation* r : relations) {
        const auto e = static_cast<std::size_t>(r->degree());
        for (const auto& mu : cache.of_degree(basis.degree - e))
            jobs.push_back({r, &mu});
    }
    F2Matrix out(jobs.size(), basis.q_monomials.size());
    const auto n = static_cast<std::ptrdiff_t>(jobs.size());
    auto fill = [&](std::ptrdiff_t k) {
        const Job& job = jobs[static_cast<std::size_t>(k)];
        for (const auto& t : job.relation->element.terms())
            out.flip(static_cast<std::size_t>(k), basis.q_index.at(t * *job.multiplier));
    };
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 32)
        for (std::ptrdiff_t k = 0; k < n; ++k)
            fill(k);
    } else {
        for (std::ptrdiff_t k = 0; k < n; ++k)
            fill(k);
    }
    return out;
}

// Loads the row space of a matrix via parallel elimination; RREF rows insert without further reduction.
void load_rows(RowSpace& space, F2Matrix rows, Exec exec)
{
    if (rows.rows() == 0)
        return;
    const auto echelon = rref(rows, exec);
    for (std::size_t r = 0; r < echelon.rank; ++r)
        space.insert(rows.row(r));
}

std::vector<const Relation*> relations_in_degrees(const std::vector<Relation>& relations, std::size_t lo,
                                                  std::size_t hi)
{
    std::vector<const Relation*> out;
    for (const auto& r : relations)
        if (r.degree() >= lo && r.degree() <= hi)
            out.push_back(&r);
    return out;
}

}  // namespace

bool span_contains(const std::vector<Relation>& relations, std::size_t m, std::size_t d, const QPoly& q,
                   const OracleOptions& options)
{
    auto basis = GradedBasis::build(m, d);
    const double dim = static_cast<double>(basis.q_monomials.size());
    check_budget(dim, dim, options);
    MultiplierCache cache(m);
    RowSpace space(basis.q_monomials.size());
    for (const auto& r : relations)
        check_same_m(m, r.element.m());
    load_rows(space, multiple_rows(relations_in_degrees(relations, 1, d), basis, cache, options.exec), options.exec);
    return space.contains(basis.q_vector(q));
}

VerifyReport verify_relations(std::size_t m, std::size_t d_max, const std::vector<Relation>& relations,
                              const std::string& label, const OracleOptions& options)
{
    if (m == 0)
        throw PreconditionError("verification needs m >= 1");
    VerifyReport report;
    report.m = m;
    report.d_max = d_max;
    report.label = label;
    report.relation_count = relations.size();

    PiEvaluator pi(m);
    MultiplierCache cache(m);
    std::vector<bool> relation_in_kernel(relations.size());
    for (std::size_t k = 0; k < relations.size(); ++k) {
        check_same_m(m, relations[k].element.m());
        relation_in_kernel[k] = pi.eval(relations[k].element).is_zero();
    }

    for (std::size_t d = 0; d <= d_max; ++d) {
        auto basis = GradedBasis::build(m, d);
        const double dim_q = static_cast<double>(basis.q_monomials.size());
        check_budget(dim_q, std::max(dim_q, static_cast<double>(basis.poly_monomials.size())), options);

        DegreeReport row;
        row.degree = d;
        row.dim_q = basis.q_monomials.size();
        row.rank_pi = rank(pi_matrix(basis, pi, options.exec), options.exec);
        row.dim_kernel = row.dim_q - row.rank_pi;

        RowSpace space(row.dim_q);
        load_rows(space, multiple_rows(relations_in_degrees(relations, 1, d == 0 ? 0 : d - 1), basis, cache,
                                       options.exec),
                  options.exec);
        row.dim_lower_span = space.rank();

        bool lower_in_kernel = true;
        for (std::size_t k = 0; k < relations.size(); ++k) {
            const auto& r = relations[k];
            if (r.degree() > d)
                continue;
            if (!relation_in_kernel[k]) {
                lower_in_kernel = false;
                if (r.degree() == d)
                    row.not_in_kernel.push_back(r.id());
            }
            if (r.degree() != d)
                continue;
            ++row.relations_here;
            if (!space.insert(basis.q_vector(r.element)))
                row.redundant.push_back(r.id());
        }
        row.dim_span = space.rank();
        row.in_kernel = row.not_in_kernel.empty();
        row.minimality = row.redundant.empty();

        if (lower_in_kernel) {
            row.generation = row.dim_span == row.dim_kernel;
        } else {
            row.generation = true;
        }
        // Without the containment span <= ker the dimension test is not enough; check vectors directly.
        if (!row.generation || !lower_in_kernel) {
            auto kernel = kernel_basis(m, d, options);
            row.generation = true;
            for (const auto& v : kernel) {
                if (!space.contains(basis.q_vector(v))) {
                    row.generation = false;
                    row.counterexample = v.to_string();
                    break;
                }
            }
        }
        report.degrees.push_back(std::move(row));
    }
    return report;
}

VerifyReport verify_second_main(std::size_t m, std::size_t d_max, Flavor flavor, const OracleOptions& options)
{
    return verify_relations(m, d_max, relation_basis(m, flavor), flavor_name(flavor), options);
}

bool VerifyReport::generation() const
{
    return std::all_of(degrees.begin(), degrees.end(), [](const DegreeReport& d) { return d.generation; });
}

bool VerifyReport::minimality() const
{
    return std::all_of(degrees.begin(), degrees.end(), [](const DegreeReport& d) { return d.minimality; });
}

bool VerifyReport::in_kernel() const
{
    return std::all_of(degrees.begin(), degrees.end(), [](const DegreeReport& d) { return d.in_kernel; });
}

std::size_t VerifyReport::max_degree() const
{
    std::size_t out = 0;
    for (const auto& d : degrees)
        if (d.relations_here > 0)
            out = d.degree;
    return out;
}

std::optional<std::size_t> VerifyReport::first_generation_failure() const
{
    for (const auto& d : degrees)
        if (!d.generation)
            return d.degree;
    return std::nullopt;
}

std::string VerifyReport::summary() const
{
    std::ostringstream out;
    if (passed()) {
        out << "PASS: generation + minimality, " << relation_count << " relations, max degree " << max_degree();
        return out.str();
    }
    out << "FAIL:";
    for (const auto& d : degrees) {
        if (!d.in_kernel)
            out << " relation outside ker(pi) at degree " << d.degree << ";";
        if (!d.generation)
            out << " generation fails at degree " << d.degree << ";";
        if (!d.minimality)
            out << " minimality fails at degree " << d.degree << ";";
    }
    out << " " << relation_count << " relations";
    return out.str();
}

std::string VerifyReport::table() const
{
    std::ostringstream out;
    char line[160];
    std::snprintf(line, sizeof line, "%4s %8s %8s %8s %8s %6s %8s %7s %4s %4s\n", "deg", "dim_Q", "rank_pi",
                  "dim_ker", "lower", "rels", "span", "needed", "gen", "min");
    out << line;
    for (const auto& d : degrees) {
        std::snprintf(line, sizeof line, "%4zu %8zu %8zu %8zu %8zu %6zu %8zu %7zu %4s %4s\n", d.degree, d.dim_q,
                      d.rank_pi, d.dim_kernel, d.dim_lower_span, d.relations_here, d.dim_span, d.needed(),
                      d.generation ? "ok" : "FAIL", d.minimality ? "ok" : "FAIL");
        out << line;
    }
    for (const auto& d : degrees) {
        for (const auto& id : d.not_in_kernel)
            out << "degree " << d.degree << ": relation " << id << " is not in ker(pi)\n";
        for (const auto& id : d.redundant)
            out << "degree " << d.degree << ": relation " << id << " lies in the span of the others\n";
        if (d.counterexample)
            out << "degree " << d.degree << ": kernel element outside the span: " << *d.counterexample << "\n";
    }
    return out.str();
}

nlohmann::ordered_json VerifyReport::to_json() const
{
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["m"] = m;
    j["flavor"] = label;
    j["d_max"] = d_max;
    j["relations"] = relation_count;
    j["generation"] = generation();
    j["minimality"] = minimality();
    j["in_kernel"] = in_kernel();
    j["passed"] = passed();
    j["max_degree"] = max_degree();
    auto rows = nlohmann::ordered_json::array();
    for (const auto& d : degrees) {
        nlohmann::ordered_json r;
        r["degree"] = d.degree;
        r["dim_q"] = d.dim_q;
        r["rank_pi"] = d.rank_pi;
        r["dim_kernel"] = d.dim_kernel;
        r["dim_lower_span"] = d.dim_lower_span;
        r["relations"] = d.relations_here;
        r["dim_span"] = d.dim_span;
        r["needed"] = d.needed();
        r["generation"] = d.generation;
        r["minimality"] = d.minimality;
        r["in_kernel"] = d.in_kernel;
        r["redundant"] = d.redundant;
        r["not_in_kernel"] = d.not_in_kernel;
        if (d.counterexample)
            r["counterexample"] = *d.counterexample;
        rows.push_back(r);
    }
    j["degrees"] = rows;
    return j;
}

std::optional<std::size_t> MinimalGeneratorProfile::max_degree() const
{
    for (std::size_t d = per_degree.size(); d-- > 0;)
        if (per_degree[d] > 0)
            return d;
    return std::nullopt;
}

MinimalGeneratorProfile minimal_generator_profile(std::size_t m, std::size_t d_max, const OracleOptions& options)
{
    if (m == 0)
        throw PreconditionError("minimal_generator_profile needs m >= 1");
    MinimalGeneratorProfile profile;
    profile.m = m;
    const auto gens = q_generators(m);
    std::vector<GradedBasis> bases;
    std::vector<F2Matrix> kernels;
    PiEvaluator pi(m);
    for (std::size_t d = 0; d <= d_max; ++d) {
        bases.push_back(GradedBasis::build(m, d));
        const auto& basis = bases.back();
        const double rows = static_cast<double>(basis.q_monomials.size());
        check_budget(rows, static_cast<double>(basis.poly_monomials.size()) + rows, options);
        kernels.push_back(left_kernel(pi_matrix(basis, pi, options.exec), options.exec));

        RowSpace lower(basis.q_monomials.size());
        for (const auto& g : gens) {
            if (g.degree > d)
                continue;
            const std::size_t e = d - g.degree;
            const auto& from = bases[e];
            const auto& kernel = kernels[e];
            if (kernel.rows() == 0)
                continue;
            const QMonomial gm = generator_monomial(m, g);
            std::vector<std::size_t> shift(from.q_monomials.size());
            for (std::size_t k = 0; k < shift.size(); ++k)
                shift[k] = basis.q_index.at(from.q_monomials[k] * gm);
            F2Matrix products(kernel.rows(), basis.q_monomials.size());
            for (std::size_t r = 0; r < kernel.rows(); ++r)
                for (std::size_t c : kernel.row_support(r))
                    products.set(r, shift[c]);
            load_rows(lower, std::move(products), options.exec);
        }
        profile.per_degree.push_back(kernels.back().rows() - lower.rank());
    }
    return profile;
}

std::optional<std::size_t> max_relation_degree(std::size_t m, const OracleOptions& options)
{
    return minimal_generator_profile(m, 2 * m + 1, options).max_degree();
}

}  // namespace c2inv
