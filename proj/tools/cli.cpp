#include "cli.hpp"

#include <CLI11.hpp>
#include <ostream>
#include <sstream>

#include "c2inv/error.hpp"
#include "c2inv/invariants.hpp"
#include "c2inv/oracle.hpp"
#include "c2inv/relations.hpp"
#include "c2inv/rewrite.hpp"

namespace c2inv::cli {

namespace {

struct Options {
    std::size_t m = 0;
    std::string flavor = "III";
    std::size_t dmax = 0;
    bool dmax_given = false;
    std::string format = "text";
    double budget = kDefaultBudget;
    std::string product;
    std::string subset;
    std::string expr;
    bool linear = false;
    unsigned p = 2;
};

using Json = nlohmann::ordered_json;

void emit_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

std::pair<Subset, Subset> parse_product(std::size_t m, const std::string& text)
{
    auto comma = text.find(',');
    if (comma == std::string::npos)
        throw ParseError("--product expects two bitstrings separated by a comma, e.g. 110,011");
    return {Subset::parse(m, text.substr(0, comma)), Subset::parse(m, text.substr(comma + 1))};
}

int cmd_gens(const Options& o, std::ostream& out)
{
    auto gens = generator_set(o.m);
    if (o.format == "json") {
        emit_json(out, to_json(gens));
        return kOk;
    }
    out << "m = " << o.m << ", " << gens.count() << " generators\n";
    for (const auto& g : gens.named())
        out << g.name << " (deg " << g.degree << ") = " << g.poly.to_string() << "\n";
    return kOk;
}

int cmd_trace(const Options& o, std::ostream& out)
{
    if (o.subset.empty())
        throw ParseError("trace needs --subset <bits>");
    const Subset a = Subset::parse(o.m, o.subset);
    const Poly tr = transfer(a);
    if (o.format == "json") {
        Json j;
        j["schema"] = 1;
        j["m"] = o.m;
        j["subset"] = a.to_string();
        j["trace"] = tr.to_string();
        j["terms"] = tr.size();
        j["lead_term"] = tr.is_zero() ? "0" : tr.lead_term().to_string();
        emit_json(out, j);
        return kOk;
    }
    out << "tr(" << a.to_string() << ") = " << tr.to_string() << "\n";
    if (!tr.is_zero())
        out << "LT = " << tr.lead_term().to_string() << ", " << tr.size() << " terms\n";
    return kOk;
}

Relation build_relation(const Options& o)
{
    const Flavor flavor = parse_flavor(o.flavor);
    if (flavor == Flavor::I) {
        if (o.subset.empty())
            throw ParseError("a type I relation needs --subset <bits>");
        return type_I(Subset::parse(o.m, o.subset));
    }
    if (o.product.empty())
        throw ParseError("a quadratic relation needs --product <bits,bits>");
    auto [a, b] = parse_product(o.m, o.product);
    return flavor == Flavor::II ? type_II(a, b) : type_III(a, b);
}

int cmd_relation(const Options& o, std::ostream& out)
{
    Relation r = build_relation(o);
    const bool in_kernel = pi_eval(r.element).is_zero();
    if (o.format == "json") {
        Json j = r.to_json();
        j["in_kernel"] = in_kernel;
        Json wrapped;
        wrapped["schema"] = 1;
        wrapped["m"] = o.m;
        wrapped["relation"] = j;
        emit_json(out, wrapped);
        return kOk;
    }
    out << r.id() << ": " << r.element.to_string() << "\n";
    out << "degree " << r.degree() << ", pi-image " << (in_kernel ? "0" : "NONZERO") << "\n";
    return in_kernel ? kOk : kVerificationFailed;
}

int cmd_basis(const Options& o, std::ostream& out)
{
    const auto basis = relation_basis(o.m, parse_flavor(o.flavor));
    if (o.format == "json") {
        Json j;
        j["schema"] = 1;
        j["m"] = o.m;
        j["flavor"] = o.flavor;
        j["count"] = basis.size();
        auto list = Json::array();
        for (const auto& r : basis)
            list.push_back(r.to_json());
        j["relations"] = list;
        emit_json(out, j);
        return kOk;
    }
    out << basis.size() << " relations (m = " << o.m << ", flavor " << o.flavor << ")\n";
    for (const auto& r : basis)
        out << r.id() << " [deg " << r.degree() << "]: " << r.element.to_string() << "\n";
    return kOk;
}

int cmd_reduce(const Options& o, std::ostream& out)
{
    if (o.linear) {
        if (o.expr.empty())
            throw ParseError("reduce --linear needs --expr <qpoly>");
        auto lr = linear_reduce(QPoly::parse(o.m, o.expr));
        if (o.format == "json") {
            emit_json(out, lr.to_json());
        } else {
            out << "input: " << lr.input.to_string() << "\n";
            for (std::size_t k = 0; k < lr.steps.size(); ++k)
                out << "step " << (k + 1) << ": I(" << lr.steps[k].type_i.to_string() << ") * "
                    << lr.steps[k].multiplier.to_string() << "  [Gamma " << lr.steps[k].gamma.to_string() << "]\n";
            out << "remainder: " << lr.remainder.to_string() << "\n";
        }
        return lr.complete() ? kOk : kVerificationFailed;
    }
    ReductionTrace trace;
    if (!o.product.empty()) {
        auto [a, b] = parse_product(o.m, o.product);
        trace = reduce_product(a, b);
    } else if (!o.expr.empty()) {
        trace = normal_form(QPoly::parse(o.m, o.expr));
    } else {
        throw ParseError("reduce needs --product <bits,bits> or --expr <qpoly>");
    }
    if (o.format == "json")
        emit_json(out, trace.to_json());
    else
        out << trace.to_text();
    return kOk;
}

int cmd_verify(const Options& o, std::ostream& out)
{
    OracleOptions opts;
    opts.budget = o.budget;
    const std::size_t dmax = o.dmax_given ? o.dmax : 2 * o.m;
    auto report = verify_second_main(o.m, dmax, parse_flavor(o.flavor), opts);
    if (o.format == "json") {
        emit_json(out, report.to_json());
    } else {
        out << report.table();
        out << report.summary() << "\n";
    }
    return report.passed() ? kOk : kVerificationFailed;
}

int cmd_count(const Options& o, std::ostream& out)
{
    const std::string gens = count_minimal_generators(o.p, static_cast<unsigned>(o.m)).str();
    const std::string rels = o.m >= 2 ? count_relations(o.m).str() : "0";
    if (o.format == "json") {
        Json j;
        j["schema"] = 1;
        j["m"] = o.m;
        j["p"] = o.p;
        j["generators"] = gens;
        if (o.p == 2)
            j["relations"] = rels;
        emit_json(out, j);
        return kOk;
    }
    out << "minimal generators (p = " << o.p << ", m = " << o.m << "): " << gens << "\n";
    if (o.p == 2)
        out << "minimal relations (p = 2, m = " << o.m << "): " << rels << "\n";
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Generators, relations and second-main-theorem verification for F2[mV2]^C2", "c2inv"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("-m", o.m, "number of V2 summands")->required()->check(CLI::Range(1, 30));
        sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
    };
    auto add_flavor = [&](CLI::App* sub) {
        sub->add_option("--flavor", o.flavor, "relation family: I, II or III")
            ->check(CLI::IsMember({"I", "II", "III"}));
    };

    auto* gens = app.add_subcommand("gens", "list the generators of the invariant ring");
    add_common(gens);
    auto* trace = app.add_subcommand("trace", "print tr(A)");
    add_common(trace);
    trace->add_option("--subset", o.subset, "bitstring b1..bm")->required();
    auto* relation = app.add_subcommand("relation", "build one type I, II or III relation");
    add_common(relation);
    add_flavor(relation);
    relation->add_option("--subset", o.subset, "A for type I");
    relation->add_option("--product", o.product, "A,B for quadratic relations");
    auto* basis = app.add_subcommand("basis", "list a minimal generating set of relations");
    add_common(basis);
    add_flavor(basis);
    auto* reduce = app.add_subcommand("reduce", "rewrite with type III (or type I with --linear) relations");
    add_common(reduce);
    reduce->add_option("--product", o.product, "reduce Tr(A)Tr(B)");
    reduce->add_option("--expr", o.expr, "reduce an arbitrary Q-element");
    reduce->add_flag("--linear", o.linear, "express a linear relation through type I relations");
    auto* verify = app.add_subcommand("verify", "machine-check generation and minimality");
    add_common(verify);
    add_flavor(verify);
    verify->add_option("--dmax", o.dmax, "largest degree checked (default 2m)")->each([&](const std::string&) {
        o.dmax_given = true;
    });
    verify->add_option("--budget", o.budget, "bit-cell budget for oracle matrices")->check(CLI::PositiveNumber);
    auto* count = app.add_subcommand("count", "closed-form generator and relation counts");
    add_common(count);
    count->add_option("-p", o.p, "characteristic for the generator count");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kUsage;
    }

    try {
        if (gens->parsed())
            return cmd_gens(o, out);
        if (trace->parsed())
            return cmd_trace(o, out);
        if (relation->parsed())
            return cmd_relation(o, out);
        if (basis->parsed())
            return cmd_basis(o, out);
        if (reduce->parsed())
            return cmd_reduce(o, out);
        if (verify->parsed())
            return cmd_verify(o, out);
        if (count->parsed())
            return cmd_count(o, out);
    } catch (const BudgetExceeded& e) {
        err << "refused: " << e.what() << "\n";
        return kBudget;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << "\n";
        return kVerificationFailed;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    err << app.help();
    return kUsage;
}

}  // namespace c2inv::cli
