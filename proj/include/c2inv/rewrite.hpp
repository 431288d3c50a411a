#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "c2inv/poly.hpp"
#include "c2inv/qring.hpp"
#include "c2inv/relations.hpp"

namespace c2inv {

struct ReductionStep {
    Relation relation;
    QMonomial multiplier;
    // The term rewritten by this step; it cancels against multiplier * Tr(A)Tr(B).
    QMonomial rewritten;
    // Termination measure of the rewritten term: tr_degree first, then factor spread.
    std::uint64_t tr_degree = 0;
    std::uint64_t spread = 0;
};

/// Step log of a type III reduction. Replaying the steps on the input must
/// reproduce the result: result = input + sum multiplier * relation.
struct ReductionTrace {
    QPoly input;
    QPoly result;
    std::vector<ReductionStep> steps;

    QPoly replay() const;
    std::string to_text() const;
    nlohmann::ordered_json to_json() const;
};

// Rewrites Tr(A)Tr(B) (|A|, |B| >= 2) into an R-linear combination of traces with the canonical type III relations.
ReductionTrace reduce_product(const Subset& a, const Subset& b);

// Repeatedly rewrites the largest term carrying two or more traces (its two
// largest trace factors) until the element is Tr-linear.
ReductionTrace normal_form(const QPoly& q);

// Lead term of pi(x^I N^J Tr(A)) read off directly: x^I y^(2J) x_l(A) y^(A').
// For an R-monomial (no trace) this is x^I y^(2J).
Monomial summand_lead_term(const QMonomial& term);

// Maximum of summand_lead_term over the terms of a Tr-linear element.
Monomial gamma(const QPoly& h);

struct LinearStep {
    Subset type_i;          // the subset C of the type I relation subtracted
    QMonomial multiplier;   // x^(I1 - Delta_a2) N^(J1)
    Monomial gamma;         // Gamma(h) before the step
    std::size_t attaining = 0;   // summands of h attaining Gamma(h)
    std::size_t subtracted = 0;  // summands of the multiplied type I element attaining Gamma(h)
};

/// Expresses a linear relation as an R-combination of type I relations by
/// cancelling the summands that attain Gamma(h) two at a time.
struct LinearReduction {
    QPoly input;
    std::vector<LinearStep> steps;
    QPoly remainder;

    bool complete() const { return remainder.is_zero(); }
    // sum of multiplier * type_I(C) over the steps.
    QPoly combination() const;
    nlohmann::ordered_json to_json() const;
};

// Requires a Tr-linear h with pi(h) = 0 (PreconditionError otherwise).
LinearReduction linear_reduce(const QPoly& h);

}  // namespace c2inv
