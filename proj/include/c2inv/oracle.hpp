#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "json.hpp"

#include "c2inv/f2matrix.hpp"
#include "c2inv/poly.hpp"
#include "c2inv/qring.hpp"
#include "c2inv/relations.hpp"

namespace c2inv {

inline constexpr double kDefaultBudget = 1e8;

struct OracleOptions {
    // Largest matrix (in bit-cells) the oracle agrees to build.
    double budget = kDefaultBudget;
    Exec exec = Exec::parallel;
};

// All Q-monomials of grading degree d with at most max_traces trace factors, in decreasing canonical order.
std::vector<QMonomial> q_monomials_of_degree(std::size_t m, std::size_t d,
                                             std::size_t max_traces = std::numeric_limits<std::size_t>::max());
// All monomials of total degree d in y_1, x_1, ..., x_m, decreasing grevlex.
std::vector<Monomial> monomials_of_degree(std::size_t m, std::size_t d);

/// The monomial bases of Q_d and of the degree-d part of F_2[mV_2].
struct GradedBasis {
    std::size_t m = 0;
    std::size_t degree = 0;
    std::vector<QMonomial> q_monomials;
    std::vector<Monomial> poly_monomials;
    std::unordered_map<QMonomial, std::size_t, QMonomialHash> q_index;
    std::unordered_map<Monomial, std::size_t, MonomialHash> poly_index;

    static GradedBasis build(std::size_t m, std::size_t d,
                             std::size_t max_traces = std::numeric_limits<std::size_t>::max());

    // Coordinates of a homogeneous degree-d element; throws if a term is outside the basis.
    std::vector<Word> q_vector(const QPoly& q) const;
    std::vector<Word> poly_vector(const Poly& f) const;
    QPoly q_element(std::span<const Word> bits) const;
};

// Throws BudgetExceeded when rows * cols exceeds the budget.
void check_budget(double rows, double cols, const OracleOptions& options);

// Rows are pi(q) for q in the Q-basis, columns the polynomial basis. Rows are built concurrently under Exec::parallel.
F2Matrix pi_matrix(const GradedBasis& basis, const PiEvaluator& pi, Exec exec);

std::size_t pi_rank(std::size_t m, std::size_t d, const OracleOptions& options = {});
std::size_t kernel_dim(std::size_t m, std::size_t d, const OracleOptions& options = {});

// An F_2 basis of ker(pi) restricted to Q_d (optionally to monomials with at most max_traces traces).
std::vector<QPoly> kernel_basis(std::size_t m, std::size_t d, const OracleOptions& options = {},
                                std::size_t max_traces = std::numeric_limits<std::size_t>::max());

// Dimension of the sigma-fixed subspace of degree-d polynomials, as the nullity of sigma - id.
std::size_t invariant_subspace_dim(std::size_t m, std::size_t d, const OracleOptions& options = {});

// Is q in the degree-d part of the ideal generated by the relation elements?
bool span_contains(const std::vector<Relation>& relations, std::size_t m, std::size_t d, const QPoly& q,
                   const OracleOptions& options = {});

struct DegreeReport {
    std::size_t degree = 0;
    std::size_t dim_q = 0;
    std::size_t rank_pi = 0;
    std::size_t dim_kernel = 0;
    std::size_t relations_here = 0;
    // Span of (Q_+ * relations of lower degree) in degree d.
    std::size_t dim_lower_span = 0;
    std::size_t dim_span = 0;
    bool in_kernel = true;
    bool generation = true;
    bool minimality = true;
    std::vector<std::string> not_in_kernel;
    std::vector<std::string> redundant;
    std::optional<std::string> counterexample;

    // Minimal generators the kernel needs in this degree given the lower-degree relations.
    std::size_t needed() const { return dim_kernel - dim_lower_span; }
};

struct VerifyReport {
    std::size_t m = 0;
    std::size_t d_max = 0;
    std::string label;
    std::size_t relation_count = 0;
    std::vector<DegreeReport> degrees;

    bool generation() const;
    bool minimality() const;
    bool in_kernel() const;
    bool passed() const { return generation() && minimality() && in_kernel(); }
    // Largest degree holding a relation of the set, 0 if none.
    std::size_t max_degree() const;
    std::optional<std::size_t> first_generation_failure() const;

    std::string summary() const;
    std::string table() const;
    nlohmann::ordered_json to_json() const;
};

// Checks generation (every kernel vector is in the ideal span), minimality (each
// relation is outside the span of the others in its degree) and kernel
// membership, degree by degree up to d_max.
VerifyReport verify_relations(std::size_t m, std::size_t d_max, const std::vector<Relation>& relations,
                              const std::string& label, const OracleOptions& options = {});
VerifyReport verify_second_main(std::size_t m, std::size_t d_max, Flavor flavor, const OracleOptions& options = {});

/// Kernel-intrinsic count of minimal generators of ker(pi) per degree:
/// dim ker_d minus the dimension of the span of generator multiples of lower-degree kernel elements.
struct MinimalGeneratorProfile {
    std::size_t m = 0;
    std::vector<std::size_t> per_degree;  // index = degree, up to 2m + 1
    std::optional<std::size_t> max_degree() const;
};

MinimalGeneratorProfile minimal_generator_profile(std::size_t m, std::size_t d_max, const OracleOptions& options = {});

// Largest d <= 2m + 1 carrying a minimal generator of ker(pi); nullopt when the kernel is zero.
std::optional<std::size_t> max_relation_degree(std::size_t m, const OracleOptions& options = {});

}  // namespace c2inv
