#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "json.hpp"

#include "c2inv/poly.hpp"
#include "c2inv/subset.hpp"

namespace c2inv {

/// A monomial of the presentation ring Q = F_2[x_1..x_m, N_1..N_m][Tr(A) : |A| >= 2].
///
/// Trace factors form a multiset stored in decreasing subset-value order, so
/// equality is structural. Every stored trace has |A| >= 2.
class QMonomial {
  public:
    QMonomial() = default;
    explicit QMonomial(std::size_t m);
    QMonomial(std::size_t m, std::vector<Exponent> x_exps, std::vector<Exponent> n_exps, std::vector<Subset> traces);

    static QMonomial x(std::size_t m, std::size_t i, Exponent power = 1);
    static QMonomial norm(std::size_t m, std::size_t i, Exponent power = 1);
    static QMonomial x_pow(const Subset& a);
    static QMonomial norm_pow(const Subset& a);
    // Requires |A| >= 2.
    static QMonomial tr(const Subset& a);

    std::size_t m() const { return m_; }
    const std::vector<Exponent>& x_exps() const { return x_; }
    const std::vector<Exponent>& n_exps() const { return n_; }
    const std::vector<Subset>& traces() const { return tr_; }
    std::size_t tr_count() const { return tr_.size(); }

    // deg x_i = 1, deg N_i = 2, deg Tr(A) = |A|.
    std::uint64_t degree() const;
    // Degree with x_i and N_i weighted 0.
    std::uint64_t tr_degree() const;
    // Sum of |A|^2 over trace factors; grows when a product is rewritten into a more lopsided one.
    std::uint64_t spread() const;

    // The R-part x^I N^J with the traces dropped.
    QMonomial r_part() const;
    // Removes one copy of each listed trace factor; throws if absent.
    QMonomial without_traces(const std::vector<Subset>& drop) const;
    bool divides(const QMonomial& other) const;
    QMonomial quotient(const QMonomial& divisor) const;

    QMonomial operator*(const QMonomial& other) const;

    std::string to_string() const;
    nlohmann::ordered_json to_json() const;

    friend bool operator==(const QMonomial&, const QMonomial&) = default;

  private:
    std::size_t m_ = 0;
    std::vector<Exponent> x_;
    std::vector<Exponent> n_;
    std::vector<Subset> tr_;
};

/// Canonical total order on Q-monomials: larger tr_degree first, then smaller
/// spread, then larger grading degree, then trace factors lexicographically,
/// then the R-part in weighted grevlex with x_1 > N_1 > x_2 > N_2 > ...
std::strong_ordering compare_qmonomials(const QMonomial& a, const QMonomial& b);

struct QMonomialHash {
    std::size_t operator()(const QMonomial& mono) const noexcept;
};

/// An element of Q: a set of Q-monomials in decreasing canonical order.
class QPoly {
  public:
    QPoly() = default;
    explicit QPoly(std::size_t m);
    explicit QPoly(const QMonomial& mono);
    static QPoly from_terms(std::size_t m, std::vector<QMonomial> terms);

    static QPoly one(std::size_t m) { return QPoly(QMonomial(m)); }
    static QPoly x(std::size_t m, std::size_t i) { return QPoly(QMonomial::x(m, i)); }
    static QPoly norm(std::size_t m, std::size_t i) { return QPoly(QMonomial::norm(m, i)); }
    static QPoly x_pow(const Subset& a) { return QPoly(QMonomial::x_pow(a)); }
    static QPoly norm_pow(const Subset& a) { return QPoly(QMonomial::norm_pow(a)); }
    // Tr with the total conventions Tr(0) = 0 and Tr(Delta_i) = x_i.
    static QPoly tr(const Subset& a);

    std::size_t m() const { return m_; }
    const std::vector<QMonomial>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool contains(const QMonomial& mono) const;
    // Every term has at most one trace factor.
    bool is_tr_linear() const;

    QPoly& operator+=(const QPoly& other);
    friend QPoly operator+(const QPoly& f, const QPoly& g);
    friend QPoly operator*(const QPoly& f, const QPoly& g);
    friend QPoly operator*(const QPoly& f, const QMonomial& mono);

    std::string to_string() const;
    nlohmann::ordered_json to_json() const;
    static QPoly parse(std::size_t m, std::string_view text);

    friend bool operator==(const QPoly&, const QPoly&) = default;

  private:
    std::size_t m_ = 0;
    std::vector<QMonomial> terms_;
};

inline QPoly q_mul(const QPoly& f, const QPoly& g) { return f * g; }

// Common grading degree of all terms; std::nullopt when inhomogeneous. Throws EmptyError on zero.
std::optional<std::uint64_t> q_degree(const QPoly& q);
// Maximum tr_degree over terms. Throws EmptyError on zero.
std::uint64_t tr_degree(const QPoly& q);

/// Evaluates Q-elements in F_2[mV_2] by x_i -> x_i, N_i -> y_i^2 + x_i y_i,
/// Tr(A) -> tr(A). Caches the images of the generators.
class PiEvaluator {
  public:
    explicit PiEvaluator(std::size_t m);

    std::size_t m() const { return m_; }
    const Poly& trace(const Subset& a) const;
    Poly eval(const QMonomial& mono) const;
    Poly eval(const QPoly& q) const;

  private:
    std::size_t m_;
    std::vector<Poly> norms_;
    std::vector<Poly> traces_;  // indexed by subset value
};

Poly pi_eval(const QPoly& q);

}  // namespace c2inv
