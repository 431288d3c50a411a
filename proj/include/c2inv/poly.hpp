#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "c2inv/subset.hpp"

namespace c2inv {

using Exponent = std::uint32_t;

/// A monomial in y_1, x_1, ..., y_m, x_m over F_2.
///
/// Exponents are stored along the variable sequence y_1, x_1, y_2, x_2, ...,
/// which is also the sequence the grevlex order reads from the right.
class Monomial {
  public:
    Monomial() = default;
    // The constant monomial 1 in 2m variables.
    explicit Monomial(std::size_t m);
    Monomial(std::size_t m, std::vector<Exponent> exps);

    static Monomial x(std::size_t m, std::size_t i, Exponent power = 1);
    static Monomial y(std::size_t m, std::size_t i, Exponent power = 1);
    // x^A and y^A for a zero/one sequence.
    static Monomial x_pow(const Subset& a);
    static Monomial y_pow(const Subset& a);

    std::size_t m() const { return m_; }
    const std::vector<Exponent>& exps() const { return exps_; }
    Exponent x_exp(std::size_t i) const { return exps_[2 * (i - 1) + 1]; }
    Exponent y_exp(std::size_t i) const { return exps_[2 * (i - 1)]; }
    std::uint64_t degree() const;
    bool is_one() const;

    Monomial operator*(const Monomial& other) const;
    Monomial& operator*=(const Monomial& other);

    std::string to_string() const;

    friend bool operator==(const Monomial&, const Monomial&) = default;

  private:
    std::size_t m_ = 0;
    std::vector<Exponent> exps_;
};

// Graded reverse lexicographic comparison with y_1 > x_1 > y_2 > ... > x_m.
std::strong_ordering compare_monomials(const Monomial& a, const Monomial& b);

struct MonomialHash {
    std::size_t operator()(const Monomial& mono) const noexcept;
};

/// A polynomial over F_2: a set of monomials, kept in strictly decreasing
/// grevlex order.
class Poly {
  public:
    Poly() = default;
    explicit Poly(std::size_t m);
    explicit Poly(const Monomial& mono);
    // Duplicated monomials cancel in pairs.
    static Poly from_terms(std::size_t m, std::vector<Monomial> terms);

    static Poly one(std::size_t m) { return Poly(Monomial(m)); }
    static Poly x(std::size_t m, std::size_t i) { return Poly(Monomial::x(m, i)); }
    static Poly y(std::size_t m, std::size_t i) { return Poly(Monomial::y(m, i)); }

    std::size_t m() const { return m_; }
    const std::vector<Monomial>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool contains(const Monomial& mono) const;

    const Monomial& lead_term() const;
    Poly pow(unsigned exponent) const;

    Poly& operator+=(const Poly& other);
    Poly& operator*=(const Poly& other);
    friend Poly operator+(const Poly& f, const Poly& g);
    friend Poly operator*(const Poly& f, const Poly& g);
    friend Poly operator*(const Poly& f, const Monomial& mono);

    std::string to_string() const;
    static Poly parse(std::size_t m, std::string_view text);

    friend bool operator==(const Poly&, const Poly&) = default;

  private:
    std::size_t m_ = 0;
    std::vector<Monomial> terms_;
};

inline Poly add(const Poly& f, const Poly& g) { return f + g; }
inline Poly mul(const Poly& f, const Poly& g) { return f * g; }
// Throws EmptyError for the zero polynomial.
inline const Monomial& lead_term(const Poly& f) { return f.lead_term(); }

}  // namespace c2inv
