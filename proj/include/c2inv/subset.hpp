#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace c2inv {

inline constexpr std::size_t kMaxSummands = 30;

/// A zero/one sequence A = (a_1, ..., a_m), equivalently a subset of {1..m}.
///
/// Positions are 1-based. Internally position i is stored at bit (m - i), so
/// the integer value of the mask equals the bitstring a_1 a_2 ... a_m read as a
/// binary number; comparisons between subsets use that value.
class Subset {
  public:
    Subset() = default;
    explicit Subset(std::size_t m);

    static Subset from_bits(std::size_t m, std::uint32_t value);
    static Subset parse(std::string_view bits);
    static Subset parse(std::size_t m, std::string_view bits);
    static Subset delta(std::size_t m, std::size_t position);
    static Subset full(std::size_t m);

    std::size_t m() const { return m_; }
    std::uint32_t value() const { return bits_; }
    std::size_t size() const;
    bool empty() const { return bits_ == 0; }
    bool contains(std::size_t position) const;

    Subset with(std::size_t position) const;
    Subset without(std::size_t position) const;

    // l(A): the first position carrying a one. Throws EmptyError for A = 0.
    std::size_t leading() const;
    // A': A with position l(A) cleared.
    Subset without_leading() const;

    // Componentwise A <= B.
    bool subset_of(const Subset& other) const;
    bool disjoint(const Subset& other) const;

    std::vector<std::size_t> positions() const;

    // Every L with L <= A and L != A, in increasing value order (includes 0).
    std::vector<Subset> proper_subsets() const;

    std::string to_string() const;

    friend Subset operator&(const Subset& a, const Subset& b);
    friend Subset operator|(const Subset& a, const Subset& b);
    // Set difference A \ B.
    friend Subset operator-(const Subset& a, const Subset& b);
    // Sum of zero/one sequences; the operands must be disjoint.
    friend Subset operator+(const Subset& a, const Subset& b);

    friend bool operator==(const Subset& a, const Subset& b) = default;
    friend std::strong_ordering operator<=>(const Subset& a, const Subset& b);

  private:
    std::uint32_t bit_of(std::size_t position) const;

    std::size_t m_ = 0;
    std::uint32_t bits_ = 0;
};

// All subsets of {1..m} with |A| >= min_size, ordered by increasing value.
std::vector<Subset> subsets_of_size_at_least(std::size_t m, std::size_t min_size);

}  // namespace c2inv

template <>
struct std::hash<c2inv::Subset> {
    std::size_t operator()(const c2inv::Subset& s) const noexcept
    {
        return std::hash<std::uint64_t>{}((static_cast<std::uint64_t>(s.m()) << 32) | s.value());
    }
};
