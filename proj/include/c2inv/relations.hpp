#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "c2inv/invariants.hpp"
#include "c2inv/qring.hpp"
#include "c2inv/subset.hpp"

namespace c2inv {

enum class Family { I, II, IIIa, IIIb, IIIc };

// Which quadratic family completes the type I relations into a basis.
enum class Flavor { I, II, III };

std::string family_name(Family family);
std::string flavor_name(Flavor flavor);
Flavor parse_flavor(const std::string& text);

struct Relation {
    Family family = Family::I;
    Subset a;
    std::optional<Subset> b;
    // j for IIIa, i for IIIb.
    std::optional<std::size_t> index;
    QPoly element;

    std::uint64_t degree() const;
    bool is_quadratic() const { return family != Family::I; }
    std::string id() const;
    nlohmann::ordered_json to_json() const;
};

// Sum over 0 < L < A of x^(A-L) Tr(L). Requires |A| >= 3.
Relation type_I(const Subset& a);

// Tr(A)Tr(B) + sum_{L<I} x^(I-L) N^L Tr(I-L+J+K) + N^I sum_{L<J} x^(J-L) Tr(L+K),
// with I = A & B, J = A - B, K = B - A, taken in the given orientation.
Relation type_II(const Subset& a, const Subset& b);

// The orientation used in the basis: |A| >= |B|, ties broken by larger bitstring first.
std::pair<Subset, Subset> type_II_orientation(const Subset& a, const Subset& b);

// Canonical type III relation for the unordered pair {A, B}: disjoint pairs are
// ordered |A| >= |B| and use j = l(B); nested pairs are ordered B <= A and use
// i = l(A & B); overlapping incomparable pairs use case (c).
Relation type_III(const Subset& a, const Subset& b);

// Type III relation in exactly the given orientation with an explicit index
// (j in B for case (a), i in A & B for case (b); ignored and must be empty for (c)).
Relation type_III_with_index(const Subset& a, const Subset& b, std::optional<std::size_t> index);

std::pair<Subset, Subset> type_III_orientation(const Subset& a, const Subset& b);

// Unordered pairs {A, B} (A = B allowed) of subsets with |A|, |B| >= 2.
std::vector<std::pair<Subset, Subset>> trace_pairs(std::size_t m);

// Type I relations for |A| >= 3 followed by one quadratic relation per trace
// pair. Empty for m <= 1.
std::vector<Relation> relation_basis(std::size_t m, Flavor flavor);

// 2^m - C(m,2) - m - 1 + C(2^m - m, 2).
BigInt count_relations(std::size_t m);

}  // namespace c2inv
