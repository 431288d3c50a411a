#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "c2inv/poly.hpp"
#include "c2inv/subset.hpp"

namespace c2inv {

// The generator of C_2 acting by y_i -> y_i + x_i, x_i -> x_i.
Poly sigma(const Poly& f);
bool is_invariant(const Poly& f);

// tr(A) = y^A + sigma(y^A). transfer(0) = 0 and transfer(Delta_i) = x_i.
Poly transfer(const Subset& a);
// The same trace expanded as the sum over L < A of x^(A-L) y^L.
Poly transfer_by_expansion(const Subset& a);

// Nbar^A = prod (y_i + x_i)^(a_i) for an arbitrary exponent sequence.
Poly nbar_pow(std::size_t m, const std::vector<Exponent>& exps);
Poly nbar_pow(const Subset& a);

// N_i = y_i^2 + x_i y_i.
Poly norm(std::size_t m, std::size_t i);

struct NamedGenerator {
    std::string name;
    Poly poly;
    std::size_t degree;
};

/// The generators x_i, N_i, tr(A) (|A| >= 2) of F_2[mV_2]^{C_2}.
struct GeneratorSet {
    std::size_t m = 0;
    std::vector<Poly> xs;
    std::vector<Poly> norms;
    std::vector<std::pair<Subset, Poly>> traces;

    std::size_t count() const { return xs.size() + norms.size() + traces.size(); }
    // x1..xm, N1..Nm, then tr_<bits> by increasing subset value.
    std::vector<NamedGenerator> named() const;
};

GeneratorSet generator_set(std::size_t m);

nlohmann::ordered_json to_json(const GeneratorSet& gens);

using BigInt = boost::multiprecision::cpp_int;

BigInt binomial(long long n, long long k);

// p^m - C(m+2p-2, m) + m C(m+p-2, m) + C(m, 2) + 2m.
BigInt count_minimal_generators(unsigned p, unsigned m);

}  // namespace c2inv
