#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "irrcount/number_field.hpp"

namespace irrcount {

enum class ElementClass { zero, unit, prime, irreducible_nonprime, reducible };

const char* to_string(ElementClass c);

// One row of a count-vs-prediction comparison. M counts principal ideals
// generated by irreducibles with norm <= x; P the prime ones among them;
// pair_count the products of two nonprincipal primes (so M = P +
// pair_count when h = 2). err_scale is the error-term scale
// x (loglog x)^{D-3} / log x for D >= 3, else x / (log x)^{3/2}, reported
// for context only.
struct CountReport {
    double x;
    std::uint64_t M;
    std::uint64_t P;
    std::uint64_t pair_count;
    std::optional<double> predicted;
    std::optional<double> ratio;
    double err_scale;
};

struct BruteElement {
    long long a, b;      // canonical associate representative
    std::uint64_t norm;
    bool irreducible;
    bool prime;
};

// N(a + b omega) through the norm form; throws rather than overflow.
long long element_norm(const ImaginaryQuadraticField& K, long long a, long long b);

// Ideal-level count via the prime-ideal stream and a two-pointer pair
// sweep over nonprincipal norms. h <= 2, x <= 1e9.
CountReport count_M(const ImaginaryQuadraticField& K, double x);

// Element-level oracle: enumerates the norm <= x lattice points, picks one
// representative per associate class, and tests divisibility by smaller
// irreducibles directly. x <= 2000.
std::vector<BruteElement> brute_force_elements(const ImaginaryQuadraticField& K, double x);
CountReport brute_force_M(const ImaginaryQuadraticField& K, double x);

// Classification by the prime-ideal factorization of the norm: omega = 1
// gives a prime, omega = 2 with every prime factor nonprincipal gives an
// irreducible that is not prime, anything longer is reducible.
ElementClass classify_element(const ImaginaryQuadraticField& K, long long a, long long b);

// Two-term asymptotic C (x/log x)(loglog x)^{D-1} + B (x/log x)(loglog
// x)^{D-2}; absent when x < 3 or no g value is tabulated for the field.
std::optional<double> predicted_M(const ImaginaryQuadraticField& K, double x);

std::vector<CountReport> compare_report(const ImaginaryQuadraticField& K,
                                        const std::vector<double>& xs);

}  // namespace irrcount
