#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "irrcount/group.hpp"
#include "irrcount/number_field.hpp"

namespace irrcount {

inline constexpr double kEulerGamma = 0.57721566490153286061;

// Value of a series truncated at norms < cutoff, with a rigorous bound on
// the discarded tail, so (value - error_bound, value + error_bound)
// brackets the limit.
struct TruncatedSum {
    double value;
    double cutoff;
    double error_bound;
};

struct GValueInputs {
    double a_K;      // residue of the quadratic field's zeta at s = 1
    double a_L;      // residue for its degree-2 unramified extension
    TruncatedSum S;  // odd-power prime sum over the nonprincipal class
};

// c_D, c_{D-1} and (when D >= 2) c_{D-2} together with the asymptotic
// coefficients they induce, plus the inputs they were computed from.
struct CoefficientSet {
    double c_D;
    double c_Dm1;
    std::optional<double> c_Dm2;
    int D;
    std::uint64_t h;
    double C;
    double B;  // 0 when D < 2, where only the leading term is defined
    std::vector<double> g_class;
    std::vector<double> z2_class;
};

// Sum over prime ideals in one class of (1/2)[log((N+1)/(N-1)) - 2/N]
// (the tail of sum_{m odd >= 3} 1/(m N^m)) truncated at norm < x, split
// primes counted twice. error_bound = 1/(3(x-2)^2), needs x > 3.
TruncatedSum tail_sum_S(const ImaginaryQuadraticField& K, double x, bool want_principal = false);

// log a_K - (1/2) log a_L - S, the class-number-2 closed form; the error
// bound is S's, unchanged.
TruncatedSum g_value_h2(const GValueInputs& inputs);

// sum N^{-j} over prime ideals of the selected class with norm < x;
// error_bound = 2 (x-1)^{1-j} / (j-1). Needs j >= 2, x > 3.
TruncatedSum power_sum_z(const ImaginaryQuadraticField& K, bool nonprincipal, int j, double x);

// Closed forms for the top three coefficients. g and z2 are indexed by
// the canonical class order (identity first).
CoefficientSet coefficients_top(const FiniteAbelianGroup& G, const std::vector<double>& g,
                                const std::vector<double>& z2);

// The general nested-sum coefficient c_mu over all minimal zero-sum
// multisets of sizes mu..D (sizes below max(1,mu) excluded). z is a
// per-class matrix, z[i][j-2] holding z_{ij} for j = 2..D.
double c_mu_general(const FiniteAbelianGroup& G, int mu, const std::vector<double>& g,
                    const std::vector<std::vector<double>>& z);

// I_0..I_max_m where sum_{m>=1} t^{m-1} I_m = exp(gamma t +
// sum_{n>=2} (-1)^{n-1} zeta(n) t^n / n) = 1/(t Gamma(t)). max_m <= 30.
std::vector<double> im_constants(int max_m);

// e_j = sum_{nu=j}^{k} (nu!/j!) g_at_1[nu] I_{nu-j} for j = 0..k-1.
std::vector<double> e_coefficients(const std::vector<double>& g_at_1, int k);

// Leading and subleading asymptotic coefficients: C = D c_D h^{-D} and,
// for D >= 2, B = (D-1) c_{D-1} h^{1-D} + D (D-1) c_D h^{-D} gamma.
std::pair<double, double> asymptotic_CB(const FiniteAbelianGroup& G, const std::vector<double>& g,
                                        const std::vector<double>& z2);

// Cyclic closed form: C = phi(h)/((h-1)! h^h) and B built from the sum of
// g values over the generator classes; a(h) = 1/2 for h = 3, else 1.
std::pair<double, double> asymptotic_CB_cyclic(int h, double sum_g_generators);

int mobius(long long n);
long long totient(long long n);

// c_h(j) = phi(h) mu(h/gcd(h,j)) / phi(h/gcd(h,j)), always an integer.
long long ramanujan_sum(long long h, long long j);

// zeta(n) for integer n >= 2 by direct summation plus an integral-tail
// correction; accurate to ~1e-15.
double zeta_value(int n);

// Residue inputs and the truncated S for the two tabulated class-number-2
// fields, cut off so the tail bound is below tol.
GValueInputs tabulated_g_inputs(const ImaginaryQuadraticField& K, double tol = 5e-5);

// Smallest integer cutoff x with 1/(3(x-2)^2) < tol.
double choose_cutoff(double tol);

// |g_value_h2 - (sum_{d|2} mu(d)/d log a_{L_d} - S)| with L_1 = K and
// L_2 the extension; algebraically zero at h = 2, so the residual is
// pure floating-point round-off.
double theorem2_check_h2(const ImaginaryQuadraticField& K);
// Same residual with the right-hand side's a_L replaced, to measure an
// injected mismatch.
double theorem2_check_h2(const GValueInputs& inputs, double a_L_rhs);

}  // namespace irrcount
