#pragma once

#include <vector>

#include "irrcount/rational.hpp"

namespace irrcount {

// Multiplicity vector of a partition of k: nu[j-1] = number of parts of
// size j, so sum_j j*nu[j-1] = k.
struct CycleType {
    std::vector<int> nu;
    friend bool operator==(const CycleType&, const CycleType&) = default;
    friend auto operator<=>(const CycleType&, const CycleType&) = default;
};

struct PkTerm {
    CycleType type;
    Rational coeff;  // 1 / (prod_j nu_j! * j^nu_j)
};

struct PkTable {
    int k;
    std::vector<PkTerm> terms;
};

// All cycle types of S_k, lexicographic in the multiplicity vector. k <= 20.
std::vector<CycleType> cycle_types(int k);

// The polynomial P_k as an explicit term table; P_0 is the constant 1.
PkTable pk_table(int k);

// Evaluates P_k at z = (z_1, ..., z_k); z may be longer, never shorter.
double evaluate_pk(int k, const std::vector<double>& z);
Rational evaluate_pk(int k, const std::vector<Rational>& z);

// Coefficient of z_1^nu1 / nu1! in P_k as a polynomial in z_2, z_3, ...:
// the sum over types of k - nu1 with no size-1 parts. z_tail[j-2] holds
// z_j for j = 2..k; entries beyond k - nu1 are ignored.
double rho(int k, int nu1, const std::vector<double>& z_tail);
Rational rho(int k, int nu1, const std::vector<Rational>& z_tail);

// Complete symmetric sum of degree k: sum over nondecreasing index tuples
// (i_1 <= ... <= i_k) of x_{i_1}*...*x_{i_k}. Direct enumeration, meant as
// an independent cross-check of evaluate_pk at power-sum arguments.
// Caps: k <= 6, |x| <= 8.
double symmetric_sum_oracle(int k, const std::vector<double>& x);
Rational symmetric_sum_oracle(int k, const std::vector<Rational>& x);

// Power sums p_j = sum_i x_i^j for j = 1..k.
std::vector<double> power_sums(const std::vector<double>& x, int k);
std::vector<Rational> power_sums(const std::vector<Rational>& x, int k);

}  // namespace irrcount
