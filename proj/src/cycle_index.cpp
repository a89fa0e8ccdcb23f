#include "irrcount/cycle_index.hpp"

#include <algorithm>
#include <stdexcept>
#include <type_traits>

namespace irrcount {

namespace {

constexpr int kMaxK = 20;

void check_k(int k, int lo) {
    if (k < lo || k > kMaxK) throw std::invalid_argument("cycle_index: k out of range");
}

// Partitions of n into parts between min_part and n, emitted as
// multiplicity vectors of length k.
void gen_types(int n, int min_part, int k, std::vector<int>& nu,
               std::vector<CycleType>& out) {
    if (n == 0) {
        out.push_back(CycleType{nu});
        return;
    }
    for (int part = min_part; part <= n; ++part) {
        ++nu[part - 1];
        gen_types(n - part, part, k, nu, out);
        --nu[part - 1];
    }
}

template <typename T>
T pow_t(const T& base, int e) {
    T r(1);
    for (int i = 0; i < e; ++i) r = r * base;
    return r;
}

Rational type_coeff(const CycleType& t) {
    Rational den(1);
    for (std::size_t j = 1; j <= t.nu.size(); ++j) {
        int m = t.nu[j - 1];
        den = den * Rational::factorial(m) * pow_t(Rational(static_cast<long long>(j)), m);
    }
    return Rational(1) / den;
}

template <typename T>
T evaluate_pk_impl(int k, const std::vector<T>& z) {
    check_k(k, 0);
    if (static_cast<int>(z.size()) < k)
        throw std::invalid_argument("evaluate_pk: need at least k values");
    T total(0);
    for (const PkTerm& term : pk_table(k).terms) {
        T prod(1);
        for (int j = 1; j <= k; ++j)
            if (term.type.nu[j - 1]) prod = prod * pow_t(z[j - 1], term.type.nu[j - 1]);
        if constexpr (std::is_same_v<T, Rational>)
            total = total + term.coeff * prod;
        else
            total = total + term.coeff.to_double() * prod;
    }
    return total;
}

template <typename T>
T rho_impl(int k, int nu1, const std::vector<T>& z_tail) {
    check_k(k, 0);
    if (nu1 < 0 || nu1 > k) throw std::invalid_argument("rho: need 0 <= nu1 <= k");
    int n = k - nu1;
    if (static_cast<int>(z_tail.size()) < std::max(0, n - 1))
        throw std::invalid_argument("rho: need z_j up to j = k - nu1");
    // partitions of n into parts >= 2; empty partition (n = 0) gives 1,
    // n = 1 has none and gives 0
    T total(0);
    std::vector<int> nu(n >= 2 ? n - 1 : 0);  // nu[j-2] = multiplicity of part j
    auto rec = [&](auto&& self, int rem, int min_part) -> void {
        if (rem == 0) {
            T prod(1);
            Rational den(1);
            for (int j = 2; j <= n; ++j) {
                int m = nu[j - 2];
                if (!m) continue;
                den = den * Rational::factorial(m) * pow_t(Rational(j), m);
                prod = prod * pow_t(z_tail[j - 2], m);
            }
            if constexpr (std::is_same_v<T, Rational>)
                total = total + prod / den;
            else
                total = total + prod / den.to_double();
            return;
        }
        for (int part = min_part; part <= rem; ++part) {
            ++nu[part - 2];
            self(self, rem - part, part);
            --nu[part - 2];
        }
    };
    rec(rec, n, 2);
    return total;
}

template <typename T>
T oracle_impl(int k, const std::vector<T>& x) {
    if (k < 0 || k > 6) throw std::invalid_argument("symmetric_sum_oracle: k out of range");
    if (x.size() > 8) throw std::invalid_argument("symmetric_sum_oracle: at most 8 values");
    T total(0);
    auto rec = [&](auto&& self, int depth, std::size_t start, T prod) -> void {
        if (depth == k) {
            total = total + prod;
            return;
        }
        for (std::size_t i = start; i < x.size(); ++i) self(self, depth + 1, i, prod * x[i]);
    };
    rec(rec, 0, 0, T(1));
    return total;
}

template <typename T>
std::vector<T> power_sums_impl(const std::vector<T>& x, int k) {
    std::vector<T> p(k, T(0));
    for (int j = 1; j <= k; ++j)
        for (const T& v : x) p[j - 1] = p[j - 1] + pow_t(v, j);
    return p;
}

}  // namespace

std::vector<CycleType> cycle_types(int k) {
    check_k(k, 1);
    std::vector<CycleType> out;
    std::vector<int> nu(k, 0);
    gen_types(k, 1, k, nu, out);
    std::sort(out.begin(), out.end());
    return out;
}

PkTable pk_table(int k) {
    check_k(k, 0);
    PkTable t{k, {}};
    if (k == 0) {
        t.terms.push_back(PkTerm{CycleType{{}}, Rational(1)});
        return t;
    }
    for (const CycleType& ct : cycle_types(k)) t.terms.push_back(PkTerm{ct, type_coeff(ct)});
    return t;
}

double evaluate_pk(int k, const std::vector<double>& z) { return evaluate_pk_impl(k, z); }
Rational evaluate_pk(int k, const std::vector<Rational>& z) { return evaluate_pk_impl(k, z); }

double rho(int k, int nu1, const std::vector<double>& z_tail) { return rho_impl(k, nu1, z_tail); }
Rational rho(int k, int nu1, const std::vector<Rational>& z_tail) { return rho_impl(k, nu1, z_tail); }

double symmetric_sum_oracle(int k, const std::vector<double>& x) { return oracle_impl(k, x); }
Rational symmetric_sum_oracle(int k, const std::vector<Rational>& x) { return oracle_impl(k, x); }

std::vector<double> power_sums(const std::vector<double>& x, int k) { return power_sums_impl(x, k); }
std::vector<Rational> power_sums(const std::vector<Rational>& x, int k) { return power_sums_impl(x, k); }

}  // namespace irrcount
