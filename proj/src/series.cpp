#include "irrcount/series.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "irrcount/cycle_index.hpp"

namespace irrcount {

namespace {

struct Kahan {
    double sum = 0.0, comp = 0.0;
    void add(double v) {
        double y = v - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
};

double inv_factorial_product(const ZeroSumPattern& pattern) {
    double prod = 1.0;
    for (auto& [e, k] : pattern.counts) {
        double f = 1.0;
        for (int i = 2; i <= k; ++i) f *= i;
        prod /= f;
    }
    return prod;
}

double sum_kg(const ZeroSumPattern& pattern, const std::vector<double>& g) {
    double s = 0.0;
    for (auto& [e, k] : pattern.counts) s += k * g[e];
    return s;
}

void check_class_vector(const FiniteAbelianGroup& G, const std::vector<double>& v,
                        const char* name) {
    if (v.size() != G.order())
        throw std::invalid_argument(std::string(name) + ": need one entry per class");
}

double factorial_d(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace

TruncatedSum tail_sum_S(const ImaginaryQuadraticField& K, double x, bool want_principal) {
    if (!(x > 3)) throw std::invalid_argument("tail_sum_S: bound requires x > 3");
    if (K.class_number() > 2) throw std::invalid_argument("tail_sum_S: class number above 2");
    Kahan acc;
    for_each_prime_ideal(K, static_cast<std::uint64_t>(x), [&](const PrimeIdealRecord& rec) {
        if (!(static_cast<double>(rec.norm) < x)) return;
        if (rec.principal != want_principal) return;
        double n = static_cast<double>(rec.norm);
        acc.add(rec.ideals_above * 0.5 * (std::log((n + 1.0) / (n - 1.0)) - 2.0 / n));
    });
    return {acc.sum, x, 1.0 / (3.0 * (x - 2.0) * (x - 2.0))};
}

TruncatedSum g_value_h2(const GValueInputs& inputs) {
    if (!(inputs.a_K > 0) || !(inputs.a_L > 0))
        throw std::invalid_argument("g_value_h2: residues must be positive");
    double value = std::log(inputs.a_K) - 0.5 * std::log(inputs.a_L) - inputs.S.value;
    return {value, inputs.S.cutoff, inputs.S.error_bound};
}

TruncatedSum power_sum_z(const ImaginaryQuadraticField& K, bool nonprincipal, int j, double x) {
    if (j < 2) throw std::invalid_argument("power_sum_z: need j >= 2");
    if (!(x > 3)) throw std::invalid_argument("power_sum_z: need x > 3");
    if (K.class_number() > 2) throw std::invalid_argument("power_sum_z: class number above 2");
    Kahan acc;
    for_each_prime_ideal(K, static_cast<std::uint64_t>(x), [&](const PrimeIdealRecord& rec) {
        if (!(static_cast<double>(rec.norm) < x)) return;
        if (rec.principal == nonprincipal) return;
        acc.add(rec.ideals_above * std::pow(static_cast<double>(rec.norm), -j));
    });
    double bound = 2.0 * std::pow(x - 1.0, 1.0 - j) / (j - 1.0);
    return {acc.sum, x, bound};
}

CoefficientSet coefficients_top(const FiniteAbelianGroup& G, const std::vector<double>& g,
                                const std::vector<double>& z2) {
    check_class_vector(G, g, "coefficients_top g");
    check_class_vector(G, z2, "coefficients_top z2");
    int D = davenport_constant(G);
    auto patterns = [&](int m) {
        return m >= 1 ? enumerate_minimal_zero_sums(G, m) : std::vector<ZeroSumPattern>{};
    };
    std::vector<ZeroSumPattern> dD = patterns(D);
    std::vector<ZeroSumPattern> dD1 = patterns(D - 1);

    CoefficientSet out;
    out.D = D;
    out.h = G.order();
    out.g_class = g;
    out.z2_class = z2;

    double cD = 0.0;
    for (auto& p : dD) cD += inv_factorial_product(p);
    double cD1 = 0.0;
    for (auto& p : dD1) cD1 += inv_factorial_product(p);
    for (auto& p : dD) cD1 += inv_factorial_product(p) * sum_kg(p, g);
    out.c_D = cD;
    out.c_Dm1 = cD1;

    if (D >= 2) {
        std::vector<ZeroSumPattern> dD2 = patterns(D - 2);
        double cD2 = 0.0;
        for (auto& p : dD2) cD2 += inv_factorial_product(p);
        for (auto& p : dD1) cD2 += inv_factorial_product(p) * sum_kg(p, g);
        for (auto& p : dD) {
            double cross = 0.0;
            for (std::size_t i = 0; i < p.counts.size(); ++i)
                for (std::size_t j = i + 1; j < p.counts.size(); ++j)
                    cross += p.counts[i].second * p.counts[j].second *
                             g[p.counts[i].first] * g[p.counts[j].first];
            double diag = 0.0;
            for (auto& [e, k] : p.counts)
                diag += k * (k - 1) * (0.5 * g[e] * g[e] + 0.5 * z2[e]);
            cD2 += inv_factorial_product(p) * (cross + diag);
        }
        out.c_Dm2 = cD2;
    }

    double h = static_cast<double>(G.order());
    out.C = D * cD * std::pow(h, -D);
    out.B = D >= 2
                ? (D - 1) * cD1 * std::pow(h, 1 - D) + D * (D - 1) * cD * std::pow(h, -D) * kEulerGamma
                : 0.0;
    return out;
}

double c_mu_general(const FiniteAbelianGroup& G, int mu, const std::vector<double>& g,
                    const std::vector<std::vector<double>>& z) {
    check_class_vector(G, g, "c_mu_general g");
    if (z.size() != G.order())
        throw std::invalid_argument("c_mu_general z: need one row per class");
    int D = davenport_constant(G);
    if (mu < 0 || mu > D) throw std::invalid_argument("c_mu_general: need 0 <= mu <= D");
    for (auto& row : z)
        if (static_cast<int>(row.size()) < std::max(0, D - 1))
            throw std::invalid_argument("c_mu_general z: rows must reach j = D");

    double total = 0.0;
    for (int nu = std::max(1, mu) - mu; nu <= D - mu; ++nu) {
        int m = mu + nu;
        for (const ZeroSumPattern& p : enumerate_minimal_zero_sums(G, m)) {
            // per-class factors T_i(v) = sum_{lam<=v} g_i^{v-lam}
            // rho_{k_i,k_i-lam} / ((v-lam)! (k_i-v)!); convolve over the
            // support classes and take the coefficient of nu
            std::vector<double> conv{1.0};
            for (auto& [e, k] : p.counts) {
                std::vector<double> t(k + 1, 0.0);
                for (int v = 0; v <= k; ++v)
                    for (int lam = 0; lam <= v; ++lam)
                        t[v] += std::pow(g[e], v - lam) * rho(k, k - lam, z[e]) /
                                (factorial_d(v - lam) * factorial_d(k - v));
                std::vector<double> next(std::min<std::size_t>(conv.size() + k, nu + 1), 0.0);
                for (std::size_t a = 0; a < conv.size(); ++a)
                    for (int b = 0; b <= k && a + b < next.size(); ++b)
                        next[a + b] += conv[a] * t[b];
                conv = std::move(next);
            }
            if (static_cast<std::size_t>(nu) < conv.size()) total += conv[nu];
        }
    }
    return total;
}

double zeta_value(int n) {
    if (n < 2) throw std::invalid_argument("zeta_value: need n >= 2");
    // stop where k^{-n} drops below 1e-22; descending order so small terms
    // accumulate first
    double kmax = std::min(1e6, std::pow(10.0, 22.0 / n));
    std::uint64_t K = static_cast<std::uint64_t>(kmax) + 1;
    Kahan acc;
    for (std::uint64_t k = K; k >= 1; --k) acc.add(std::pow(static_cast<double>(k), -n));
    // Euler-Maclaurin tail from K+1
    double a = static_cast<double>(K + 1);
    double tail = std::pow(a, 1.0 - n) / (n - 1.0) + 0.5 * std::pow(a, -n) +
                  (n / 12.0) * std::pow(a, -n - 1.0);
    return acc.sum + tail;
}

std::vector<double> im_constants(int max_m) {
    if (max_m < 0 || max_m > 30) throw std::invalid_argument("im_constants: need 0 <= max_m <= 30");
    int deg = std::max(0, max_m - 1);
    std::vector<double> a(deg + 1, 0.0);
    if (deg >= 1) a[1] = kEulerGamma;
    for (int n = 2; n <= deg; ++n) a[n] = ((n % 2 == 0) ? -1.0 : 1.0) * zeta_value(n) / n;
    // exp of a power series: e_0 = 1, e_n = (1/n) sum_j j a_j e_{n-j}
    std::vector<double> e(deg + 1, 0.0);
    e[0] = 1.0;
    for (int n = 1; n <= deg; ++n) {
        double s = 0.0;
        for (int j = 1; j <= n; ++j) s += j * a[j] * e[n - j];
        e[n] = s / n;
    }
    std::vector<double> I(max_m + 1, 0.0);
    for (int m = 1; m <= max_m; ++m) I[m] = e[m - 1];
    return I;
}

std::vector<double> e_coefficients(const std::vector<double>& g_at_1, int k) {
    if (k < 1) throw std::invalid_argument("e_coefficients: need k >= 1");
    if (g_at_1.size() != static_cast<std::size_t>(k) + 1)
        throw std::invalid_argument("e_coefficients: need g_0..g_k");
    std::vector<double> I = im_constants(k);
    std::vector<double> e(k, 0.0);
    for (int j = 0; j < k; ++j) {
        double s = 0.0;
        for (int nu = j; nu <= k; ++nu)
            s += factorial_d(nu) / factorial_d(j) * g_at_1[nu] * I[nu - j];
        e[j] = s;
    }
    return e;
}

std::pair<double, double> asymptotic_CB(const FiniteAbelianGroup& G, const std::vector<double>& g,
                                        const std::vector<double>& z2) {
    CoefficientSet cs = coefficients_top(G, g, z2);
    return {cs.C, cs.B};
}

std::pair<double, double> asymptotic_CB_cyclic(int h, double sum_g_generators) {
    if (h < 2) throw std::invalid_argument("asymptotic_CB_cyclic: need h >= 2");
    double phi = static_cast<double>(totient(h));
    double a_h = h == 3 ? 0.5 : 1.0;
    double hD = std::pow(static_cast<double>(h), h);
    double C = phi / (factorial_d(h - 1) * hD);
    double B = phi * kEulerGamma / (factorial_d(h - 2) * hD) +
               (h - 1) / std::pow(static_cast<double>(h), h - 1) *
                   (phi * a_h / factorial_d(h - 2) + sum_g_generators / factorial_d(h - 1));
    return {C, B};
}

int mobius(long long n) {
    if (n < 1) throw std::invalid_argument("mobius: need n >= 1");
    int sign = 1;
    for (long long q = 2; q * q <= n; ++q) {
        if (n % q) continue;
        n /= q;
        if (n % q == 0) return 0;
        sign = -sign;
    }
    if (n > 1) sign = -sign;
    return sign;
}

long long totient(long long n) {
    if (n < 1) throw std::invalid_argument("totient: need n >= 1");
    long long result = n;
    for (long long q = 2; q * q <= n; ++q) {
        if (n % q) continue;
        while (n % q == 0) n /= q;
        result -= result / q;
    }
    if (n > 1) result -= result / n;
    return result;
}

long long ramanujan_sum(long long h, long long j) {
    if (h < 1) throw std::invalid_argument("ramanujan_sum: need h >= 1");
    long long r = j % h;
    if (r < 0) r += h;
    long long d = std::gcd(h, r);
    long long q = h / d;
    long long mu = mobius(q);
    // phi(h) mu(q) / phi(q) is integral since phi(q) | phi(h) for q | h
    return totient(h) * mu / totient(q);
}

double choose_cutoff(double tol) {
    if (!(tol > 0)) throw std::invalid_argument("choose_cutoff: need tol > 0");
    double x = std::ceil(2.0 + std::sqrt(1.0 / (3.0 * tol)));
    while (!(1.0 / (3.0 * (x - 2.0) * (x - 2.0)) < tol)) x += 1.0;
    return x;
}

GValueInputs tabulated_g_inputs(const ImaginaryQuadraticField& K, double tol) {
    TabulatedField fk, fl;
    if (K.d() == -5) {
        fk = TabulatedField::K1;
        fl = TabulatedField::L1;
    } else if (K.d() == -15) {
        fk = TabulatedField::K2;
        fl = TabulatedField::L2;
    } else {
        throw std::invalid_argument("tabulated_g_inputs: extension residue only known for d = -5, -15");
    }
    double x = choose_cutoff(tol);
    return {residue(tabulated_field_data(fk)), residue(tabulated_field_data(fl)),
            tail_sum_S(K, x, false)};
}

double theorem2_check_h2(const GValueInputs& inputs, double a_L_rhs) {
    double lhs = g_value_h2(inputs).value;
    // sum over d | 2 of mu(d)/d log a_{L_d}, L_1 = K, L_2 = L
    double rhs = 0.0;
    for (long long d : {1ll, 2ll})
        rhs += static_cast<double>(mobius(d)) / d * std::log(d == 1 ? inputs.a_K : a_L_rhs);
    rhs -= inputs.S.value;
    return std::fabs(lhs - rhs);
}

double theorem2_check_h2(const ImaginaryQuadraticField& K) {
    if (K.class_number() != 2) throw std::invalid_argument("theorem2_check_h2: needs class number 2");
    GValueInputs inputs = tabulated_g_inputs(K);
    return theorem2_check_h2(inputs, inputs.a_L);
}

}  // namespace irrcount
