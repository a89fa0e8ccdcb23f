#include "irrcount/counting.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "irrcount/series.hpp"

namespace irrcount {

const char* to_string(ElementClass c) {
    switch (c) {
        case ElementClass::zero: return "zero";
        case ElementClass::unit: return "unit";
        case ElementClass::prime: return "prime";
        case ElementClass::irreducible_nonprime: return "irreducible_nonprime";
        case ElementClass::reducible: return "reducible";
    }
    return "?";
}

long long element_norm(const ImaginaryQuadraticField& K, long long a, long long b) {
    __int128 n = static_cast<__int128>(a) * a + static_cast<__int128>(a) * b * K.omega_trace() +
                 static_cast<__int128>(b) * b * K.omega_norm();
    if (n > 4'000'000'000'000'000'000LL) throw std::overflow_error("element_norm: norm exceeds 64 bits");
    return static_cast<long long>(n);
}

std::optional<double> predicted_M(const ImaginaryQuadraticField& K, double x) {
    if (x < 3) return std::nullopt;
    double lx = std::log(x);
    if (K.class_number() == 1) return x / lx;  // C = 1, no subleading term at D = 1
    if (K.d() == -5 || K.d() == -15) {
        double g = g_value_h2(tabulated_g_inputs(K)).value;
        auto [C, B] = asymptotic_CB_cyclic(2, g);
        return x / lx * (C * std::log(lx) + B);
    }
    return std::nullopt;
}

namespace {

double error_scale(int D, double x) {
    if (x < 3) return 0.0;
    double lx = std::log(x);
    if (D >= 3) return x * std::pow(std::log(lx), D - 3) / lx;
    return x / std::pow(lx, 1.5);
}

void finish_report(const ImaginaryQuadraticField& K, CountReport& r) {
    r.predicted = predicted_M(K, r.x);
    r.ratio = (r.predicted && *r.predicted > 0) ? std::optional<double>(r.M / *r.predicted)
                                                : std::nullopt;
    r.err_scale = error_scale(K.class_number() == 1 ? 1 : 2, r.x);
}

}  // namespace

CountReport count_M(const ImaginaryQuadraticField& K, double x) {
    if (K.class_number() > 2) throw std::invalid_argument("count_M: class number above 2");
    if (x > 1e9) throw std::invalid_argument("count_M: x above cap 1e9");
    std::uint64_t limit = x < 0 ? 0 : static_cast<std::uint64_t>(x);
    std::uint64_t P = 0;
    std::vector<std::uint32_t> np;  // nonprincipal norms <= limit/2, ascending
    for_each_prime_ideal(K, limit, [&](const PrimeIdealRecord& rec) {
        if (rec.principal) {
            P += rec.ideals_above;
        } else if (rec.norm * 2 <= limit) {
            for (int i = 0; i < rec.ideals_above; ++i)
                np.push_back(static_cast<std::uint32_t>(rec.norm));
        }
    });
    std::uint64_t pairs = 0;
    if (!np.empty()) {
        std::ptrdiff_t j = static_cast<std::ptrdiff_t>(np.size()) - 1;
        for (std::ptrdiff_t i = 0; i <= j; ++i) {
            while (j >= i && static_cast<std::uint64_t>(np[i]) * np[j] > limit) --j;
            if (j < i) break;
            pairs += static_cast<std::uint64_t>(j - i + 1);
        }
    }
    CountReport r{x, P + pairs, P, pairs, std::nullopt, std::nullopt, 0.0};
    finish_report(K, r);
    return r;
}

namespace {

struct Elem {
    long long a, b;
};

Elem rotate_unit(const ImaginaryQuadraticField& K, Elem e) {
    // multiply by omega, a unit exactly when d = -1 (omega = i) or
    // d = -3 (omega is a primitive 6th root of unity)
    return {-e.b * K.omega_norm(), e.a + e.b * K.omega_trace()};
}

Elem canonical_associate(const ImaginaryQuadraticField& K, Elem e) {
    int rotations = K.d() == -1 ? 4 : K.d() == -3 ? 6 : 1;
    Elem best = e;
    Elem cur = e;
    for (int i = 0; i < rotations; ++i) {
        for (Elem cand : {cur, Elem{-cur.a, -cur.b}})
            if (cand.a < best.a || (cand.a == best.a && cand.b < best.b)) best = cand;
        cur = rotate_unit(K, cur);
    }
    return best;
}

// alpha * conj(beta) in the {1, omega} basis
Elem mul_conj(const ImaginaryQuadraticField& K, Elem alpha, Elem beta) {
    long long t = K.omega_trace(), n = K.omega_norm();
    return {alpha.a * beta.a + alpha.a * beta.b * t + alpha.b * beta.b * n,
            alpha.b * beta.a - alpha.a * beta.b};
}

bool divides(const ImaginaryQuadraticField& K, Elem beta, long long beta_norm, Elem alpha) {
    Elem prod = mul_conj(K, alpha, beta);
    return prod.a % beta_norm == 0 && prod.b % beta_norm == 0;
}

}  // namespace

std::vector<BruteElement> brute_force_elements(const ImaginaryQuadraticField& K, double x) {
    if (x > 2000) throw std::invalid_argument("brute_force_elements: x above cap 2000");
    std::vector<BruteElement> out;
    if (x < 2) return out;
    long long xi = static_cast<long long>(x);
    long long bmax = static_cast<long long>(
        std::sqrt(4.0 * static_cast<double>(xi) / static_cast<double>(-K.discriminant()))) + 1;
    long long amax = static_cast<long long>(std::sqrt(static_cast<double>(xi))) + 1;
    std::vector<Elem> reps;
    for (long long b = -bmax; b <= bmax; ++b) {
        long long shift = (std::llabs(b) * K.omega_trace() + 1);
        for (long long a = -amax - shift; a <= amax + shift; ++a) {
            long long n = element_norm(K, a, b);
            if (n < 2 || n > xi) continue;
            Elem c = canonical_associate(K, {a, b});
            if (c.a == a && c.b == b) reps.push_back(c);
        }
    }
    std::sort(reps.begin(), reps.end(), [&](const Elem& l, const Elem& r) {
        long long nl = element_norm(K, l.a, l.b), nr = element_norm(K, r.a, r.b);
        return nl != nr ? nl < nr : l.a != r.a ? l.a < r.a : l.b < r.b;
    });

    std::vector<std::size_t> irreducible_idx;
    for (const Elem& e : reps) {
        long long n = element_norm(K, e.a, e.b);
        bool irr = true;
        for (std::size_t idx : irreducible_idx) {
            long long q = static_cast<long long>(out[idx].norm);
            if (q >= n || n % q != 0) continue;
            if (divides(K, {out[idx].a, out[idx].b}, q, e)) {
                irr = false;
                break;
            }
        }
        // a prime element generates a prime ideal: norm q, or q^2 over an
        // inert rational prime
        bool prime = false;
        if (irr) {
            std::uint64_t un = static_cast<std::uint64_t>(n);
            if (is_prime(un)) {
                prime = true;
            } else {
                std::uint64_t rt = static_cast<std::uint64_t>(std::llround(std::sqrt(static_cast<double>(un))));
                prime = rt * rt == un && is_prime(rt) && kronecker(K.discriminant(), rt) == -1;
            }
        }
        out.push_back(BruteElement{e.a, e.b, static_cast<std::uint64_t>(n), irr, prime});
        if (irr) irreducible_idx.push_back(out.size() - 1);
    }
    return out;
}

CountReport brute_force_M(const ImaginaryQuadraticField& K, double x) {
    std::uint64_t M = 0, P = 0;
    for (const BruteElement& e : brute_force_elements(K, x)) {
        if (!e.irreducible) continue;
        ++M;
        if (e.prime) ++P;
    }
    CountReport r{x, M, P, M - P, std::nullopt, std::nullopt, 0.0};
    finish_report(K, r);
    return r;
}

ElementClass classify_element(const ImaginaryQuadraticField& K, long long a, long long b) {
    if (K.class_number() > 2) throw std::invalid_argument("classify_element: class number above 2");
    long long n = element_norm(K, a, b);
    if (n == 0) return ElementClass::zero;
    if (n == 1) return ElementClass::unit;
    if (n > 1'000'000'000'000LL)
        throw std::invalid_argument("classify_element: norm above factoring cap 1e12");
    int omega = 0;
    bool principal_factor = false;
    long long rest = n;
    for (long long q = 2; q * q <= rest; ++q) {
        if (rest % q) continue;
        int e = 0;
        while (rest % q == 0) {
            rest /= q;
            ++e;
        }
        int kr = kronecker(K.discriminant(), static_cast<unsigned long long>(q));
        if (kr == -1) {
            if (e % 2) throw std::logic_error("classify_element: odd inert exponent in a norm");
            omega += e / 2;
            principal_factor = true;  // the inert prime itself divides
        } else {
            omega += e;
            PrimeIdealRecord rec{static_cast<std::uint64_t>(q),
                                 kr == 1 ? Splitting::split : Splitting::ramified,
                                 static_cast<std::uint64_t>(q), kr == 1 ? 2 : 1, false};
            if (is_principal(K, rec)) principal_factor = true;
        }
    }
    if (rest > 1) {
        int kr = kronecker(K.discriminant(), static_cast<unsigned long long>(rest));
        if (kr == -1) throw std::logic_error("classify_element: odd inert exponent in a norm");
        omega += 1;
        PrimeIdealRecord rec{static_cast<std::uint64_t>(rest),
                             kr == 1 ? Splitting::split : Splitting::ramified,
                             static_cast<std::uint64_t>(rest), kr == 1 ? 2 : 1, false};
        if (is_principal(K, rec)) principal_factor = true;
    }
    if (omega == 1) return ElementClass::prime;
    if (omega == 2 && !principal_factor) return ElementClass::irreducible_nonprime;
    return ElementClass::reducible;
}

std::vector<CountReport> compare_report(const ImaginaryQuadraticField& K,
                                        const std::vector<double>& xs) {
    std::vector<CountReport> out;
    out.reserve(xs.size());
    for (double x : xs) out.push_back(count_M(K, x));
    return out;
}

}  // namespace irrcount
