// Acceptance gate: one check per numbered criterion, each printing a single
// PASS/FAIL line with the computed-versus-pinned detail. Exit status is the
// number of failing criteria. Run a single criterion with --criterion N.
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "irrcount/counting.hpp"
#include "irrcount/cycle_index.hpp"
#include "irrcount/group.hpp"
#include "irrcount/number_field.hpp"
#include "irrcount/series.hpp"

using namespace irrcount;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

void note(Outcome& o, bool ok, const char* fmt, ...) {
    char buf[512];
    va_list ap;
    va_start(ap, fmt);
    std::vsnprintf(buf, sizeof buf, fmt, ap);
    va_end(ap);
    if (!o.detail.empty()) o.detail += "; ";
    o.detail += buf;
    if (!ok) {
        o.detail += " [FAIL]";
        o.pass = false;
    }
}

std::uint64_t rng_state = 0x853c49e6748fea9bull;
double rnd() {
    rng_state = rng_state * 6364136223846793005ull + 1442695040888963407ull;
    return static_cast<double>((rng_state >> 11) % 2000) / 1000.0 - 1.0;
}

// 1. residues of the four tabulated fields against their closed forms
Outcome criterion1() {
    Outcome o;
    const double pi = std::numbers::pi;
    const double logphi = std::log((1.0 + std::sqrt(5.0)) / 2.0);
    struct Row {
        TabulatedField f;
        const char* name;
        double expect;
    } rows[] = {
        {TabulatedField::K1, "a_K1", pi / std::sqrt(5.0)},
        {TabulatedField::K2, "a_K2", 2.0 * pi / std::sqrt(15.0)},
        {TabulatedField::L1, "a_L1", pi * pi / 10.0 * logphi},
        {TabulatedField::L2, "a_L2", 4.0 * pi * pi / 15.0 * logphi},
    };
    for (const Row& r : rows) {
        double got = residue(tabulated_field_data(r.f));
        note(o, std::fabs(got - r.expect) <= 1e-12, "%s=%.12g (expect %.12g)", r.name, got,
             r.expect);
    }
    return o;
}

// 2. truncated odd-power prime sums at cutoff 84 against pinned decimals
Outcome criterion2() {
    Outcome o;
    TruncatedSum s1 = tail_sum_S(ImaginaryQuadraticField(-5), 84);
    note(o, std::fabs(s1.value - 0.077827) <= 1e-5, "S(-5,84)=%.10g vs pinned 0.077827 +-1e-5",
         s1.value);
    TruncatedSum s2 = tail_sum_S(ImaginaryQuadraticField(-15), 84);
    // the pinned reference drops the -2/p correction of the p = 17 term
    // (2/17 = 0.1176470588); the series itself evaluates to 0.1147879996
    note(o, std::fabs(s2.value - 0.232435) <= 1e-5,
         "S(-15,84)=%.10g vs pinned 0.232435 +-1e-5 (difference %.10g, 2/17=%.10g)", s2.value,
         0.232435 - s2.value, 2.0 / 17.0);
    note(o, s1.error_bound < 5e-5 && s2.error_bound < 5e-5, "error_bound=%.4g < 5e-5",
         s1.error_bound);
    return o;
}

// 3. g values and their residue-only intermediates
Outcome criterion3() {
    Outcome o;
    GValueInputs in1 = tabulated_g_inputs(ImaginaryQuadraticField(-5));
    GValueInputs in2 = tabulated_g_inputs(ImaginaryQuadraticField(-15));
    double mid1 = std::log(in1.a_K) - 0.5 * std::log(in1.a_L);
    double mid2 = std::log(in2.a_K) - 0.5 * std::log(in2.a_L);
    note(o, std::fabs(mid1 - 0.71229745) <= 1e-7, "intermediate(-5)=%.10g vs 0.71229745 +-1e-7",
         mid1);
    note(o, std::fabs(mid2 - 0.36572386) <= 1e-7, "intermediate(-15)=%.10g vs 0.36572386 +-1e-7",
         mid2);
    double g1 = g_value_h2(in1).value;
    double g2 = g_value_h2(in2).value;
    // both pinned endpoints inherit the dropped 2/17 term of criterion 2's
    // truncated sum, so the honestly computed values sit outside the windows
    note(o, std::fabs(g1 - 0.6343) <= 1e-4, "g(-5)=%.10g vs pinned 0.6343 +-1e-4", g1);
    note(o, std::fabs(g2 - 0.1333) <= 1e-4, "g(-15)=%.10g vs pinned 0.1333 +-1e-4", g2);
    return o;
}

// 4. Davenport constants: cyclic values, two rank-2 groups, and the
// order bound over every abelian group of order <= 16
Outcome criterion4() {
    Outcome o;
    bool cyc = true;
    for (int h = 1; h <= 12; ++h) cyc = cyc && davenport_constant(make_group({h})) == h;
    note(o, cyc, "D(C_h)=h for h<=12");
    note(o, davenport_constant(make_group({2, 2})) == 3, "D(C2xC2)=%d (expect 3)",
         davenport_constant(make_group({2, 2})));
    note(o, davenport_constant(make_group({3, 3})) == 5, "D(C3xC3)=%d (expect 5)",
         davenport_constant(make_group({3, 3})));
    const std::vector<std::vector<int>> all16 = {
        {1},    {2},    {3},       {4},    {2, 2}, {5},       {6},          {7},
        {8},    {2, 4}, {2, 2, 2}, {9},    {3, 3}, {10},      {11},         {12},
        {2, 6}, {13},   {14},      {15},   {16},   {2, 8},    {4, 4},       {2, 2, 4},
        {2, 2, 2, 2}};
    bool bound = true;
    for (const std::vector<int>& fac : all16) {
        FiniteAbelianGroup G = make_group(fac);
        bound = bound && davenport_constant(G) <= static_cast<int>(G.order());
    }
    note(o, bound, "D(G) <= |G| on all %zu abelian groups of order <= 16", all16.size());
    return o;
}

// 5. extremal zero-sum families of cyclic groups against the closed form
Outcome criterion5() {
    Outcome o;
    for (int h = 2; h <= 8; ++h) {
        FiniteAbelianGroup G = make_group({h});
        auto [dh, dh1] = cyclic_extremal_patterns(h);
        bool ok = dh == enumerate_minimal_zero_sums(G, h) &&
                  dh1 == enumerate_minimal_zero_sums(G, h - 1);
        note(o, ok, "h=%d sizes %zu/%zu", h, dh.size(), dh1.size());
    }
    auto [d3, d2] = cyclic_extremal_patterns(3);
    note(o, d2.size() == 1, "h=3 size-2 family deduplicates to %zu (expect 1)", d2.size());
    return o;
}

// 6. cycle-index evaluation against the direct symmetric-sum oracle,
// exact rational arithmetic throughout
Outcome criterion6() {
    Outcome o;
    int checked = 0;
    bool ok = true;
    for (int i = 0; i < 25; ++i) {
        std::vector<Rational> v;
        int len = 1 + i % 4;
        for (int j = 0; j < len; ++j)
            v.emplace_back((i * 7 + j * 3) % 11 - 5, 1 + (i + 2 * j) % 4);
        for (int k = 1; k <= 5; ++k) {
            ok = ok && evaluate_pk(k, power_sums(v, k)) == symmetric_sum_oracle(k, v);
            ++checked;
        }
    }
    note(o, ok, "exact equality on %d (vector, k) combinations, 25 vectors, k<=5", checked);
    return o;
}

// 7. the general nested-sum coefficient against the top-three closed forms
Outcome criterion7() {
    Outcome o;
    const std::vector<std::vector<int>> groups = {{1}, {2}, {3},    {4},    {2, 2},   {5},
                                                  {6}, {7}, {8}, {2, 4}, {2, 2, 2}};
    double worst = 0.0;
    int draws = 0;
    for (int rep = 0; rep < 100; ++rep) {
        const std::vector<int>& fac = groups[rep % groups.size()];
        FiniteAbelianGroup G = make_group(fac);
        int D = davenport_constant(G);
        std::size_t n = G.order();
        std::vector<double> g(n), z2(n);
        std::vector<std::vector<double>> z(n, std::vector<double>(std::max(0, D - 1)));
        for (std::size_t i = 0; i < n; ++i) {
            g[i] = rnd();
            z2[i] = rnd();
            if (D >= 2) z[i][0] = z2[i];
            for (int j = 3; j <= D; ++j) z[i][j - 2] = rnd();
        }
        CoefficientSet cs = coefficients_top(G, g, z2);
        worst = std::max(worst, std::fabs(c_mu_general(G, D, g, z) - cs.c_D));
        worst = std::max(worst, std::fabs(c_mu_general(G, D - 1, g, z) - cs.c_Dm1));
        if (cs.c_Dm2) worst = std::max(worst, std::fabs(c_mu_general(G, D - 2, g, z) - *cs.c_Dm2));
        ++draws;
    }
    note(o, worst < 1e-12, "%d draws over %zu groups of order <= 8, worst |delta|=%.3g", draws,
         groups.size(), worst);
    // two-class group by substitution
    std::vector<double> g{0.3, 0.7}, z2{0.11, 0.23};
    CoefficientSet c2 = coefficients_top(make_group({2}), g, z2);
    note(o, c2.c_D == 0.5, "c_2=%.17g (expect exactly 0.5)", c2.c_D);
    note(o, std::fabs(c2.c_Dm1 - (1.0 + g[1])) < 1e-12, "c_1=%.12g vs 1+g_2=%.12g", c2.c_Dm1,
         1.0 + g[1]);
    double c0 = g[0] + 0.5 * g[1] * g[1] + 0.5 * z2[1];
    note(o, c2.c_Dm2 && std::fabs(*c2.c_Dm2 - c0) < 1e-12, "c_0=%.12g vs g_1+g_2^2/2+z_22/2=%.12g",
         c2.c_Dm2 ? *c2.c_Dm2 : -1.0, c0);
    return o;
}

// 8. tauberian constants, the generating-function identity, and the two
// top loglog-expansion coefficients
Outcome criterion8() {
    Outcome o;
    std::vector<double> I = im_constants(30);
    note(o, I[0] == 0.0, "I_0=%g (exact 0)", I[0]);
    note(o, std::fabs(I[1] - 1.0) <= 1e-14, "I_1=%.16g (1 +-1e-14)", I[1]);
    note(o, std::fabs(I[2] - kEulerGamma) <= 1e-10, "I_2=%.16g vs gamma=%.16g", I[2], kEulerGamma);
    for (double t : {0.1, 0.3, 0.5}) {
        double series = 0.0, tp = 1.0;
        for (int m = 1; m <= 30; ++m) {
            series += I[m] * tp;
            tp *= t;
        }
        double direct = 1.0 / std::tgamma(1.0 + t);
        note(o, std::fabs(series - direct) <= 1e-8, "t=%.1f series=%.12g vs 1/Gamma(1+t)=%.12g", t,
             series, direct);
    }
    bool tops = true;
    for (int k = 1; k <= 6; ++k) {
        std::vector<double> g(k + 1);
        for (int i = 0; i <= k; ++i) g[i] = rnd();
        std::vector<double> e = e_coefficients(g, k);
        tops = tops && std::fabs(e[k - 1] - k * g[k]) <= 1e-12;
        if (k >= 2)
            tops = tops &&
                   std::fabs(e[k - 2] - ((k - 1) * g[k - 1] + k * (k - 1) * g[k] * kEulerGamma)) <=
                       1e-12;
    }
    note(o, tops, "e_{k-1}=k g_k and e_{k-2}=(k-1)g_{k-1}+k(k-1) gamma g_k for k<=6");
    return o;
}

// 9. the sieve-based count against element-level brute force, and the
// norm-factorization classifier against brute-force irreducibility
Outcome criterion9() {
    Outcome o;
    for (long long d : {-5ll, -15ll, -1ll, -2ll}) {
        ImaginaryQuadraticField K(d);
        bool ok = true;
        int bad_x = -1;
        for (int x = 2; x <= 300 && ok; ++x) {
            CountReport fast = count_M(K, x);
            CountReport slow = brute_force_M(K, x);
            ok = fast.M == slow.M && fast.P == slow.P && fast.pair_count == slow.pair_count;
            if (!ok) bad_x = x;
        }
        note(o, ok, "d=%lld count_M=brute_force_M for x<=300%s%d", d,
             ok ? ", checked to " : ", first mismatch at x=", ok ? 300 : bad_x);
    }
    for (long long d : {-5ll, -15ll}) {
        ImaginaryQuadraticField K(d);
        bool ok = true;
        std::size_t n = 0;
        for (const BruteElement& e : brute_force_elements(K, 300)) {
            ElementClass c = classify_element(K, e.a, e.b);
            bool want_prime = c == ElementClass::prime;
            bool want_irr = c == ElementClass::prime || c == ElementClass::irreducible_nonprime;
            ok = ok && want_prime == e.prime && want_irr == e.irreducible;
            ++n;
        }
        note(o, ok, "d=%lld classifier consistent on %zu elements of norm <= 300", d, n);
    }
    return o;
}

// 10. sanity band for the two-term prediction at desk scale; the doubly
// iterated logarithm moves too slowly for a convergence claim, so this
// checks a fixed ratio window instead
Outcome criterion10() {
    Outcome o;
    ImaginaryQuadraticField K(-5);
    double g = g_value_h2(tabulated_g_inputs(K)).value;
    auto [C, B] = asymptotic_CB_cyclic(2, g);
    note(o, C == 0.25, "C=%.10g (expect 1/4), B=%.10g from the computed g value", C, B);
    for (double x : {1e6, 1e7, 1e8}) {
        CountReport r = count_M(K, x);
        bool ok = r.predicted && r.ratio && *r.ratio >= 0.3 && *r.ratio <= 3.0;
        note(o, ok, "x=%.0e M=%llu predicted=%.6g ratio=%.4f in [0.3,3.0]", x,
             static_cast<unsigned long long>(r.M), r.predicted ? *r.predicted : 0.0,
             r.ratio ? *r.ratio : 0.0);
    }
    return o;
}

// 11. the residue-only and truncated-sum closed forms for the g value agree
Outcome criterion11() {
    Outcome o;
    for (long long d : {-5ll, -15ll}) {
        double r = theorem2_check_h2(ImaginaryQuadraticField(d));
        note(o, r <= 1e-12, "d=%lld residual=%.3g <= 1e-12", d, r);
    }
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
            only = std::atoi(argv[++i]);
        } else {
            std::fprintf(stderr, "usage: %s [--criterion N]\n", argv[0]);
            return 2;
        }
    }
    Outcome (*checks[])() = {criterion1, criterion2, criterion3, criterion4,
                             criterion5, criterion6, criterion7, criterion8,
                             criterion9, criterion10, criterion11};
    int failures = 0;
    for (int n = 1; n <= 11; ++n) {
        if (only != 0 && n != only) continue;
        Outcome res = checks[n - 1]();
        std::printf("%s criterion %d: %s\n", res.pass ? "PASS" : "FAIL", n, res.detail.c_str());
        if (!res.pass) ++failures;
    }
    return failures;
}
