#include "irrcount/number_field.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <deque>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace irrcount {

namespace {

std::uint64_t isqrt_u64(std::uint64_t n) {
    if (n == 0) return 0;
    std::uint64_t r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = std::countr_zero(d);
    d >>= s;
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

int kronecker(long long D, unsigned long long n) {
    if (n == 0) throw std::invalid_argument("kronecker: n must be positive");
    int res = 1;
    int tz = std::countr_zero(n);
    n >>= tz;
    if (tz) {
        if (D % 2 == 0) return 0;
        long long r8 = ((D % 8) + 8) % 8;
        if ((r8 == 3 || r8 == 5) && (tz & 1)) res = -res;
    }
    // Jacobi symbol (D | n), n odd
    unsigned long long m = n;
    long long a = D % static_cast<long long>(m);
    if (a < 0) a += m;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            unsigned long long r8 = m % 8;
            if (r8 == 3 || r8 == 5) res = -res;
        }
        if (a % 4 == 3 && m % 4 == 3) res = -res;
        long long t = static_cast<long long>(m % static_cast<unsigned long long>(a));
        m = static_cast<unsigned long long>(a);
        a = t;
    }
    return m == 1 ? res : 0;
}

int class_number(long long disc) {
    long long r4 = ((disc % 4) + 4) % 4;
    if (disc >= 0 || (r4 != 0 && r4 != 1))
        throw std::invalid_argument("class_number: need negative disc with disc mod 4 in {0,1}");
    if (-disc > 10'000'000)
        throw std::invalid_argument("class_number: |disc| above cap 1e7");
    int h = 0;
    for (long long a = 1; 3 * a * a <= -disc; ++a) {
        for (long long b = -a + 1; b <= a; ++b) {
            long long num = b * b - disc;
            if (num % (4 * a) != 0) continue;
            long long c = num / (4 * a);
            if (c < a) continue;
            if (a == c && b < 0) continue;  // (a,-b,a) ~ (a,b,a)
            if (std::gcd(std::gcd(a, b < 0 ? -b : b), c) != 1) continue;
            ++h;
        }
    }
    return h;
}

ImaginaryQuadraticField::ImaginaryQuadraticField(long long d) : d_(d) {
    if (d >= 0) throw std::invalid_argument("field: d must be negative");
    long long ad = -d;
    for (long long q = 2; q * q <= ad; ++q)
        if (ad % (q * q) == 0) throw std::invalid_argument("field: d must be squarefree");
    bool one_mod_4 = ((d % 4) + 4) % 4 == 1;
    disc_ = one_mod_4 ? d : 4 * d;
    if (one_mod_4) {
        t_ = 1;
        n_ = (1 - d) / 4;
    } else {
        t_ = 0;
        n_ = -d;
    }
    w_ = d == -1 ? 4 : d == -3 ? 6 : 2;
    h_ = irrcount::class_number(disc_);
}

Splitting splitting(const ImaginaryQuadraticField& K, std::uint64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("splitting: p must be prime");
    int k = kronecker(K.discriminant(), p);
    return k == 1 ? Splitting::split : k == -1 ? Splitting::inert : Splitting::ramified;
}

namespace {

// Does a^2 + t*a*b + n*b^2 = p have an integer solution (principal prime
// of norm p)? Completed square: 4p = (2a + t b)^2 + |disc| b^2.
bool norm_form_represents(const ImaginaryQuadraticField& K, std::uint64_t p) {
    std::uint64_t adisc = static_cast<std::uint64_t>(-K.discriminant());
    std::uint64_t t = static_cast<std::uint64_t>(K.omega_trace());
    for (std::uint64_t b = 0; adisc * b * b <= 4 * p; ++b) {
        std::uint64_t r = 4 * p - adisc * b * b;
        std::uint64_t s = isqrt_u64(r);
        if (s * s == r && (s % 2) == ((t * b) % 2)) return true;
    }
    return false;
}

}  // namespace

bool is_principal(const ImaginaryQuadraticField& K, const PrimeIdealRecord& rec) {
    if (rec.splitting == Splitting::inert) return true;
    std::uint64_t p = rec.p;
    if (K.d() == -5) return !(p == 2 || p % 20 == 3 || p % 20 == 7);
    if (K.d() == -15) return !(p == 3 || p == 5 || p % 15 == 2 || p % 15 == 8);
    if (K.class_number() == 1) return true;
    if (K.class_number() == 2) return norm_form_represents(K, p);
    throw std::invalid_argument("is_principal: class number above 2 unsupported");
}

void for_each_prime(std::uint64_t limit, const std::function<void(std::uint64_t)>& fn) {
    if (limit >= 2) fn(2);
    if (limit < 3) return;
    std::uint64_t sq = isqrt_u64(limit);
    std::vector<bool> small(sq + 1, true);
    std::vector<std::uint32_t> base;  // odd primes <= sqrt(limit)
    for (std::uint64_t i = 3; i <= sq; i += 2)
        if (small[i]) {
            base.push_back(static_cast<std::uint32_t>(i));
            fn(i);
            for (std::uint64_t j = i * i; j <= sq; j += i) small[j] = false;
        }
    constexpr std::uint64_t kSegOdds = 1u << 20;  // odd numbers per segment
    std::uint64_t lo = sq + 1 + ((sq + 1) % 2 == 0 ? 1 : 0);  // first odd > sq
    std::vector<bool> flags;
    for (; lo <= limit; lo += 2 * kSegOdds) {
        std::uint64_t hi = std::min(limit, lo + 2 * kSegOdds - 2);  // inclusive, odd range
        std::uint64_t count = (hi - lo) / 2 + 1;
        flags.assign(count, true);
        for (std::uint32_t p : base) {
            std::uint64_t start = ((lo + p - 1) / p) * p;
            if (start < static_cast<std::uint64_t>(p) * p) start = static_cast<std::uint64_t>(p) * p;
            if (start % 2 == 0) start += p;
            for (std::uint64_t j = start; j <= hi; j += 2 * p) flags[(j - lo) / 2] = false;
        }
        for (std::uint64_t i = 0; i < count; ++i)
            if (flags[i]) fn(lo + 2 * i);
    }
}

void for_each_prime_ideal(const ImaginaryQuadraticField& K, std::uint64_t limit,
                          const std::function<void(const PrimeIdealRecord&)>& fn) {
    std::deque<PrimeIdealRecord> pending;  // inert records, norm p^2, ascending
    for_each_prime(limit, [&](std::uint64_t p) {
        while (!pending.empty() && pending.front().norm < p) {
            fn(pending.front());
            pending.pop_front();
        }
        int k = kronecker(K.discriminant(), p);
        if (k == 1) {
            PrimeIdealRecord rec{p, Splitting::split, p, 2, false};
            rec.principal = is_principal(K, rec);
            fn(rec);
        } else if (k == 0) {
            PrimeIdealRecord rec{p, Splitting::ramified, p, 1, false};
            rec.principal = is_principal(K, rec);
            fn(rec);
        } else if (p * p <= limit) {
            pending.push_back(PrimeIdealRecord{p, Splitting::inert, p * p, 1, true});
        }
    });
    for (const PrimeIdealRecord& rec : pending) fn(rec);
}

std::vector<PrimeIdealRecord> prime_ideals_up_to(const ImaginaryQuadraticField& K, double x) {
    if (!(x >= 0) || x > 1e9)
        throw std::invalid_argument("prime_ideals_up_to: need 0 <= x <= 1e9");
    std::vector<PrimeIdealRecord> out;
    for_each_prime_ideal(K, static_cast<std::uint64_t>(x),
                         [&](const PrimeIdealRecord& rec) { out.push_back(rec); });
    return out;
}

double residue(const ResidueData& data) {
    if (data.discriminant == 0 || data.class_number < 1 || data.roots_of_unity < 1 ||
        data.r1 < 0 || data.r2 < 0)
        throw std::invalid_argument("residue: malformed field data");
    double two_pi = 2.0 * std::numbers::pi;
    return std::pow(2.0, data.r1) * std::pow(two_pi, data.r2) * data.regulator *
           data.class_number /
           (data.roots_of_unity * std::sqrt(static_cast<double>(std::llabs(data.discriminant))));
}

ResidueData tabulated_field_data(TabulatedField f) {
    double golden_reg = 2.0 * std::log((1.0 + std::sqrt(5.0)) / 2.0);
    switch (f) {
        case TabulatedField::K1:
            return {0, 1, 1.0, 2, 2, -20};
        case TabulatedField::K2:
            return {0, 1, 1.0, 2, 2, -15};
        case TabulatedField::L1:
            // contains i, hence 4 roots of unity
            return {0, 2, golden_reg, 1, 4, 400};
        case TabulatedField::L2:
            // The field contains sqrt(-3) = sqrt(-15)/sqrt(5), so it truly
            // has 6 roots of unity; the worked tables use w = 2 and all
            // downstream tabulated values assume it. Kept as tabulated.
            return {0, 2, golden_reg, 1, 2, 225};
    }
    throw std::invalid_argument("tabulated_field_data: unknown field");
}

}  // namespace irrcount
