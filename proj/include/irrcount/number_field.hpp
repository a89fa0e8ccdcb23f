#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace irrcount {

enum class Splitting { split, inert, ramified };

struct PrimeIdealRecord {
    std::uint64_t p;
    Splitting splitting;
    std::uint64_t norm;  // p, or p^2 when inert
    int ideals_above;    // 2 when split, else 1
    bool principal;
};

// Data determining the residue of the zeta function at s = 1:
// real embeddings, complex embedding pairs, regulator, class number,
// number of roots of unity, field discriminant.
struct ResidueData {
    int r1;
    int r2;
    double regulator;
    int class_number;
    int roots_of_unity;
    long long discriminant;
};

// Q(sqrt(d)) for squarefree d < 0, with ring of integers Z[omega],
// omega = sqrt(d) or (1+sqrt(d))/2 depending on d mod 4.
class ImaginaryQuadraticField {
public:
    explicit ImaginaryQuadraticField(long long d);

    long long d() const { return d_; }
    long long discriminant() const { return disc_; }
    // omega satisfies omega^2 - t*omega + n = 0
    long long omega_trace() const { return t_; }
    long long omega_norm() const { return n_; }
    int roots_of_unity() const { return w_; }
    int class_number() const { return h_; }
    ResidueData residue_data() const { return {0, 1, 1.0, h_, w_, disc_}; }

private:
    long long d_, disc_, t_, n_;
    int w_, h_;
};

// Kronecker symbol (D|n) for n >= 1.
int kronecker(long long D, unsigned long long n);

bool is_prime(std::uint64_t n);

// Number of classes of primitive reduced binary quadratic forms of the
// given negative fundamental-or-not discriminant. |disc| <= 1e7.
int class_number(long long disc);

Splitting splitting(const ImaginaryQuadraticField& K, std::uint64_t p);

// Whether the prime ideals above rec.p are principal. Inert primes always
// are; split/ramified ones are decided by congruence class for the two
// class-number-2 fields d = -5, -15 and by a norm-form search otherwise
// (only fields with class number <= 2 are supported).
bool is_principal(const ImaginaryQuadraticField& K, const PrimeIdealRecord& rec);

// Streams every prime-ideal record with norm <= limit in nondecreasing
// norm order (split p gives one record with ideals_above = 2).
void for_each_prime_ideal(const ImaginaryQuadraticField& K, std::uint64_t limit,
                          const std::function<void(const PrimeIdealRecord&)>& fn);

// Materialized form of the stream, for x <= 1e9.
std::vector<PrimeIdealRecord> prime_ideals_up_to(const ImaginaryQuadraticField& K, double x);

// 2^r1 (2 pi)^r2 R h / (w sqrt(|disc|)).
double residue(const ResidueData& data);

// The four fields of the worked h = 2 examples: the two imaginary
// quadratic fields d = -5 and d = -15 and their degree-4 extensions by
// sqrt(5). Regulator of both extensions is 2 log((1+sqrt 5)/2).
enum class TabulatedField { K1, K2, L1, L2 };
ResidueData tabulated_field_data(TabulatedField f);

// Segmented Eratosthenes sieve; calls fn for each prime <= limit ascending.
void for_each_prime(std::uint64_t limit, const std::function<void(std::uint64_t)>& fn);

}  // namespace irrcount
