#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace irrcount {

// Finite abelian group Z/n1 x ... x Z/nr in invariant-factor form,
// n1 | n2 | ... | nr. Elements are indexed 0..order-1 in lexicographic
// order of their exponent vectors; index 0 is the identity. Order is
// capped at 64 so subset-sum sets fit in a single 64-bit mask.
class FiniteAbelianGroup {
public:
    static constexpr std::uint64_t kMaxOrder = 64;

    explicit FiniteAbelianGroup(std::vector<int> invariant_factors);

    const std::vector<int>& invariant_factors() const { return factors_; }
    std::uint64_t order() const { return order_; }
    int rank() const { return static_cast<int>(factors_.size()); }

    std::vector<int> exponents(int index) const;
    int index_of(const std::vector<int>& exponents) const;
    int add(int a, int b) const;
    int neg(int a) const;

private:
    std::vector<int> factors_;
    std::uint64_t order_;
};

// Multiset of group elements as (element index, multiplicity) pairs,
// ascending in element index, multiplicities >= 1.
struct ZeroSumPattern {
    std::vector<std::pair<int, int>> counts;

    int length() const {
        int m = 0;
        for (auto& [e, k] : counts) m += k;
        return m;
    }
    friend bool operator==(const ZeroSumPattern&, const ZeroSumPattern&) = default;
    friend auto operator<=>(const ZeroSumPattern&, const ZeroSumPattern&) = default;
};

FiniteAbelianGroup make_group(const std::vector<int>& invariant_factors);

// All minimal zero-sum multisets of size exactly m: the multiset sums to
// the identity and no proper nonempty sub-multiset does. Canonically
// ordered output.
std::vector<ZeroSumPattern> enumerate_minimal_zero_sums(const FiniteAbelianGroup& G, int m);

// Checks the defining property directly with a subset-sum automaton over
// (sum, none-taken, all-taken) states.
bool is_minimal_zero_sum(const FiniteAbelianGroup& G, const ZeroSumPattern& pattern);

// Largest m with a zero-sum-free sequence of length m-1, by exhaustive
// backtracking. Equals the largest m with a minimal zero-sum multiset.
int davenport_constant(const FiniteAbelianGroup& G);

// For Z/h: the families at sizes h and h-1 in closed form. First member
// of the pair is the size-h family, second the size-(h-1) family.
std::pair<std::vector<ZeroSumPattern>, std::vector<ZeroSumPattern>>
cyclic_extremal_patterns(int h);

}  // namespace irrcount
