#include "irrcount/group.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <stdexcept>

namespace irrcount {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<int> invariant_factors)
    : factors_(std::move(invariant_factors)) {
    if (factors_.empty())
        throw std::invalid_argument("group: at least one invariant factor required");
    order_ = 1;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (factors_[i] < 1)
            throw std::invalid_argument("group: invariant factors must be >= 1");
        if (i > 0 && factors_[i] % factors_[i - 1] != 0)
            throw std::invalid_argument("group: invariant factors must form a divisibility chain");
        order_ *= static_cast<std::uint64_t>(factors_[i]);
        if (order_ > kMaxOrder)
            throw std::invalid_argument("group: order above cap 64");
    }
}

std::vector<int> FiniteAbelianGroup::exponents(int index) const {
    if (index < 0 || static_cast<std::uint64_t>(index) >= order_)
        throw std::out_of_range("group: element index out of range");
    std::vector<int> e(factors_.size());
    for (int i = static_cast<int>(factors_.size()) - 1; i >= 0; --i) {
        e[i] = index % factors_[i];
        index /= factors_[i];
    }
    return e;
}

int FiniteAbelianGroup::index_of(const std::vector<int>& exponents) const {
    if (exponents.size() != factors_.size())
        throw std::invalid_argument("group: exponent vector has wrong rank");
    int idx = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        int e = exponents[i] % factors_[i];
        if (e < 0) e += factors_[i];
        idx = idx * factors_[i] + e;
    }
    return idx;
}

int FiniteAbelianGroup::add(int a, int b) const {
    std::vector<int> ea = exponents(a), eb = exponents(b);
    for (std::size_t i = 0; i < factors_.size(); ++i)
        ea[i] = (ea[i] + eb[i]) % factors_[i];
    return index_of(ea);
}

int FiniteAbelianGroup::neg(int a) const {
    std::vector<int> e = exponents(a);
    for (std::size_t i = 0; i < factors_.size(); ++i)
        e[i] = (factors_[i] - e[i]) % factors_[i];
    return index_of(e);
}

FiniteAbelianGroup make_group(const std::vector<int>& invariant_factors) {
    return FiniteAbelianGroup(invariant_factors);
}

namespace {

// Bit s of a mask marks a sum reachable by some nonempty sub-multiset.
std::uint64_t extend_sums(const FiniteAbelianGroup& G, std::uint64_t mask, int e) {
    std::uint64_t out = mask | (std::uint64_t{1} << e);
    for (std::uint64_t t = mask; t; t &= t - 1)
        out |= std::uint64_t{1} << G.add(std::countr_zero(t), e);
    return out;
}

ZeroSumPattern to_pattern(const std::vector<int>& sorted_elems) {
    ZeroSumPattern p;
    for (int e : sorted_elems) {
        if (!p.counts.empty() && p.counts.back().first == e)
            ++p.counts.back().second;
        else
            p.counts.push_back({e, 1});
    }
    return p;
}

// Builds nondecreasing zero-sum-free prefixes of length m-1 and closes
// each with the forced last element -(prefix sum). The closure is minimal
// exactly when the prefix is zero-sum-free, and requiring last >= max of
// the prefix makes the decomposition, hence the output, unique.
void search_minimal(const FiniteAbelianGroup& G, int m, int start, int remaining,
                    int cursum, std::uint64_t mask, std::vector<int>& chosen,
                    std::vector<ZeroSumPattern>& out) {
    if (remaining == 1) {
        int last = G.neg(cursum);
        if (!chosen.empty() && last < chosen.back()) return;
        chosen.push_back(last);
        out.push_back(to_pattern(chosen));
        chosen.pop_back();
        return;
    }
    int n = static_cast<int>(G.order());
    for (int e = start; e < n; ++e) {
        std::uint64_t next = extend_sums(G, mask, e);
        if (next & 1) continue;  // sub-multiset hit the identity
        chosen.push_back(e);
        search_minimal(G, m, e, remaining - 1, G.add(cursum, e), next, chosen, out);
        chosen.pop_back();
    }
}

int longest_zero_sum_free(const FiniteAbelianGroup& G, int start, std::uint64_t mask, int depth) {
    int best = depth;
    int n = static_cast<int>(G.order());
    for (int e = start; e < n; ++e) {
        std::uint64_t next = extend_sums(G, mask, e);
        if (next & 1) continue;
        best = std::max(best, longest_zero_sum_free(G, e, next, depth + 1));
    }
    return best;
}

}  // namespace

std::vector<ZeroSumPattern> enumerate_minimal_zero_sums(const FiniteAbelianGroup& G, int m) {
    if (m < 1 || m > 64) throw std::invalid_argument("enumerate_minimal_zero_sums: need 1 <= m <= 64");
    std::vector<ZeroSumPattern> out;
    std::vector<int> chosen;
    search_minimal(G, m, 0, m, 0, 0, chosen, out);
    std::sort(out.begin(), out.end());
    for (auto& p : out)
        if (!is_minimal_zero_sum(G, p))
            throw std::logic_error("enumerate_minimal_zero_sums: candidate failed recheck");
    return out;
}

bool is_minimal_zero_sum(const FiniteAbelianGroup& G, const ZeroSumPattern& pattern) {
    if (pattern.counts.empty()) return false;
    int n = static_cast<int>(G.order());
    int prev = -1;
    for (auto& [e, k] : pattern.counts) {
        if (e <= prev || e >= n || k < 1)
            throw std::invalid_argument("is_minimal_zero_sum: malformed pattern");
        prev = e;
    }
    // state[none][all]: sums reachable by selections that took nothing so
    // far (none) / everything so far (all)
    std::uint64_t state[2][2] = {{0, 0}, {0, 1}};  // empty selection: sum 0, none & all
    for (auto& [e, k] : pattern.counts) {
        std::uint64_t next[2][2] = {{0, 0}, {0, 0}};
        for (int none = 0; none < 2; ++none)
            for (int all = 0; all < 2; ++all) {
                std::uint64_t cur = state[none][all];
                for (int j = 0; j <= k && cur; ++j) {
                    next[none && j == 0][all && j == k] |= cur;
                    if (j < k) {
                        std::uint64_t shifted = 0;
                        for (std::uint64_t t = cur; t; t &= t - 1)
                            shifted |= std::uint64_t{1} << G.add(std::countr_zero(t), e);
                        cur = shifted;
                    }
                }
            }
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) state[a][b] = next[a][b];
    }
    bool full_is_zero = state[0][1] & 1;
    bool proper_zero = state[0][0] & 1;
    return full_is_zero && !proper_zero;
}

int davenport_constant(const FiniteAbelianGroup& G) {
    return longest_zero_sum_free(G, 0, 0, 0) + 1;
}

std::pair<std::vector<ZeroSumPattern>, std::vector<ZeroSumPattern>>
cyclic_extremal_patterns(int h) {
    if (h < 2) throw std::invalid_argument("cyclic_extremal_patterns: need h >= 2");
    FiniteAbelianGroup G = make_group({h});
    std::set<ZeroSumPattern> dh, dh1;
    for (int k = 1; k < h; ++k) {
        if (std::gcd(k, h) != 1) continue;
        dh.insert(ZeroSumPattern{{{k, h}}});
        // h-2 copies of k plus one 2k; for h = 2 that degenerates to the
        // identity alone. 2k = k mod h cannot happen for k coprime to h.
        ZeroSumPattern q;
        int dbl = (2 * k) % h;
        if (h == 2) {
            q.counts = {{dbl, 1}};
        } else {
            q.counts = {{k, h - 2}, {dbl, 1}};
            std::sort(q.counts.begin(), q.counts.end());
        }
        dh1.insert(q);
    }
    return {std::vector<ZeroSumPattern>(dh.begin(), dh.end()),
            std::vector<ZeroSumPattern>(dh1.begin(), dh1.end())};
}

}  // namespace irrcount
