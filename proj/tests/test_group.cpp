#include <algorithm>
#include <numeric>
#include <vector>

#include "doctest.h"
#include "irrcount/group.hpp"

using namespace irrcount;

namespace {

// Odometer over all multisets of size m (nondecreasing index tuples), so
// completely independent of the backtracking enumerator.
std::vector<ZeroSumPattern> enumerate_by_odometer(const FiniteAbelianGroup& G, int m) {
    std::vector<ZeroSumPattern> out;
    std::vector<int> idx(m, 0);
    int n = static_cast<int>(G.order());
    while (true) {
        ZeroSumPattern p;
        for (int e : idx) {
            if (!p.counts.empty() && p.counts.back().first == e)
                ++p.counts.back().second;
            else
                p.counts.push_back({e, 1});
        }
        if (is_minimal_zero_sum(G, p)) out.push_back(p);
        int pos = m - 1;
        while (pos >= 0 && idx[pos] == n - 1) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int q = pos + 1; q < m; ++q) idx[q] = idx[pos];
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::size_t> size_profile(const FiniteAbelianGroup& G, int max_m) {
    std::vector<std::size_t> prof;
    for (int m = 1; m <= max_m; ++m) prof.push_back(enumerate_minimal_zero_sums(G, m).size());
    return prof;
}

}  // namespace

TEST_CASE("group indexing round-trips and is lexicographic") {
    FiniteAbelianGroup G = make_group({2, 4});
    CHECK(G.order() == 8);
    CHECK(G.rank() == 2);
    CHECK(G.exponents(0) == std::vector<int>{0, 0});
    CHECK(G.exponents(1) == std::vector<int>{0, 1});
    CHECK(G.exponents(4) == std::vector<int>{1, 0});
    for (int i = 0; i < 8; ++i) CHECK(G.index_of(G.exponents(i)) == i);
    CHECK(G.add(1, 3) == 0);       // (0,1)+(0,3)=(0,0)
    CHECK(G.add(5, 6) == 3);       // (1,1)+(1,2)=(0,3)
    CHECK(G.add(5, 7) == 0);       // (1,1)+(1,3)=(0,0)
    CHECK(G.neg(5) == 7);          // -(1,1)=(1,3)
    CHECK(G.neg(0) == 0);
}

TEST_CASE("group constructor validation") {
    CHECK_THROWS(make_group({}));
    CHECK_THROWS(make_group({0}));
    CHECK_THROWS(make_group({-2}));
    CHECK_THROWS(make_group({3, 2}));   // 3 does not divide 2
    CHECK_THROWS(make_group({2, 3}));   // not a divisibility chain
    CHECK_THROWS(make_group({2, 64})); // order 128 > 64
    CHECK_NOTHROW(make_group({1}));
    CHECK_NOTHROW(make_group({64}));
    CHECK_NOTHROW(make_group({2, 2, 4}));
}

TEST_CASE("minimal zero-sum profiles for small groups") {
    CHECK(size_profile(make_group({1}), 2) == std::vector<std::size_t>{1, 0});
    CHECK(size_profile(make_group({2}), 3) == std::vector<std::size_t>{1, 1, 0});
    CHECK(size_profile(make_group({3}), 4) == std::vector<std::size_t>{1, 1, 2, 0});
    CHECK(size_profile(make_group({5}), 5) == std::vector<std::size_t>{1, 2, 4, 4, 4});
    CHECK(size_profile(make_group({2, 2}), 4) == std::vector<std::size_t>{1, 3, 1, 0});
    CHECK(size_profile(make_group({3, 3}), 5) == std::vector<std::size_t>{1, 4, 16, 24, 24});
    CHECK(size_profile(make_group({2, 4}), 5) == std::vector<std::size_t>{1, 5, 9, 16, 8});
    CHECK(size_profile(make_group({2, 2, 2}), 4) == std::vector<std::size_t>{1, 7, 7, 7});
}

TEST_CASE("enumerator agrees with odometer sweep") {
    for (const std::vector<int>& fac :
         {std::vector<int>{2}, {3}, {4}, {5}, {2, 2}, {6}, {2, 4}, {2, 2, 2}, {3, 3}, {16}}) {
        FiniteAbelianGroup G = make_group(fac);
        int D = davenport_constant(G);
        for (int m = 1; m <= std::min(D + 1, 4); ++m) {
            CAPTURE(fac);
            CAPTURE(m);
            CHECK(enumerate_minimal_zero_sums(G, m) == enumerate_by_odometer(G, m));
        }
    }
}

TEST_CASE("patterns above the Davenport constant are absent") {
    for (const std::vector<int>& fac : {std::vector<int>{4}, {2, 2}, {3, 3}, {2, 2, 2}}) {
        FiniteAbelianGroup G = make_group(fac);
        int D = davenport_constant(G);
        CHECK(!enumerate_minimal_zero_sums(G, D).empty());
        CHECK(enumerate_minimal_zero_sums(G, D + 1).empty());
    }
}

TEST_CASE("is_minimal_zero_sum spot cases") {
    FiniteAbelianGroup G = make_group({4});
    CHECK(is_minimal_zero_sum(G, {{{1, 1}, {3, 1}}}));
    CHECK(is_minimal_zero_sum(G, {{{1, 2}, {2, 1}}}));
    CHECK(is_minimal_zero_sum(G, {{{2, 2}}}));
    CHECK(!is_minimal_zero_sum(G, {{{1, 1}, {2, 2}, {3, 1}}}));  // {2,2} is a proper zero subsum
    CHECK(!is_minimal_zero_sum(G, {{{1, 1}}}));                  // does not sum to zero
    CHECK(!is_minimal_zero_sum(G, {{{0, 2}}}));                  // {0} is a proper zero subsum
    CHECK(is_minimal_zero_sum(G, {{{0, 1}}}));
    CHECK(!is_minimal_zero_sum(G, {}));                          // empty multiset excluded
    CHECK_THROWS(is_minimal_zero_sum(G, {{{2, 2}, {1, 2}}}));    // indices must ascend
    CHECK_THROWS(is_minimal_zero_sum(G, {{{1, 0}}}));            // multiplicities must be >= 1
}

TEST_CASE("Davenport constants of known groups") {
    auto dav = [](std::vector<int> f) { return davenport_constant(make_group(f)); };
    CHECK(dav({1}) == 1);
    for (int h = 2; h <= 12; ++h) CHECK(dav({h}) == h);
    CHECK(dav({2, 2}) == 3);
    CHECK(dav({3, 3}) == 5);
    CHECK(dav({2, 4}) == 5);
    CHECK(dav({2, 6}) == 7);
    CHECK(dav({2, 8}) == 9);
    CHECK(dav({4, 4}) == 7);
    CHECK(dav({2, 2, 2}) == 4);
    CHECK(dav({2, 2, 2, 2}) == 5);
    CHECK(dav({2, 2, 4}) == 6);
}

TEST_CASE("cyclic extremal families match the enumerator") {
    std::vector<std::pair<std::size_t, std::size_t>> sizes = {
        {1, 1}, {2, 1}, {2, 2}, {4, 4}, {2, 2}, {6, 6}, {4, 4}};  // h = 2..8
    for (int h = 2; h <= 8; ++h) {
        CAPTURE(h);
        auto [dh, dh1] = cyclic_extremal_patterns(h);
        FiniteAbelianGroup G = make_group({h});
        CHECK(dh == enumerate_minimal_zero_sums(G, h));
        CHECK(dh1 == enumerate_minimal_zero_sums(G, h - 1));
        CHECK(dh.size() == sizes[h - 2].first);
        CHECK(dh1.size() == sizes[h - 2].second);
    }
}

TEST_CASE("size-h family is the coprime-generator family") {
    for (int h = 2; h <= 8; ++h) {
        auto [dh, dh1] = cyclic_extremal_patterns(h);
        for (const ZeroSumPattern& p : dh) {
            REQUIRE(p.counts.size() == 1);
            CHECK(p.counts[0].second == h);
            CHECK(std::gcd(p.counts[0].first, h) == 1);
        }
        for (const ZeroSumPattern& p : dh1) CHECK(p.length() == h - 1);
    }
}
