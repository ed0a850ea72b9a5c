#pragma once

// Brute-force reference implementations used only by tests. Each follows
// the bare definition of the quantity it computes and stays independent of
// the library's solver paths.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "ihs/hyperspace.hpp"
#include "ihs/set_system.hpp"
#include "ihs/stream.hpp"

namespace oracles {

// Least |T| over transversals T, by scanning subsets in popcount order.
inline ihs::ExtendedNat brute_transversal_number(const ihs::SetSystem& sys) {
    if (sys.members().empty())
        return 0;
    for (int size = 0; size <= sys.ground(); ++size)
        for (ihs::Mask t = 0; t <= sys.ground_mask(); ++t) {
            if (ihs::mask_size(t) != size)
                continue;
            bool hits_all = true;
            for (ihs::Mask m : sys.members())
                if ((t & m) == 0) {
                    hits_all = false;
                    break;
                }
            if (hits_all)
                return ihs::ExtendedNat(static_cast<std::uint64_t>(size));
            if (t == sys.ground_mask())
                break;
        }
    return ihs::ExtendedNat::infinity();
}

// Window-sequence check by full enumeration: some nondecreasing
// 0 = i_0 <= ... <= i_d < n puts a member inside every closed window
// {perm[i_k..i_{k+1}]}.
inline bool brute_dandy_for_permutation(const ihs::SetSystem& sys, const std::vector<int>& perm, int d) {
    const int n = sys.ground();
    std::vector<int> cuts(d + 1, 0);
    auto window_has_member = [&](int lo, int hi) {
        ihs::Mask window = 0;
        for (int j = lo; j <= hi; ++j)
            window |= ihs::mask_bit(perm[j]);
        for (ihs::Mask m : sys.members())
            if ((m & ~window) == 0)
                return true;
        return false;
    };
    auto rec = [&](auto&& self, int k) -> bool {
        if (k == d + 1) {
            for (int t = 0; t < d; ++t)
                if (!window_has_member(cuts[t], cuts[t + 1]))
                    return false;
            return true;
        }
        const int lo = k == 0 ? 0 : cuts[k - 1];
        for (int v = lo; v < n; ++v) {
            if (k == 0 && v > 0)
                break;  // i_0 = 0 is fixed
            cuts[k] = v;
            if (self(self, k + 1))
                return true;
        }
        return false;
    };
    return rec(rec, 0);
}

inline bool brute_dandy_to_depth(const ihs::SetSystem& sys, int d) {
    if (d == 0)
        return true;
    std::vector<int> perm(sys.ground());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (!brute_dandy_for_permutation(sys, perm, d))
            return false;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return true;
}

// First injective map (in lexicographic order) that a verifier accepts.
template <typename Verify>
inline std::optional<std::vector<int>> first_verified_injection(const ihs::Hyperspace& b, const ihs::Hyperspace& a,
                                                                Verify&& verify) {
    std::vector<int> map(b.size(), -1);
    std::vector<char> used(a.size(), 0);
    auto rec = [&](auto&& self, int x) -> bool {
        if (x == b.size())
            return verify(map);
        for (int v = 0; v < a.size(); ++v) {
            if (used[v])
                continue;
            map[x] = v;
            used[v] = 1;
            if (self(self, x + 1))
                return true;
            used[v] = 0;
        }
        return false;
    };
    if (b.size() > a.size())
        return std::nullopt;
    if (rec(rec, 0))
        return map;
    return std::nullopt;
}

// Greedy coloring straight from its definition: m_i by linear scan with
// same_class, color = least index of the largest m_i.
inline ihs::Coloring brute_greedy_coloring(const ihs::StreamHyperspace& stream, std::uint64_t prefix_length) {
    ihs::Coloring coloring;
    coloring.colors.resize(prefix_length);
    for (std::uint64_t k = 0; k < prefix_length; ++k) {
        std::vector<std::uint64_t> m(stream.relation_count());
        for (int i = 0; i < stream.relation_count(); ++i)
            for (std::uint64_t candidate = 0; candidate <= k; ++candidate)
                if (stream.same_class(i, k, candidate)) {
                    m[i] = candidate;
                    break;
                }
        const std::uint64_t target = *std::max_element(m.begin(), m.end());
        for (int i = 0; i < stream.relation_count(); ++i)
            if (m[i] == target) {
                coloring.colors[k] = i;
                break;
            }
    }
    return coloring;
}

// |{x < N : x in [a_k]_i and color(x) = i}| by definition.
inline std::uint64_t brute_color_count(const ihs::StreamHyperspace& stream, const ihs::Coloring& coloring,
                                       std::uint64_t k, int relation, std::uint64_t prefix_length) {
    std::uint64_t count = 0;
    for (std::uint64_t x = 0; x < prefix_length; ++x)
        if (coloring.colors[x] == relation && stream.same_class(relation, k, x))
            ++count;
    return count;
}

}  // namespace oracles
