#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "holoprime/config.hpp"

namespace holoprime {

/// A blade is a strictly increasing index set {i1<...<ik} in [1,n], stored as
/// a bitmask with bit (i-1) set. For blades of equal degree, increasing mask
/// value is exactly colexicographic order on the index sets; all row/column
/// indexing in the library relies on that.
using BladeMask = std::uint32_t;

inline int blade_degree(BladeMask m) { return std::popcount(m); }

inline BladeMask full_mask(int n) { return (BladeMask(1) << n) - 1; }

inline std::uint64_t binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    std::uint64_t r = 1;
    if (k > n - k) k = n - k;
    for (int i = 1; i <= k; ++i) r = r * std::uint64_t(n - k + i) / std::uint64_t(i);
    return r;
}

/// All degree-k blades in [1,n], in colex order.
inline std::vector<BladeMask> blade_list(int n, int k) {
    std::vector<BladeMask> out;
    if (k < 0 || k > n) return out;
    out.reserve(static_cast<std::size_t>(binomial(n, k)));
    if (k == 0) {
        out.push_back(0);
        return out;
    }
    // Gosper's hack walks masks of fixed popcount in increasing value.
    BladeMask v = full_mask(k);
    BladeMask limit = BladeMask(1) << n;
    while (v < limit) {
        out.push_back(v);
        BladeMask t = v | (v - 1);
        v = (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(v) + 1));
        if (v == 0) break;
    }
    return out;
}

/// Colex position of mask among degree-k blades (combinadic rank).
inline std::size_t colex_index(BladeMask m) {
    std::size_t idx = 0;
    int seen = 0;
    while (m) {
        int bit = std::countr_zero(m);
        m &= m - 1;
        ++seen;
        idx += static_cast<std::size_t>(binomial(bit, seen));
    }
    return idx;
}

/// Sign of the shuffle merging (a, b) into ascending order; 0 if they overlap.
inline int wedge_sign(BladeMask a, BladeMask b) {
    if (a & b) return 0;
    int inversions = 0;
    BladeMask bb = b;
    while (bb) {
        int j = std::countr_zero(bb);
        bb &= bb - 1;
        // elements of a strictly greater than j
        inversions += std::popcount(a >> (j + 1));
    }
    return (inversions & 1) ? -1 : 1;
}

/// Hodge dual on the blade basis: *m = star_sign(m,n) * complement(m,n).
inline BladeMask complement_mask(BladeMask m, int n) { return full_mask(n) & ~m; }

inline int star_sign(BladeMask m, int n) {
    return wedge_sign(m, complement_mask(m, n));
}

inline std::vector<int> mask_to_indices(BladeMask m) {
    std::vector<int> out;
    while (m) {
        int bit = std::countr_zero(m);
        m &= m - 1;
        out.push_back(bit + 1);
    }
    return out;
}

inline BladeMask indices_to_mask(const std::vector<int>& idx, int n) {
    check_ambient_dim(n);
    BladeMask m = 0;
    int prev = 0;
    for (int i : idx) {
        if (i <= prev || i > n)
            throw std::invalid_argument("blade indices must be strictly increasing in [1,n]");
        m |= BladeMask(1) << (i - 1);
        prev = i;
    }
    return m;
}

}  // namespace holoprime
