#ifndef LRT_COMBIN_HPP
#define LRT_COMBIN_HPP

// Small combinatorial utilities shared by the alternating-form machinery:
// lexicographic enumeration of index subsets, subset lookup, and the sign of
// sorting an index tuple (zero when the tuple has a repeat).

#include <algorithm>
#include <cstddef>
#include <vector>

namespace lrt {

inline std::size_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    std::size_t r = 1;
    for (std::size_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

// All strictly increasing k-subsets of {0,...,n-1} in lexicographic order.
inline std::vector<std::vector<std::size_t>> combinations(std::size_t n,
                                                          std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    if (k > n) return out;
    std::vector<std::size_t> c(k);
    for (std::size_t i = 0; i < k; ++i) c[i] = i;
    while (true) {
        out.push_back(c);
        if (k == 0) break;
        // advance
        std::size_t i = k;
        while (i > 0) {
            --i;
            if (c[i] != i + n - k) {
                ++c[i];
                for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
                i = k + 1;
                break;
            }
        }
        if (i != k + 1) break;  // exhausted
    }
    return out;
}

// Position of an increasing k-subset in the lexicographic enumeration above.
inline std::size_t combination_index(const std::vector<std::size_t>& c,
                                     std::size_t n) {
    const std::size_t k = c.size();
    std::size_t idx = 0;
    std::size_t prev = 0;
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t v = prev; v < c[i]; ++v) {
            idx += binomial(n - v - 1, k - i - 1);
        }
        prev = c[i] + 1;
    }
    return idx;
}

// Sorts tuple into increasing order; returns the permutation sign, or 0 if
// the tuple has a repeated entry (tuple is then left sorted anyway).
inline int sort_sign(std::vector<std::size_t>& tuple) {
    int sign = 1;
    // insertion sort, counting transpositions
    for (std::size_t i = 1; i < tuple.size(); ++i) {
        std::size_t j = i;
        while (j > 0 && tuple[j - 1] > tuple[j]) {
            std::swap(tuple[j - 1], tuple[j]);
            sign = -sign;
            --j;
        }
    }
    for (std::size_t i = 1; i < tuple.size(); ++i) {
        if (tuple[i - 1] == tuple[i]) return 0;
    }
    return sign;
}

// Increasing subset with positions j removed (positions, not values).
inline std::vector<std::size_t> erase_positions(
    const std::vector<std::size_t>& c, std::initializer_list<std::size_t> pos) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (std::find(pos.begin(), pos.end(), i) == pos.end()) {
            out.push_back(c[i]);
        }
    }
    return out;
}

}  // namespace lrt

#endif  // LRT_COMBIN_HPP
