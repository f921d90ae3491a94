#pragma once

// Test-only helpers: independent rank oracles (fraction-free Bareiss over the
// integers, naive mod-p elimination) and seeded generators for random
// complexes with homology known by construction.  Kept independent of the
// library's own elimination path on purpose.

#include "homalg/chain.hpp"
#include "homalg/rng.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <vector>

namespace oracle {

using BigInt = boost::multiprecision::cpp_int;

// Rank of an integer matrix by fraction-free (Bareiss) elimination.
inline int bareiss_rank(std::vector<std::vector<BigInt>> m) {
    if (m.empty() || m[0].empty()) return 0;
    std::size_t rows = m.size(), cols = m[0].size();
    BigInt prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (m[i][c] != 0) { sel = i; break; }
        if (sel == rows) continue;
        std::swap(m[sel], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return static_cast<int>(r);
}

inline int modp_rank(std::vector<std::vector<long long>> m, long long p) {
    if (m.empty() || m[0].empty()) return 0;
    auto norm = [p](long long x) { return ((x % p) + p) % p; };
    std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (norm(m[i][c]) != 0) { sel = i; break; }
        if (sel == rows) continue;
        std::swap(m[sel], m[r]);
        // pivot inverse by brute force (p is tiny)
        long long pv = norm(m[r][c]), inv = 0;
        for (long long k = 1; k < p; ++k)
            if (norm(pv * k) == 1) { inv = k; break; }
        for (std::size_t j = 0; j < cols; ++j) m[r][j] = norm(m[r][j] * inv);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            long long f = norm(m[i][c]);
            if (f == 0) continue;
            for (std::size_t j = 0; j < cols; ++j)
                m[i][j] = norm(m[i][j] - f * m[r][j]);
        }
        ++r;
    }
    return static_cast<int>(r);
}

} // namespace oracle

namespace gen {

template <class K>
homalg::Matrix<K> random_invertible(homalg::Rng& rng, int n) {
    auto m = homalg::Matrix<K>::identity(n);
    int ops = 2 * n * n + 2;
    for (int t = 0; t < ops; ++t) {
        if (n < 2) break;
        int i = static_cast<int>(rng.below(n)), j = static_cast<int>(rng.below(n));
        if (i == j) continue;
        K f(static_cast<long long>(rng.range(-2, 2)));
        if (f.is_zero()) f = K(1);
        for (int c = 0; c < n; ++c) m(i, c) += f * m(j, c);
    }
    return m;
}

// Random graded complex assembled from point pieces and acyclic two-term
// pieces, conjugated degreewise by random invertible matrices.  Homology
// ranks are known by construction.
template <class K>
homalg::ChainComplex<K> random_complex(homalg::Rng& rng, int max_deg, int max_rank,
                                       std::map<int, int>* known_h = nullptr) {
    std::map<int, int> h, pair_top; // pair with top in degree n spans n, n-1
    for (int n = 0; n <= max_deg; ++n) h[n] = static_cast<int>(rng.below(max_rank + 1));
    for (int n = 1; n <= max_deg; ++n) pair_top[n] = static_cast<int>(rng.below(max_rank + 1));

    homalg::ChainComplex<K> c;
    auto dim_of = [&](int n) {
        int d = 0;
        if (n >= 0 && n <= max_deg) d += h[n];
        if (n >= 1 && n <= max_deg) d += pair_top[n];
        if (n + 1 >= 1 && n + 1 <= max_deg) d += pair_top[n + 1];
        return d;
    };
    for (int n = 0; n <= max_deg; ++n)
        if (dim_of(n) > 0) c.dims[n] = dim_of(n);
    // basis order in degree n: h-classes, pair tops (at n), pair bottoms (tops at n+1)
    for (int n = 1; n <= max_deg; ++n) {
        if (dim_of(n) == 0 || dim_of(n - 1) == 0) continue;
        homalg::Matrix<K> d(dim_of(n - 1), dim_of(n));
        int top_off = h[n];
        int bot_off = (n - 1 >= 0 ? h[n - 1] : 0) + (n - 1 >= 1 ? pair_top[n - 1] : 0);
        for (int k = 0; k < pair_top[n]; ++k) d(bot_off + k, top_off + k) = K(1);
        c.set_d(n, d);
    }
    // conjugate by random change of basis
    std::map<int, homalg::Matrix<K>> p, pinv;
    for (int n = 0; n <= max_deg; ++n) {
        auto m = random_invertible<K>(rng, dim_of(n));
        p[n] = m;
        pinv[n] = *m.inverse();
    }
    homalg::ChainComplex<K> r;
    r.dims = c.dims;
    for (int n = 1; n <= max_deg; ++n) {
        if (dim_of(n) == 0 || dim_of(n - 1) == 0) continue;
        r.set_d(n, p[n - 1] * c.d(n) * pinv[n]);
    }
    if (known_h) {
        known_h->clear();
        for (auto& [n, v] : h)
            if (v != 0) (*known_h)[n] = v;
    }
    return r;
}

} // namespace gen

namespace fixtures {

// Interval: C_0 = F^2 (v0, v1), C_1 = F (e), d e = v0 - v1.
template <class K>
homalg::ChainComplex<K> interval() {
    homalg::ChainComplex<K> c;
    c.dims[0] = 2;
    c.dims[1] = 1;
    homalg::Matrix<K> d(2, 1);
    d(0, 0) = K(1);
    d(1, 0) = K(-1);
    c.set_d(1, d);
    return c;
}

// Simplicial chains of the 3-vertex circle; edge e_i runs v_i -> v_{i+1}.
template <class K>
homalg::ChainComplex<K> circle3() {
    homalg::ChainComplex<K> c;
    c.dims[0] = 3;
    c.dims[1] = 3;
    homalg::Matrix<K> d(3, 3);
    for (int i = 0; i < 3; ++i) {
        d((i + 1) % 3, i) = K(1);
        d(i, i) = d(i, i) - K(1);
    }
    c.set_d(1, d);
    return c;
}

} // namespace fixtures
