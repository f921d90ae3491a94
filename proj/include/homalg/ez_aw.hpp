#pragma once

// Eilenberg-Zilber (shuffle) and Alexander-Whitney maps on chains of ordered
// simplicial complexes and their products.  Simplices are strictly increasing
// vertex tuples; product cells are strictly increasing lattice paths in the
// vertex grid (the staircase triangulation).  Degenerate faces are dropped,
// i.e. chains are normalized.

#include "homalg/field.hpp"

#include <functional>
#include <map>
#include <utility>
#include <vector>

namespace homalg {

using SCell = std::vector<int>;                  // simplex of X
using PCell = std::vector<std::pair<int, int>>;  // simplex of X x Y

template <class K> using SChain = std::map<SCell, K>;
template <class K> using PChain = std::map<PCell, K>;
template <class K> using TChain = std::map<std::pair<SCell, SCell>, K>;   // C(X) (x) C(Y)
template <class K> using PTChain = std::map<std::pair<PCell, PCell>, K>; // C(XxY)^{(x)2}

namespace detail {

template <class Cell, class K>
void add_term(std::map<Cell, K>& chain, const Cell& c, const K& coeff) {
    if (coeff.is_zero()) return;
    auto [it, fresh] = chain.emplace(c, coeff);
    if (!fresh) {
        it->second += coeff;
        if (it->second.is_zero()) chain.erase(it);
    }
}

inline bool strictly_increasing(const SCell& c) {
    for (std::size_t i = 1; i < c.size(); ++i)
        if (c[i - 1] >= c[i]) return false;
    return true;
}

} // namespace detail

template <class K>
SChain<K> boundary(const SChain<K>& ch) {
    SChain<K> out;
    for (auto& [c, x] : ch) {
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (c.size() == 1) break;
            SCell f = c;
            f.erase(f.begin() + i);
            detail::add_term(out, f, sign_pow<K>(i) * x);
        }
    }
    return out;
}

template <class K>
PChain<K> boundary(const PChain<K>& ch) {
    PChain<K> out;
    for (auto& [c, x] : ch) {
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (c.size() == 1) break;
            PCell f = c;
            f.erase(f.begin() + i);
            detail::add_term(out, f, sign_pow<K>(i) * x);
        }
    }
    return out;
}

// Koszul boundary on C(X) (x) C(Y)
template <class K>
TChain<K> boundary(const TChain<K>& ch) {
    TChain<K> out;
    for (auto& [c, x] : ch) {
        const auto& [s, t] = c;
        SChain<K> bs = boundary(SChain<K>{{s, K(1)}});
        for (auto& [f, v] : bs) detail::add_term(out, {f, t}, v * x);
        SChain<K> bt = boundary(SChain<K>{{t, K(1)}});
        K sg = sign_pow<K>(static_cast<long long>(s.size()) - 1);
        for (auto& [f, v] : bt) detail::add_term(out, {s, f}, sg * v * x);
    }
    return out;
}

// All (p,q)-shuffles as staircases with the sign of the shuffle permutation.
template <class K>
void for_each_shuffle(int p, int q, const std::function<void(const std::vector<int>&, K)>& fn) {
    // steps: 0 = advance in X, 1 = advance in Y
    std::vector<int> steps(p + q, 0);
    for (int i = p; i < p + q; ++i) steps[i] = 1;
    std::sort(steps.begin(), steps.end());
    // enumerate all permutations of the multiset deterministically
    std::vector<int> cur;
    std::function<void(int, int, int)> rec = [&](int usedx, int usedy, int inOrder) {
        (void)inOrder;
        if (usedx == p && usedy == q) {
            // inversions: pairs (y-step before x-step)
            int inv = 0;
            int ys = 0;
            for (int s : cur) {
                if (s == 1)
                    ++ys;
                else
                    inv += ys;
            }
            fn(cur, sign_pow<K>(inv));
            return;
        }
        if (usedx < p) {
            cur.push_back(0);
            rec(usedx + 1, usedy, 0);
            cur.pop_back();
        }
        if (usedy < q) {
            cur.push_back(1);
            rec(usedx, usedy + 1, 0);
            cur.pop_back();
        }
    };
    rec(0, 0, 0);
}

// Shuffle map C(X) (x) C(Y) -> C(X x Y).
template <class K>
PChain<K> ez(const TChain<K>& ch) {
    PChain<K> out;
    for (auto& [c, coeff] : ch) {
        const auto& [s, t] = c;
        int p = static_cast<int>(s.size()) - 1, q = static_cast<int>(t.size()) - 1;
        K cf = coeff;
        for_each_shuffle<K>(p, q, [&](const std::vector<int>& steps, K sg) {
            PCell cell;
            int a = 0, b = 0;
            cell.push_back({s[0], t[0]});
            for (int st : steps) {
                if (st == 0)
                    ++a;
                else
                    ++b;
                cell.push_back({s[a], t[b]});
            }
            detail::add_term(out, cell, sg * cf);
        });
    }
    return out;
}

// Alexander-Whitney map C(X x Y) -> C(X) (x) C(Y).
template <class K>
TChain<K> aw(const PChain<K>& ch) {
    TChain<K> out;
    for (auto& [c, coeff] : ch) {
        int n = static_cast<int>(c.size()) - 1;
        for (int k = 0; k <= n; ++k) {
            SCell front, back;
            for (int i = 0; i <= k; ++i) front.push_back(c[i].first);
            for (int i = k; i <= n; ++i) back.push_back(c[i].second);
            if (!detail::strictly_increasing(front) || !detail::strictly_increasing(back))
                continue;
            detail::add_term(out, {front, back}, coeff);
        }
    }
    return out;
}

// Alexander-Whitney diagonal C(X) -> C(X) (x) C(X).
template <class K>
TChain<K> aw_diagonal(const SChain<K>& ch) {
    TChain<K> out;
    for (auto& [c, coeff] : ch) {
        int n = static_cast<int>(c.size()) - 1;
        for (int k = 0; k <= n; ++k) {
            SCell front(c.begin(), c.begin() + k + 1);
            SCell back(c.begin() + k, c.end());
            detail::add_term(out, {front, back}, coeff);
        }
    }
    return out;
}

// Diagonal of a product complex, used for the EZ/AW compatibility square.
template <class K>
PTChain<K> product_diagonal(const PChain<K>& ch) {
    PTChain<K> out;
    for (auto& [c, coeff] : ch) {
        int n = static_cast<int>(c.size()) - 1;
        for (int k = 0; k <= n; ++k) {
            PCell front(c.begin(), c.begin() + k + 1);
            PCell back(c.begin() + k, c.end());
            detail::add_term(out, {front, back}, coeff);
        }
    }
    return out;
}

// (ez (x) ez) o tau o (diag (x) diag) applied to sigma (x) tau; the middle
// interchange carries the Koszul sign.
template <class K>
PTChain<K> ez_square_route(const SCell& s, const SCell& t) {
    PTChain<K> out;
    int n = static_cast<int>(s.size()) - 1, m = static_cast<int>(t.size()) - 1;
    for (int k = 0; k <= n; ++k) {
        SCell sf(s.begin(), s.begin() + k + 1), sb(s.begin() + k, s.end());
        for (int l = 0; l <= m; ++l) {
            SCell tf(t.begin(), t.begin() + l + 1), tb(t.begin() + l, t.end());
            K sg = sign_pow<K>(static_cast<long long>(n - k) * l);
            PChain<K> left = ez(TChain<K>{{{sf, tf}, K(1)}});
            PChain<K> right = ez(TChain<K>{{{sb, tb}, K(1)}});
            for (auto& [lc, lv] : left)
                for (auto& [rc, rv] : right)
                    detail::add_term(out, {lc, rc}, sg * lv * rv);
        }
    }
    return out;
}

// Augmentation: sum of coefficients in degree 0.
template <class K>
K augmentation(const SChain<K>& ch) {
    K v(0);
    for (auto& [c, x] : ch)
        if (c.size() == 1) v += x;
    return v;
}

} // namespace homalg
