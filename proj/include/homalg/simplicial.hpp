#pragma once

// Finite semi-simplicial sets: face-map bookkeeping, the S1 validation
// (connected + injective + collapsible stars), stars, skeleta, horns,
// barycentric subdivision by flags, and simplicial chains with classical
// local coefficients.

#include "homalg/chain.hpp"
#include "homalg/matrix.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace homalg {

// (dimension, index) of a simplex
using Cell = std::pair<int, int>;
using CellSet = std::set<Cell>;

struct SemiSimplicialSet {
    struct Simplex {
        std::string id;
        std::vector<int> faces; // p+1 indices into dimension p-1
    };
    std::vector<std::vector<Simplex>> cells; // cells[p]

    int dim() const { return static_cast<int>(cells.size()) - 1; }
    int count(int p) const {
        return (p < 0 || p > dim()) ? 0 : static_cast<int>(cells[p].size());
    }
    int total_size() const {
        int t = 0;
        for (auto& lvl : cells) t += static_cast<int>(lvl.size());
        return t;
    }
    const Simplex& at(Cell c) const { return cells[c.first][c.second]; }

    int add_vertex(const std::string& id) {
        if (cells.empty()) cells.emplace_back();
        cells[0].push_back({id, {}});
        return static_cast<int>(cells[0].size()) - 1;
    }
    int add_simplex(int p, const std::string& id, std::vector<int> faces) {
        while (dim() < p) cells.emplace_back();
        cells[p].push_back({id, std::move(faces)});
        return static_cast<int>(cells[p].size()) - 1;
    }

    Cell face(Cell c, int i) const { return {c.first - 1, at(c).faces[i]}; }

    std::optional<Cell> find(const std::string& id) const {
        for (int p = 0; p <= dim(); ++p)
            for (int i = 0; i < count(p); ++i)
                if (cells[p][i].id == id) return Cell{p, i};
        return std::nullopt;
    }

    // corner j of a p-simplex: delete indices above j from the top, then
    // delete index 0 j times
    int corner(Cell c, int j) const {
        Cell cur = c;
        for (int t = c.first; t > j; --t) cur = face(cur, t);
        for (int t = 0; t < j; ++t) cur = face(cur, 0);
        return cur.second;
    }
    std::vector<int> corners(Cell c) const {
        std::vector<int> v(c.first + 1);
        for (int j = 0; j <= c.first; ++j) v[j] = corner(c, j);
        return v;
    }

    CellSet face_closure(Cell c) const {
        CellSet out;
        std::vector<Cell> stack{c};
        while (!stack.empty()) {
            Cell cur = stack.back();
            stack.pop_back();
            if (!out.insert(cur).second) continue;
            if (cur.first > 0)
                for (int i = 0; i <= cur.first; ++i) stack.push_back(face(cur, i));
        }
        return out;
    }

    CellSet closure(const CellSet& seed) const {
        CellSet out;
        for (auto& c : seed) {
            auto cl = face_closure(c);
            out.insert(cl.begin(), cl.end());
        }
        return out;
    }

    CellSet all_cells() const {
        CellSet out;
        for (int p = 0; p <= dim(); ++p)
            for (int i = 0; i < count(p); ++i) out.insert({p, i});
        return out;
    }

    CellSet skeleton_cells(int p) const {
        CellSet out;
        for (int q = 0; q <= std::min(p, dim()); ++q)
            for (int i = 0; i < count(q); ++i) out.insert({q, i});
        return out;
    }

    CellSet boundary_cells(Cell c) const {
        CellSet out = face_closure(c);
        out.erase(c);
        return out;
    }

    // i-th horn: boundary with the open i-th codimension-1 face removed
    CellSet horn_cells(Cell c, int i) const {
        CellSet seed;
        for (int j = 0; j <= c.first; ++j)
            if (j != i) seed.insert(face(c, j));
        return closure(seed);
    }

    // closed star: closure of all simplices having c as an iterated face
    CellSet star_cells(Cell c) const {
        CellSet seed{c};
        for (int p = c.first + 1; p <= dim(); ++p)
            for (int i = 0; i < count(p); ++i)
                if (face_closure({p, i}).count(c)) seed.insert({p, i});
        return closure(seed);
    }

    // simplicial identities d_i d_j = d_{j-1} d_i for i < j, plus shape checks
    bool validate(std::string* why = nullptr) const {
        auto fail = [&](const std::string& m) {
            if (why) *why = m;
            return false;
        };
        std::set<std::string> ids;
        for (int p = 0; p <= dim(); ++p)
            for (int i = 0; i < count(p); ++i) {
                const auto& s = cells[p][i];
                if (!ids.insert(s.id).second) return fail("duplicate id " + s.id);
                if (static_cast<int>(s.faces.size()) != (p == 0 ? 0 : p + 1))
                    return fail("face count at " + s.id);
                for (int f : s.faces)
                    if (f < 0 || f >= count(p - 1)) return fail("face index at " + s.id);
            }
        for (int p = 2; p <= dim(); ++p)
            for (int i = 0; i < count(p); ++i)
                for (int a = 0; a <= p; ++a)
                    for (int b = a + 1; b <= p; ++b) {
                        Cell c{p, i};
                        if (face(face(c, b), a) != face(face(c, a), b - 1))
                            return fail("simplicial identity at " + cells[p][i].id);
                    }
        return true;
    }

    // subcomplex on a face-closed cell set; keeps ids, remaps indices
    SemiSimplicialSet subcomplex(const CellSet& keep) const {
        SemiSimplicialSet out;
        std::map<Cell, int> remap;
        for (auto& c : keep) {
            std::vector<int> faces;
            for (int i = 0; i <= c.first && c.first > 0; ++i) {
                auto it = remap.find(face(c, i));
                faces.push_back(it == remap.end() ? -1 : it->second);
            }
            while (out.dim() < c.first) out.cells.emplace_back();
            out.cells[c.first].push_back({at(c).id, faces});
            remap[c] = static_cast<int>(out.cells[c.first].size()) - 1;
        }
        return out;
    }
};

// ---------------------------------------------------------------------------
// S1 validation

struct S1Report {
    bool connected = false;
    bool injective = false;
    enum class Stars { ok, unknown } stars = Stars::unknown;
    std::vector<std::string> notes;

    bool all_pass() const { return connected && injective && stars == Stars::ok; }
};

namespace detail {

// greedy free-face collapsing; true iff the set collapses to a single vertex
inline bool collapses_to_point(const SemiSimplicialSet& s, CellSet cells) {
    bool progress = true;
    while (progress) {
        progress = false;
        std::map<Cell, int> coface_count;
        std::map<Cell, Cell> unique_coface;
        for (auto& c : cells) {
            if (c.first == 0) continue;
            for (int i = 0; i <= c.first; ++i) {
                Cell f = s.face(c, i);
                if (!cells.count(f)) continue;
                coface_count[f]++;
                unique_coface[f] = c;
            }
        }
        for (auto& [f, n] : coface_count) {
            if (n != 1) continue;
            Cell t = unique_coface[f];
            // the coface itself must be free of higher cofaces
            bool t_free = true;
            for (auto& c : cells) {
                if (c.first != t.first + 1) continue;
                for (int i = 0; i <= c.first && t_free; ++i)
                    if (s.face(c, i) == t) t_free = false;
                if (!t_free) break;
            }
            if (!t_free) continue;
            cells.erase(f);
            cells.erase(t);
            progress = true;
            break;
        }
    }
    return cells.size() == 1 && cells.begin()->first == 0;
}

} // namespace detail

inline S1Report validate_s1(const SemiSimplicialSet& s) {
    S1Report r;
    // connectivity of the vertex-edge graph
    int nv = s.count(0);
    if (nv == 0) {
        r.notes.push_back("empty set");
        return r;
    }
    std::vector<int> root(nv);
    for (int i = 0; i < nv; ++i) root[i] = i;
    auto find = [&](int x) {
        while (root[x] != x) x = root[x] = root[root[x]];
        return x;
    };
    for (int e = 0; e < s.count(1); ++e) {
        int a = find(s.cells[1][e].faces[0]), b = find(s.cells[1][e].faces[1]);
        if (a != b) root[a] = b;
    }
    r.connected = true;
    for (int i = 1; i < nv; ++i)
        if (find(i) != find(0)) {
            r.connected = false;
            r.notes.push_back("vertex " + s.cells[0][i].id + " disconnected");
            break;
        }
    // injectivity: distinct corners, and corner tuples determine simplices
    r.injective = true;
    for (int p = 1; p <= s.dim() && r.injective; ++p) {
        std::map<std::vector<int>, std::string> seen;
        for (int i = 0; i < s.count(p); ++i) {
            auto cs = s.corners({p, i});
            std::set<int> uniq(cs.begin(), cs.end());
            if (static_cast<int>(uniq.size()) != p + 1) {
                r.injective = false;
                r.notes.push_back("repeated corner in " + s.cells[p][i].id);
                break;
            }
            auto [it, fresh] = seen.emplace(cs, s.cells[p][i].id);
            if (!fresh) {
                r.injective = false;
                r.notes.push_back("corner tuple shared by " + it->second + " and " +
                                  s.cells[p][i].id);
                break;
            }
        }
    }
    // star contractibility via greedy collapse (sufficient check)
    r.stars = S1Report::Stars::ok;
    for (int p = 0; p <= s.dim(); ++p)
        for (int i = 0; i < s.count(p); ++i) {
            if (!detail::collapses_to_point(s, s.star_cells({p, i}))) {
                r.stars = S1Report::Stars::unknown;
                r.notes.push_back("star of " + s.cells[p][i].id + " did not collapse");
            }
        }
    return r;
}

inline SemiSimplicialSet star(const SemiSimplicialSet& s, Cell c) {
    return s.subcomplex(s.star_cells(c));
}

// ---------------------------------------------------------------------------
// Barycentric subdivision

// A flag is a strictly increasing chain of simplices of S.
using Flag = std::vector<Cell>;

inline Flag front_face(const Flag& f, int d) {
    if (d < 0 || d >= static_cast<int>(f.size()))
        throw std::out_of_range("front_face: index");
    return Flag(f.begin(), f.begin() + d + 1);
}

struct Subdivision {
    SemiSimplicialSet bs;
    std::vector<std::vector<Flag>> flags; // flags[k][i] = flag of the i-th k-simplex

    std::optional<int> index_of(int k, const Flag& f) const {
        if (k < 0 || k >= static_cast<int>(flags.size())) return std::nullopt;
        auto it = std::lower_bound(flags[k].begin(), flags[k].end(), f);
        if (it == flags[k].end() || *it != f) return std::nullopt;
        return static_cast<int>(it - flags[k].begin());
    }
};

inline Subdivision barycentric_subdivide(const SemiSimplicialSet& s) {
    Subdivision out;
    // containment lookup computed once
    std::map<Cell, CellSet> closure_of;
    for (int p = 0; p <= s.dim(); ++p)
        for (int i = 0; i < s.count(p); ++i)
            closure_of[{p, i}] = s.face_closure({p, i});
    // enumerate flags by length, lexicographically on (p, idx) sequences
    std::vector<std::vector<Flag>> flags;
    std::vector<Flag> cur;
    for (int p = 0; p <= s.dim(); ++p)
        for (int i = 0; i < s.count(p); ++i) cur.push_back({Cell{p, i}});
    std::sort(cur.begin(), cur.end());
    flags.push_back(cur);
    while (true) {
        std::vector<Flag> next;
        for (auto& f : flags.back()) {
            Cell top = f.back();
            // extend by any simplex strictly containing top
            for (int p = top.first + 1; p <= s.dim(); ++p)
                for (int i = 0; i < s.count(p); ++i) {
                    if (closure_of[{p, i}].count(top)) {
                        Flag g = f;
                        g.push_back({p, i});
                        next.push_back(std::move(g));
                    }
                }
        }
        if (next.empty()) break;
        std::sort(next.begin(), next.end());
        flags.push_back(std::move(next));
    }
    out.flags = flags;
    auto id_of = [&](const Flag& f) {
        std::string id;
        for (auto& c : f) {
            if (!id.empty()) id += '<';
            id += s.at(c).id;
        }
        return id;
    };
    for (int k = 0; k < static_cast<int>(flags.size()); ++k) {
        for (auto& f : flags[k]) {
            std::vector<int> faces;
            if (k > 0)
                for (int j = 0; j <= k; ++j) {
                    Flag g = f;
                    g.erase(g.begin() + j);
                    auto it = std::lower_bound(flags[k - 1].begin(), flags[k - 1].end(), g);
                    faces.push_back(static_cast<int>(it - flags[k - 1].begin()));
                }
            out.bs.add_simplex(k, id_of(f), std::move(faces));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Classical local systems and twisted simplicial chains

template <class K>
struct LocalSystem {
    // ranks[p][i]; maps[p][i][face index] : L_alpha -> L_{d_i alpha}
    std::vector<std::vector<int>> ranks;
    std::vector<std::vector<std::vector<Matrix<K>>>> maps;

    int rank(Cell c) const { return ranks[c.first][c.second]; }
    const Matrix<K>& map(Cell c, int i) const { return maps[c.first][c.second][i]; }

    static LocalSystem trivial(const SemiSimplicialSet& s, int r = 1) {
        LocalSystem l;
        l.ranks.resize(s.dim() + 1);
        l.maps.resize(s.dim() + 1);
        for (int p = 0; p <= s.dim(); ++p) {
            l.ranks[p].assign(s.count(p), r);
            l.maps[p].resize(s.count(p));
            for (int i = 0; i < s.count(p); ++i)
                l.maps[p][i].assign(p == 0 ? 0 : p + 1, Matrix<K>::identity(r));
        }
        return l;
    }

    bool validate(const SemiSimplicialSet& s, std::string* why = nullptr) const {
        auto fail = [&](const std::string& m) {
            if (why) *why = m;
            return false;
        };
        if (static_cast<int>(ranks.size()) != s.dim() + 1) return fail("rank table shape");
        for (int p = 0; p <= s.dim(); ++p) {
            if (static_cast<int>(ranks[p].size()) != s.count(p)) return fail("rank table shape");
            for (int i = 0; i < s.count(p); ++i) {
                if (p == 0) continue;
                if (static_cast<int>(maps[p][i].size()) != p + 1) return fail("map table shape");
                for (int j = 0; j <= p; ++j) {
                    const auto& m = maps[p][i][j];
                    Cell f = s.face({p, i}, j);
                    if (m.rows() != static_cast<std::size_t>(rank(f)) ||
                        m.cols() != static_cast<std::size_t>(ranks[p][i]))
                        return fail("map shape at " + s.cells[p][i].id);
                    if (!m.inverse().has_value())
                        return fail("non-invertible structure map at " + s.cells[p][i].id);
                }
            }
        }
        // functoriality on codimension-2 compositions
        for (int p = 2; p <= s.dim(); ++p)
            for (int i = 0; i < s.count(p); ++i)
                for (int a = 0; a <= p; ++a)
                    for (int b = a + 1; b <= p; ++b) {
                        Cell c{p, i};
                        Cell fb = s.face(c, b), fa = s.face(c, a);
                        Matrix<K> lhs = map(fb, a) * map(c, b);
                        Matrix<K> rhs = map(fa, b - 1) * map(c, a);
                        if (!(lhs == rhs)) return fail("functoriality at " + s.cells[p][i].id);
                    }
        return true;
    }
};

// offset of simplex i inside the degree-p chain group
template <class K>
int chain_offset(const SemiSimplicialSet& s, const LocalSystem<K>& l, int p, int idx) {
    int off = 0;
    for (int i = 0; i < idx; ++i) off += l.ranks[p][i];
    return off;
}

template <class K>
ChainComplex<K> chain_complex(const SemiSimplicialSet& s, const LocalSystem<K>& l) {
    ChainComplex<K> c;
    for (int p = 0; p <= s.dim(); ++p) {
        int d = 0;
        for (int i = 0; i < s.count(p); ++i) d += l.ranks[p][i];
        if (d) c.dims[p] = d;
    }
    for (int p = 1; p <= s.dim(); ++p) {
        if (c.dim(p) == 0 || c.dim(p - 1) == 0) continue;
        Matrix<K> m(c.dim(p - 1), c.dim(p));
        for (int i = 0; i < s.count(p); ++i) {
            int src = chain_offset(s, l, p, i);
            for (int j = 0; j <= p; ++j) {
                Cell f = s.face({p, i}, j);
                int dst = chain_offset(s, l, p - 1, f.second);
                const Matrix<K>& blk = l.map({p, i}, j);
                K sgn = sign_pow<K>(j);
                for (std::size_t r = 0; r < blk.rows(); ++r)
                    for (std::size_t cc = 0; cc < blk.cols(); ++cc)
                        m(dst + r, src + cc) += sgn * blk(r, cc);
            }
        }
        c.set_d(p, std::move(m));
    }
    return c;
}

template <class K>
ChainComplex<K> chain_complex(const SemiSimplicialSet& s) {
    return chain_complex(s, LocalSystem<K>::trivial(s));
}

// ---------------------------------------------------------------------------
// Stock examples

inline SemiSimplicialSet standard_simplex(int n) {
    // faces of Delta^n as strictly increasing vertex tuples
    SemiSimplicialSet s;
    std::vector<std::vector<std::vector<int>>> by_dim(n + 1);
    std::vector<std::vector<int>> cur;
    for (int v = 0; v <= n; ++v) cur.push_back({v});
    by_dim[0] = cur;
    for (int p = 1; p <= n; ++p) {
        std::vector<std::vector<int>> next;
        for (auto& t : by_dim[p - 1])
            for (int v = t.back() + 1; v <= n; ++v) {
                auto u = t;
                u.push_back(v);
                next.push_back(u);
            }
        by_dim[p] = next;
    }
    auto name = [](const std::vector<int>& t) {
        std::string s = "s";
        for (int v : t) s += std::to_string(v);
        return s;
    };
    for (int p = 0; p <= n; ++p)
        for (auto& t : by_dim[p]) {
            std::vector<int> faces;
            if (p > 0)
                for (int j = 0; j <= p; ++j) {
                    auto u = t;
                    u.erase(u.begin() + j);
                    auto it = std::find(by_dim[p - 1].begin(), by_dim[p - 1].end(), u);
                    faces.push_back(static_cast<int>(it - by_dim[p - 1].begin()));
                }
            s.add_simplex(p, name(t), std::move(faces));
        }
    return s;
}

inline SemiSimplicialSet circle(int n = 3) {
    // n-gon: vertices v0..v_{n-1}, edge ei from vi to v_{i+1}
    SemiSimplicialSet s;
    for (int i = 0; i < n; ++i) s.add_vertex("v" + std::to_string(i));
    for (int i = 0; i < n; ++i)
        s.add_simplex(1, "e" + std::to_string(i), {(i + 1) % n, i});
    return s;
}

} // namespace homalg
