#pragma once

// Based chain complexes over an exact field, graded or ungraded, with the
// suspension / Koszul sign conventions used by every other module.
//
// Graded: finite window of degrees n with differentials d_n : C_n -> C_{n-1}.
// Ungraded (characteristic 2 only): a single space V with d : V -> V.
//
// Degree-k chain maps satisfy  d_tgt f = (-1)^k f d_src.

#include "homalg/field.hpp"
#include "homalg/matrix.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace homalg {

enum class Mode { graded, ungraded };

template <class K>
struct ChainComplex {
    Mode mode = Mode::graded;
    std::map<int, int> dims;          // degree -> dimension (ungraded: key 0)
    std::map<int, Matrix<K>> diff;    // degree -> d_n : C_n -> C_{n-1} (ungraded: d : V -> V)

    int dim(int n) const {
        auto it = dims.find(mode == Mode::ungraded ? 0 : n);
        return it == dims.end() ? 0 : it->second;
    }
    int total_dim() const {
        int t = 0;
        for (auto& [n, d] : dims) t += d;
        return t;
    }
    int min_degree() const { return dims.empty() ? 0 : dims.begin()->first; }
    int max_degree() const { return dims.empty() ? 0 : dims.rbegin()->first; }

    Matrix<K> d(int n) const {
        if (mode == Mode::ungraded) {
            auto it = diff.find(0);
            if (it != diff.end()) return it->second;
            return Matrix<K>(dim(0), dim(0));
        }
        auto it = diff.find(n);
        if (it != diff.end()) return it->second;
        return Matrix<K>(dim(n - 1), dim(n));
    }

    void set_dim(int n, int d) {
        if (d != 0) dims[mode == Mode::ungraded ? 0 : n] = d;
    }
    void set_d(int n, Matrix<K> m) {
        if (!m.is_zero()) diff[mode == Mode::ungraded ? 0 : n] = std::move(m);
    }

    static ChainComplex point(int degree = 0) {
        ChainComplex c;
        c.dims[degree] = 1;
        return c;
    }

    static ChainComplex ungraded(int n, Matrix<K> d) {
        ChainComplex c;
        c.mode = Mode::ungraded;
        c.dims[0] = n;
        if (!d.is_zero()) c.diff[0] = std::move(d);
        return c;
    }

    bool validate(std::string* why = nullptr) const {
        auto fail = [&](const std::string& m) {
            if (why) *why = m;
            return false;
        };
        if (mode == Mode::ungraded) {
            if (field_char<K> != 2) return fail("ungraded complexes require characteristic 2");
            Matrix<K> m = d(0);
            if (m.rows() != static_cast<std::size_t>(dim(0)) || m.cols() != m.rows())
                return fail("ungraded differential shape");
            if (!(m * m).is_zero()) return fail("d^2 != 0");
            return true;
        }
        for (auto& [n, m] : diff) {
            if (m.rows() != static_cast<std::size_t>(dim(n - 1)) ||
                m.cols() != static_cast<std::size_t>(dim(n)))
                return fail("differential shape at degree " + std::to_string(n));
        }
        for (auto& [n, m] : diff) {
            Matrix<K> next = d(n + 1);
            if (next.cols() > 0 && !(m * next).is_zero())
                return fail("d^2 != 0 at degree " + std::to_string(n + 1));
        }
        return true;
    }
};

template <class K>
std::map<int, int> homology_ranks(const ChainComplex<K>& c) {
    std::map<int, int> h;
    if (c.mode == Mode::ungraded) {
        Matrix<K> m = c.d(0);
        int r = static_cast<int>(m.rank());
        int hr = c.dim(0) - 2 * r;
        if (hr != 0) h[0] = hr;
        return h;
    }
    if (c.dims.empty()) return h;
    for (int n = c.min_degree(); n <= c.max_degree(); ++n) {
        int kerd = c.dim(n) - static_cast<int>(c.d(n).rank());
        int im = static_cast<int>(c.d(n + 1).rank());
        if (kerd - im != 0) h[n] = kerd - im;
    }
    return h;
}

template <class K>
ChainComplex<K> suspend(const ChainComplex<K>& c, int k) {
    if (c.mode == Mode::ungraded || k == 0) return c;
    ChainComplex<K> r;
    for (auto& [n, d] : c.dims) r.dims[n + k] = d;
    for (auto& [n, m] : c.diff) r.diff[n + k] = sign_pow<K>(k) * m;
    return r;
}

// Basis convention for tensors: (C (x) D)_n = sum over i+j=n of C_i (x) D_j,
// blocks in increasing i, index a*dimD_j + b inside a block.
template <class K>
struct TensorIndex {
    const ChainComplex<K>*c, *d;
    int block_offset(int n, int i) const {
        int off = 0;
        for (int ii = lowest(n); ii < i; ++ii) off += c->dim(ii) * d->dim(n - ii);
        return off;
    }
    int lowest(int n) const { return c->min_degree(); }
    int index(int n, int i, int a, int b) const { return block_offset(n, i) + a * d->dim(n - i) + b; }
};

template <class K>
ChainComplex<K> tensor(const ChainComplex<K>& c, const ChainComplex<K>& d) {
    if (c.mode != d.mode) throw std::invalid_argument("tensor: mode mismatch");
    ChainComplex<K> r;
    if (c.mode == Mode::ungraded) {
        r.mode = Mode::ungraded;
        int nc = c.dim(0), nd = d.dim(0);
        r.set_dim(0, nc * nd);
        Matrix<K> m = kron(c.d(0), Matrix<K>::identity(nd)) + kron(Matrix<K>::identity(nc), d.d(0));
        r.set_d(0, std::move(m));
        return r;
    }
    if (c.dims.empty() || d.dims.empty()) return r;
    int lo = c.min_degree() + d.min_degree();
    int hi = c.max_degree() + d.max_degree();
    TensorIndex<K> ix{&c, &d};
    for (int n = lo; n <= hi; ++n) {
        int dim = 0;
        for (int i = c.min_degree(); i <= c.max_degree(); ++i) dim += c.dim(i) * d.dim(n - i);
        if (dim) r.dims[n] = dim;
    }
    for (int n = lo + 1; n <= hi; ++n) {
        if (r.dim(n) == 0 || r.dim(n - 1) == 0) continue;
        Matrix<K> m(r.dim(n - 1), r.dim(n));
        for (int i = c.min_degree(); i <= c.max_degree(); ++i) {
            int j = n - i;
            if (c.dim(i) == 0 || d.dim(j) == 0) continue;
            Matrix<K> dc = c.d(i), dd = d.d(j);
            for (int a = 0; a < c.dim(i); ++a)
                for (int b = 0; b < d.dim(j); ++b) {
                    int src = ix.index(n, i, a, b);
                    // dc(a) (x) b lands in block (i-1, j)
                    for (int a2 = 0; a2 < c.dim(i - 1); ++a2)
                        if (!dc(a2, a).is_zero())
                            m(ix.index(n - 1, i - 1, a2, b), src) += dc(a2, a);
                    // (-1)^i a (x) dd(b) lands in block (i, j-1)
                    K s = sign_pow<K>(i);
                    for (int b2 = 0; b2 < d.dim(j - 1); ++b2)
                        if (!dd(b2, b).is_zero())
                            m(ix.index(n - 1, i, a, b2), src) += s * dd(b2, b);
                }
        }
        r.set_d(n, std::move(m));
    }
    return r;
}

template <class K>
struct ChainMap {
    ChainComplex<K> src, tgt;
    int degree = 0;
    std::map<int, Matrix<K>> maps;   // f_n : src_n -> tgt_{n+degree} (ungraded: key 0)

    Matrix<K> f(int n) const {
        auto it = maps.find(src.mode == Mode::ungraded ? 0 : n);
        if (it != maps.end()) return it->second;
        return Matrix<K>(tgt.dim(n + degree), src.dim(n));
    }
    void set_f(int n, Matrix<K> m) {
        if (!m.is_zero()) maps[src.mode == Mode::ungraded ? 0 : n] = std::move(m);
    }

    static ChainMap identity(const ChainComplex<K>& c) {
        ChainMap m;
        m.src = m.tgt = c;
        if (c.mode == Mode::ungraded) {
            m.maps[0] = Matrix<K>::identity(c.dim(0));
        } else {
            for (auto& [n, d] : c.dims) m.maps[n] = Matrix<K>::identity(d);
        }
        return m;
    }

    // d_tgt f = (-1)^degree f d_src
    bool validate(std::string* why = nullptr) const {
        if (src.mode != tgt.mode) {
            if (why) *why = "mode mismatch";
            return false;
        }
        if (src.mode == Mode::ungraded) {
            if (degree != 0) {
                if (why) *why = "ungraded chain maps have degree 0";
                return false;
            }
            if (!(tgt.d(0) * f(0) == f(0) * src.d(0))) {
                if (why) *why = "does not commute with d";
                return false;
            }
            return true;
        }
        if (src.dims.empty()) return true;
        K s = sign_pow<K>(degree);
        for (int n = src.min_degree(); n <= src.max_degree() + 1; ++n) {
            Matrix<K> lhs = tgt.d(n + degree) * f(n);
            Matrix<K> rhs = s * (f(n - 1) * src.d(n));
            if (!(lhs == rhs)) {
                if (why) *why = "chain map relation fails at degree " + std::to_string(n);
                return false;
            }
        }
        return true;
    }
};

template <class K>
ChainMap<K> compose(const ChainMap<K>& g, const ChainMap<K>& f) {
    ChainMap<K> r;
    r.src = f.src;
    r.tgt = g.tgt;
    r.degree = f.degree + g.degree;
    if (f.src.mode == Mode::ungraded) {
        r.set_f(0, g.f(0) * f.f(0));
        return r;
    }
    for (int n = f.src.min_degree(); n <= f.src.max_degree(); ++n)
        if (f.src.dim(n) > 0) r.set_f(n, g.f(n + f.degree) * f.f(n));
    return r;
}

// Mapping cone of a degree-0 chain map: Cone_n = src_{n-1} (+) tgt_n,
// d(c, x) = (-d c, d x - f c).
template <class K>
ChainComplex<K> cone(const ChainMap<K>& f) {
    if (f.degree != 0) throw std::invalid_argument("cone: degree must be 0");
    ChainComplex<K> r;
    if (f.src.mode == Mode::ungraded) {
        r.mode = Mode::ungraded;
        int ns = f.src.dim(0), nt = f.tgt.dim(0);
        r.set_dim(0, ns + nt);
        Matrix<K> m(ns + nt, ns + nt);
        Matrix<K> ds = f.src.d(0), dt = f.tgt.d(0), ff = f.f(0);
        for (int i = 0; i < ns; ++i)
            for (int j = 0; j < ns; ++j) m(i, j) = ds(i, j);
        for (int i = 0; i < nt; ++i) {
            for (int j = 0; j < ns; ++j) m(ns + i, j) = ff(i, j);
            for (int j = 0; j < nt; ++j) m(ns + i, ns + j) = dt(i, j);
        }
        r.set_d(0, std::move(m));
        return r;
    }
    int lo = std::min(f.src.min_degree() + 1, f.tgt.min_degree());
    int hi = std::max(f.src.max_degree() + 1, f.tgt.max_degree());
    for (int n = lo; n <= hi; ++n) {
        int d = f.src.dim(n - 1) + f.tgt.dim(n);
        if (d) r.dims[n] = d;
    }
    for (int n = lo; n <= hi; ++n) {
        int rs = f.src.dim(n - 2) + f.tgt.dim(n - 1);
        int cs = f.src.dim(n - 1) + f.tgt.dim(n);
        if (rs == 0 || cs == 0) continue;
        Matrix<K> m(rs, cs);
        Matrix<K> ds = f.src.d(n - 1), dt = f.tgt.d(n), ff = f.f(n - 1);
        int so = f.src.dim(n - 2);
        for (std::size_t i = 0; i < ds.rows(); ++i)
            for (std::size_t j = 0; j < ds.cols(); ++j) m(i, j) = -ds(i, j);
        for (std::size_t i = 0; i < ff.rows(); ++i)
            for (std::size_t j = 0; j < ff.cols(); ++j) m(so + i, j) = -ff(i, j);
        for (std::size_t i = 0; i < dt.rows(); ++i)
            for (std::size_t j = 0; j < dt.cols(); ++j) m(so + i, f.src.dim(n - 1) + j) = dt(i, j);
        r.set_d(n, std::move(m));
    }
    return r;
}

template <class K>
bool is_acyclic(const ChainComplex<K>& c) {
    return homology_ranks(c).empty();
}

template <class K>
bool is_quasi_iso(const ChainMap<K>& f) {
    if (f.degree != 0) throw std::invalid_argument("is_quasi_iso: degree must be 0");
    return is_acyclic(cone(f));
}

// Interchange Sigma^k Sigma^l A -> Sigma^l Sigma^k A: (-1)^{kl} per generator.
// Both iterated suspensions coincide with suspend(A, k+l) here, so the map is
// returned as an endomorphism of that complex; the composition through it
// differs from the direct collapse by exactly (-1)^{kl}.
template <class K>
ChainMap<K> suspension_interchange(int k, int l, const ChainComplex<K>& a) {
    ChainComplex<K> s = suspend(a, k + l);
    ChainMap<K> m;
    m.src = m.tgt = s;
    m.degree = 0;
    K sign = sign_pow<K>(static_cast<long long>(k) * l);
    if (s.mode == Mode::ungraded) {
        m.set_f(0, sign * Matrix<K>::identity(s.dim(0)));
        return m;
    }
    for (auto& [n, d] : s.dims) m.set_f(n, sign * Matrix<K>::identity(d));
    return m;
}

template <class K>
ChainComplex<K> direct_sum(const ChainComplex<K>& a, const ChainComplex<K>& b) {
    if (a.mode != b.mode) throw std::invalid_argument("direct_sum: mode mismatch");
    ChainComplex<K> r;
    r.mode = a.mode;
    auto block = [&](int n) {
        int da = a.dim(n), db = b.dim(n);
        Matrix<K> m(a.dim(n - 1) + b.dim(n - 1), da + db);
        Matrix<K> ma = a.d(n), mb = b.d(n);
        for (std::size_t i = 0; i < ma.rows(); ++i)
            for (std::size_t j = 0; j < ma.cols(); ++j) m(i, j) = ma(i, j);
        for (std::size_t i = 0; i < mb.rows(); ++i)
            for (std::size_t j = 0; j < mb.cols(); ++j)
                m(a.dim(n - 1) + i, da + j) = mb(i, j);
        return m;
    };
    if (a.mode == Mode::ungraded) {
        r.set_dim(0, a.dim(0) + b.dim(0));
        int na = a.dim(0), nb = b.dim(0);
        Matrix<K> m(na + nb, na + nb);
        Matrix<K> ma = a.d(0), mb = b.d(0);
        for (int i = 0; i < na; ++i)
            for (int j = 0; j < na; ++j) m(i, j) = ma(i, j);
        for (int i = 0; i < nb; ++i)
            for (int j = 0; j < nb; ++j) m(na + i, na + j) = mb(i, j);
        r.set_d(0, std::move(m));
        return r;
    }
    if (a.dims.empty() && b.dims.empty()) return r;
    int lo = std::min(a.dims.empty() ? b.min_degree() : a.min_degree(),
                      b.dims.empty() ? a.min_degree() : b.min_degree());
    int hi = std::max(a.dims.empty() ? b.max_degree() : a.max_degree(),
                      b.dims.empty() ? a.max_degree() : b.max_degree());
    for (int n = lo; n <= hi; ++n)
        if (a.dim(n) + b.dim(n) > 0) r.dims[n] = a.dim(n) + b.dim(n);
    for (int n = lo; n <= hi; ++n)
        if (r.dim(n) > 0 && r.dim(n - 1) > 0) r.set_d(n, block(n));
    return r;
}

// Representatives for H_n: columns of `cycles` span ker d_n; `cls` is the
// canonical quotient by the image of d_{n+1} expressed in cycle coordinates.
template <class K>
struct HomologySpace {
    Matrix<K> cycles;
    QuotientMap<K> cls;

    int rank() const { return static_cast<int>(cls.dim()); }
    // representative chain of the i-th homology basis class
    std::vector<K> representative(std::size_t i) const {
        return cycles.apply(cls.section.col(i));
    }
    // class of a cycle z (given in chain coordinates)
    std::vector<K> class_of(const std::vector<K>& z) const {
        auto coord = cycles.solve(z);
        if (!coord) throw std::runtime_error("class_of: not a cycle");
        return cls.proj.apply(*coord);
    }
};

template <class K>
HomologySpace<K> homology_space(const ChainComplex<K>& c, int n) {
    Matrix<K> dn = c.mode == Mode::ungraded ? c.d(0) : c.d(n);
    Matrix<K> dn1 = c.mode == Mode::ungraded ? c.d(0) : c.d(n + 1);
    HomologySpace<K> h;
    h.cycles = dn.kernel_basis();
    Matrix<K> img = dn1.column_space_basis();
    auto coords = h.cycles.solve_matrix(img);
    if (!coords) throw std::runtime_error("homology_space: image not inside kernel (d^2 != 0?)");
    h.cls = quotient_by(h.cycles.cols(), *coords);
    return h;
}

// Matrix of H_n(f) w.r.t. the canonical homology bases of src and tgt.
template <class K>
Matrix<K> induced_homology_map(const ChainMap<K>& f, int n) {
    HomologySpace<K> hs = homology_space(f.src, n);
    HomologySpace<K> ht = homology_space(f.tgt, n + f.degree);
    Matrix<K> m(ht.rank(), hs.rank());
    for (int i = 0; i < hs.rank(); ++i) {
        auto z = hs.representative(i);
        auto fz = f.f(n).apply(z);
        m.set_col(i, ht.class_of(fz));
    }
    return m;
}

} // namespace homalg
