#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "holoprime/form.hpp"
#include "holoprime/matrix.hpp"

namespace holoprime {

inline std::vector<Rational> form_coords(const Form& f, const std::vector<BladeMask>& basis) {
    std::vector<Rational> v(basis.size(), Rational(0));
    for (const auto& [m, x] : f.terms()) v[colex_index(m)] = x;
    return v;
}

inline Form form_from_coords(int n, int k, const std::vector<Rational>& v,
                             const std::vector<BladeMask>& basis) {
    Form f(n, k);
    for (std::size_t j = 0; j < basis.size(); ++j)
        if (v[j] != 0) f.add_term(basis[j], v[j]);
    return f;
}

/// Linear subspace of Lambda^k(R^n), held as an RREF basis matrix whose rows
/// are coordinate vectors over the colex blade basis. RREF makes equality of
/// subspaces equality of matrices.
class Subspace {
public:
    Subspace(int n, int k, Mat rref_basis, std::vector<int> pivots)
        : n_(n), k_(k), basis_(std::move(rref_basis)), pivots_(std::move(pivots)) {
        check_ambient_dim(n);
    }

    static Subspace zero(int n, int k) {
        return Subspace(n, k, Mat(0, int(binomial(n, k))), {});
    }

    static Subspace from_rows(int n, int k, Mat rows) {
        std::vector<int> piv = rref_inplace(rows);
        return Subspace(n, k, std::move(rows), std::move(piv));
    }

    static Subspace span(const std::vector<Form>& forms) {
        if (forms.empty()) throw std::invalid_argument("span of empty list needs explicit shape");
        int n = forms.front().n(), k = forms.front().degree();
        return span(n, k, forms);
    }

    static Subspace span(int n, int k, const std::vector<Form>& forms) {
        auto blades = blade_list(n, k);
        Mat m(int(forms.size()), int(blades.size()));
        for (std::size_t i = 0; i < forms.size(); ++i) {
            const Form& f = forms[i];
            if (f.n() != n || f.degree() != k)
                throw std::invalid_argument("span: mixed degrees or dimensions");
            m.set_row(int(i), form_coords(f, blades));
        }
        return from_rows(n, k, std::move(m));
    }

    static Subspace full(int n, int k) {
        int d = int(binomial(n, k));
        Mat m = Mat::identity(d);
        std::vector<int> piv(d);
        for (int i = 0; i < d; ++i) piv[i] = i;
        return Subspace(n, k, std::move(m), std::move(piv));
    }

    int n() const { return n_; }
    int degree() const { return k_; }
    int dim() const { return basis_.rows(); }
    int ambient_dim() const { return int(binomial(n_, k_)); }
    const Mat& basis() const { return basis_; }
    const std::vector<int>& pivots() const { return pivots_; }
    bool is_zero() const { return dim() == 0; }
    bool is_full() const { return dim() == ambient_dim(); }

    bool operator==(const Subspace& o) const {
        return n_ == o.n_ && k_ == o.k_ && basis_ == o.basis_;
    }

    Form basis_form(int i) const {
        auto blades = blade_list(n_, k_);
        return form_from_coords(n_, k_, basis_.row(i), blades);
    }

    std::vector<Form> basis_forms() const {
        std::vector<Form> out;
        out.reserve(dim());
        for (int i = 0; i < dim(); ++i) out.push_back(basis_form(i));
        return out;
    }

    /// Reduce v against the RREF basis; returns the residual.
    std::vector<Rational> reduce(std::vector<Rational> v) const {
        for (int i = 0; i < dim(); ++i) {
            const Rational f = v[pivots_[i]];
            if (f == 0) continue;
            for (int j = 0; j < basis_.cols(); ++j)
                if (basis_(i, j) != 0) v[j] -= f * basis_(i, j);
        }
        return v;
    }

    bool contains(const Form& f) const {
        if (f.n() != n_ || f.degree() != k_) return false;
        auto v = reduce(form_coords(f, blade_list(n_, k_)));
        for (const auto& x : v)
            if (x != 0) return false;
        return true;
    }

    bool contains(const Subspace& o) const {
        if (o.n_ != n_ || o.k_ != k_) return false;
        for (int i = 0; i < o.dim(); ++i) {
            auto v = reduce(o.basis_.row(i));
            for (const auto& x : v)
                if (x != 0) return false;
        }
        return true;
    }

    /// Coordinates of a vector known to lie in this subspace: with an RREF
    /// basis these are just the entries at the pivot columns. Throws if the
    /// vector is not actually contained.
    std::vector<Rational> coords_in_basis(const std::vector<Rational>& v) const {
        std::vector<Rational> c(dim());
        for (int i = 0; i < dim(); ++i) c[i] = v[pivots_[i]];
        // residual check
        std::vector<Rational> r = v;
        for (int i = 0; i < dim(); ++i) {
            if (c[i] == 0) continue;
            for (int j = 0; j < basis_.cols(); ++j)
                if (basis_(i, j) != 0) r[j] -= c[i] * basis_(i, j);
        }
        for (const auto& x : r)
            if (x != 0) throw std::logic_error("coords_in_basis: vector not in subspace");
        return c;
    }

    Subspace embedded(int new_n) const {
        if (new_n < n_) throw std::invalid_argument("embed: ambient must not shrink");
        // colex positions of existing blades are unchanged; new columns
        // (blades touching the new axes) sit strictly to the right.
        auto old_blades = blade_list(n_, k_);
        auto new_blades = blade_list(new_n, k_);
        Mat m(dim(), int(new_blades.size()));
        for (int i = 0; i < dim(); ++i)
            for (std::size_t j = 0; j < old_blades.size(); ++j) m(int(i), int(j)) = basis_(i, int(j));
        return from_rows(new_n, k_, std::move(m));
    }

private:
    int n_, k_;
    Mat basis_;
    std::vector<int> pivots_;
};

inline Subspace subspace_sum(const Subspace& a, const Subspace& b) {
    if (a.n() != b.n() || a.degree() != b.degree())
        throw std::invalid_argument("subspace sum: shape mismatch");
    return Subspace::from_rows(a.n(), a.degree(), Mat::stack(a.basis(), b.basis()));
}

/// Orthogonal complement under the blade metric: the nullspace of the basis
/// matrix, since the blade basis is orthonormal.
inline Subspace orthogonal_complement(const Subspace& a) {
    if (a.dim() == 0) return Subspace::full(a.n(), a.degree());
    Mat k = kernel_of(a.basis());
    return Subspace::from_rows(a.n(), a.degree(), std::move(k));
}

/// Intersection by double complement (exact metric available).
inline Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
    if (a.n() != b.n() || a.degree() != b.degree())
        throw std::invalid_argument("subspace intersect: shape mismatch");
    return orthogonal_complement(subspace_sum(orthogonal_complement(a), orthogonal_complement(b)));
}

/// E . Lambda^i, the span of wedge(e, B) over basis e of E and blades B.
inline Subspace product_space(const Subspace& e, int i) {
    if (i < 0) throw std::invalid_argument("product_space: negative degree");
    if (i == 0) return e;
    int n = e.n(), k = e.degree();
    if (k + i > n) throw std::invalid_argument("product_space: degree overflow");
    auto tgt = blade_list(n, k + i);
    auto mids = blade_list(n, i);
    std::vector<Form> gens;
    gens.reserve(std::size_t(e.dim()) * mids.size());
    for (int r = 0; r < e.dim(); ++r) {
        Form er = e.basis_form(r);
        for (BladeMask b : mids) gens.push_back(wedge(er, Form::blade(n, b)));
    }
    return Subspace::span(n, k + i, gens);
}

/// Smallest r with E.Lambda^{r+1} full, i.e. the last proper product degree.
/// E = 0 never saturates and is an error.
inline int saturation_degree(const Subspace& e) {
    if (e.is_zero()) throw std::invalid_argument("saturation_degree: zero subspace never saturates");
    int n = e.n(), k = e.degree();
    Subspace cur = e;
    for (int r = 0;; ++r) {
        if (cur.is_full()) return r == 0 ? 0 : r - 1;
        if (k + r + 1 > n) throw std::logic_error("saturation_degree: ran past top degree");
        cur = product_space(cur, 1);
        if (cur.is_full()) return r;
    }
}

/// Orthogonal projection onto a subspace, via the exact Gram inverse.
class Projector {
public:
    explicit Projector(const Subspace& s) : s_(s) {
        if (s.dim() > 0) {
            Mat g = s.basis() * s.basis().transpose();
            gram_inv_ = inverse_of(g);
        }
    }

    std::vector<Rational> project(const std::vector<Rational>& v) const {
        if (s_.dim() == 0) return std::vector<Rational>(v.size(), Rational(0));
        // proj = B^T G^{-1} B v  (rows of B are the basis)
        std::vector<Rational> t(s_.dim(), Rational(0));
        for (int i = 0; i < s_.dim(); ++i)
            for (int j = 0; j < s_.basis().cols(); ++j)
                if (s_.basis()(i, j) != 0 && v[j] != 0) t[i] += s_.basis()(i, j) * v[j];
        std::vector<Rational> u(s_.dim(), Rational(0));
        for (int i = 0; i < s_.dim(); ++i)
            for (int j = 0; j < s_.dim(); ++j)
                if (gram_inv_(i, j) != 0 && t[j] != 0) u[i] += gram_inv_(i, j) * t[j];
        std::vector<Rational> p(s_.basis().cols(), Rational(0));
        for (int i = 0; i < s_.dim(); ++i)
            for (int j = 0; j < s_.basis().cols(); ++j)
                if (s_.basis()(i, j) != 0 && u[i] != 0) p[j] += u[i] * s_.basis()(i, j);
        return p;
    }

    Form project(const Form& f) const {
        if (f.n() != s_.n() || f.degree() != s_.degree())
            throw std::invalid_argument("projector: shape mismatch");
        auto blades = blade_list(s_.n(), s_.degree());
        return form_from_coords(s_.n(), s_.degree(), project(form_coords(f, blades)), blades);
    }

    const Subspace& target() const { return s_; }

private:
    Subspace s_;
    Mat gram_inv_;
};

/// Quotient Lambda^k / E realized on the orthogonal complement E-perp: the
/// coordinate map is orthogonal projection followed by pivot extraction in
/// the complement's RREF basis.
class QuotientSpace {
public:
    QuotientSpace(int n, int k, Subspace divisor)
        : n_(n),
          k_(k),
          divisor_(std::move(divisor)),
          complement_(orthogonal_complement(divisor_)),
          proj_(divisor_) {
        if (divisor_.n() != n || divisor_.degree() != k)
            throw std::invalid_argument("quotient: divisor shape mismatch");
    }

    int n() const { return n_; }
    int degree() const { return k_; }
    int dim() const { return complement_.dim(); }
    const Subspace& divisor() const { return divisor_; }
    const Subspace& complement() const { return complement_; }

    std::vector<Rational> coords(const std::vector<Rational>& ambient_v) const {
        std::vector<Rational> w = ambient_v;
        if (divisor_.dim() > 0) {
            auto p = proj_.project(ambient_v);
            for (std::size_t j = 0; j < w.size(); ++j) w[j] -= p[j];
        }
        return complement_.coords_in_basis(w);
    }

    std::vector<Rational> coords(const Form& f) const {
        return coords(form_coords(f, blade_list(n_, k_)));
    }

    /// Canonical representative (in E-perp) of the class with given coords.
    Form representative(int i) const { return complement_.basis_form(i); }

private:
    int n_, k_;
    Subspace divisor_;
    Subspace complement_;
    Projector proj_;
};

/// The map lambda: Lambda^{k+i}/E_i -> Lambda^{k+i+1}/E_{i+1} induced by the
/// wedge, well defined only when lambda ^ (source divisor) lies inside the
/// target divisor. Columns act on quotient coordinates.
inline Mat induced_quotient_map(const Form& lambda, const QuotientSpace& source,
                                const QuotientSpace& target) {
    if (lambda.degree() != 1) throw std::invalid_argument("induced map: lambda must have degree 1");
    if (lambda.n() != source.n() || source.n() != target.n() ||
        target.degree() != source.degree() + 1)
        throw std::invalid_argument("induced map: shape mismatch");
    for (int i = 0; i < source.divisor().dim(); ++i) {
        Form img = wedge(lambda, source.divisor().basis_form(i));
        if (!target.divisor().contains(img))
            throw std::invalid_argument("ill-defined quotient map: lambda ^ E not inside E1");
    }
    Mat m(target.dim(), source.dim());
    for (int j = 0; j < source.dim(); ++j) {
        Form img = wedge(lambda, source.representative(j));
        auto c = target.coords(img);
        for (int i = 0; i < target.dim(); ++i) m(i, j) = c[i];
    }
    return m;
}

}  // namespace holoprime
