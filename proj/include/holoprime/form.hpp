#pragma once

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "holoprime/blade.hpp"
#include "holoprime/rational.hpp"

namespace holoprime {

/// Sparse exact element of Lambda^k(R^n): blade mask -> nonzero rational.
/// Degrees k > n are legal but necessarily empty (the zero form), which lets
/// wedge return "the zero form of that degree" on overflow.
class Form {
public:
    /// Default: the zero 0-form on R^1 (placeholder value for containers).
    Form() : n_(1), k_(0) {}

    Form(int n, int k) : n_(n), k_(k) {
        check_ambient_dim(n);
        if (k < 0) throw std::invalid_argument("negative form degree");
    }

    static Form zero(int n, int k) { return Form(n, k); }

    static Form blade(int n, BladeMask m, const Rational& coeff = Rational(1)) {
        Form f(n, blade_degree(m));
        if (m & ~full_mask(n)) throw std::invalid_argument("blade indices exceed ambient dimension");
        f.add_term(m, coeff);
        return f;
    }

    static Form blade(int n, const std::vector<int>& idx, const Rational& coeff = Rational(1)) {
        return blade(n, indices_to_mask(idx, n), coeff);
    }

    /// The constant 1 in Lambda^0.
    static Form one(int n) { return blade(n, BladeMask(0)); }

    /// omega^i, the i-th coordinate covector (1-based).
    static Form covector(int n, int i) {
        if (i < 1 || i > n) throw std::invalid_argument("covector index out of range");
        return blade(n, BladeMask(1) << (i - 1));
    }

    static Form volume(int n) { return blade(n, full_mask(n)); }

    int n() const { return n_; }
    int degree() const { return k_; }
    bool is_zero() const { return c_.empty(); }
    const std::map<BladeMask, Rational>& terms() const { return c_; }

    Rational coeff(BladeMask m) const {
        auto it = c_.find(m);
        return it == c_.end() ? Rational(0) : it->second;
    }

    void add_term(BladeMask m, const Rational& v) {
        if (v == 0) return;
        if (blade_degree(m) != k_) throw std::invalid_argument("blade degree mismatch");
        auto [it, inserted] = c_.emplace(m, v);
        if (!inserted) {
            it->second += v;
            if (it->second == 0) c_.erase(it);
        }
    }

    Form& operator+=(const Form& o) {
        require_same_shape(o);
        for (const auto& [m, v] : o.c_) add_term(m, v);
        return *this;
    }
    Form& operator-=(const Form& o) {
        require_same_shape(o);
        for (const auto& [m, v] : o.c_) add_term(m, -v);
        return *this;
    }
    Form& operator*=(const Rational& s) {
        if (s == 0) {
            c_.clear();
        } else {
            for (auto& [m, v] : c_) v *= s;
        }
        return *this;
    }

    friend Form operator+(Form a, const Form& b) { return a += b; }
    friend Form operator-(Form a, const Form& b) { return a -= b; }
    friend Form operator*(const Rational& s, Form a) { return a *= s; }
    friend Form operator*(Form a, const Rational& s) { return a *= s; }
    friend Form operator-(Form a) { return a *= Rational(-1); }

    bool operator==(const Form& o) const {
        return n_ == o.n_ && k_ == o.k_ && c_ == o.c_;
    }

    std::string str() const {
        if (c_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, v] : c_) {
            if (!first) os << " + ";
            first = false;
            os << "(" << rat_str(v) << ")";
            if (m) {
                os << "*w{";
                bool f2 = true;
                for (int i : mask_to_indices(m)) {
                    if (!f2) os << ",";
                    f2 = false;
                    os << i;
                }
                os << "}";
            }
        }
        return os.str();
    }

private:
    void require_same_shape(const Form& o) const {
        if (n_ != o.n_ || k_ != o.k_)
            throw std::invalid_argument("form shape mismatch");
    }

    int n_;
    int k_;
    std::map<BladeMask, Rational> c_;
};

/// Exterior product. Bilinear, sign by shuffle parity; degree overflow gives
/// the empty form of degree a.k + b.k.
inline Form wedge(const Form& a, const Form& b) {
    if (a.n() != b.n()) throw std::invalid_argument("wedge: ambient dimension mismatch");
    Form out(a.n(), a.degree() + b.degree());
    if (a.degree() + b.degree() > a.n()) return out;
    for (const auto& [ma, va] : a.terms()) {
        for (const auto& [mb, vb] : b.terms()) {
            int s = wedge_sign(ma, mb);
            if (s == 0) continue;
            Rational prod = va * vb;
            if (s < 0) prod = -prod;
            out.add_term(ma | mb, prod);
        }
    }
    return out;
}

/// Hodge star for the blade-orthonormal metric and orientation w{1..n}.
inline Form hodge_star(const Form& a) {
    if (a.degree() > a.n()) throw std::invalid_argument("hodge star: degree exceeds dimension");
    Form out(a.n(), a.n() - a.degree());
    for (const auto& [m, v] : a.terms()) {
        int s = star_sign(m, a.n());
        out.add_term(complement_mask(m, a.n()), s > 0 ? v : -v);
    }
    return out;
}

inline Rational inner_product(const Form& a, const Form& b) {
    if (a.n() != b.n() || a.degree() != b.degree())
        throw std::invalid_argument("inner product: shape mismatch");
    Rational s(0);
    const auto& small = a.terms().size() <= b.terms().size() ? a : b;
    const auto& large = a.terms().size() <= b.terms().size() ? b : a;
    for (const auto& [m, v] : small.terms()) s += v * large.coeff(m);
    return s;
}

/// Pushes a form up to a larger ambient dimension (same index sets).
inline Form embed_form(const Form& a, int new_n) {
    if (new_n < a.n()) throw std::invalid_argument("embed: ambient must not shrink");
    Form out(new_n, a.degree());
    for (const auto& [m, v] : a.terms()) out.add_term(m, v);
    return out;
}

}  // namespace holoprime
