#pragma once

#include <random>
#include <stdexcept>
#include <vector>

#include "holoprime/operators.hpp"

namespace holoprime {

/// Invertible linear substitution on Lambda^1, extended multiplicatively to
/// all degrees. g(j,i) is the coefficient of w^{j+1} in the image of w^{i+1}.
struct LinearSubstitution {
    int n;
    Mat g;

    Form image_of_covector(int i) const {
        Form f(n, 1);
        for (int j = 0; j < n; ++j)
            if (g(j, i - 1) != 0) f.add_term(BladeMask(1) << j, g(j, i - 1));
        return f;
    }
};

inline Form apply_substitution(const LinearSubstitution& s, const Form& f) {
    if (f.n() != s.n) throw std::invalid_argument("substitution: ambient mismatch");
    Form out(f.n(), f.degree());
    for (const auto& [mask, v] : f.terms()) {
        Form prod = Form::one(f.n()) * v;
        for (int idx : mask_to_indices(mask)) prod = wedge(prod, s.image_of_covector(idx));
        out += prod;
    }
    return out;
}

inline Subspace apply_substitution(const LinearSubstitution& s, const Subspace& e) {
    std::vector<Form> imgs;
    imgs.reserve(e.dim());
    for (int i = 0; i < e.dim(); ++i) imgs.push_back(apply_substitution(s, e.basis_form(i)));
    return Subspace::span(e.n(), e.degree(), imgs);
}

/// Deterministic bounded draw; avoids distribution objects so streams are
/// identical across standard libraries.
inline long bounded_int(std::mt19937_64& rng, long lo, long hi) {
    return lo + long(rng() % (unsigned long)(hi - lo + 1));
}

inline LinearSubstitution random_substitution(int n, std::mt19937_64& rng) {
    for (;;) {
        Mat g(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) g(i, j) = Rational(bounded_int(rng, -3, 3));
        if (rank_of(g) == n) return LinearSubstitution{n, g};
    }
}

inline LinearSubstitution random_signed_permutation(int n, std::mt19937_64& rng) {
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[bounded_int(rng, 0, i)]);
    Mat g(n, n);
    for (int i = 0; i < n; ++i) g(perm[i], i) = Rational(bounded_int(rng, 0, 1) ? 1 : -1);
    return LinearSubstitution{n, g};
}

}  // namespace holoprime
