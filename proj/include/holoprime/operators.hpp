#pragma once

#include <stdexcept>
#include <vector>

#include "holoprime/subspace.hpp"

namespace holoprime {

/// Matrix of beta |-> alpha ^ beta from Lambda^k to Lambda^{k+deg alpha},
/// columns indexed by colex blades of degree k.
inline Mat mult_map(const Form& alpha, int k) {
    int n = alpha.n();
    int ka = alpha.degree();
    if (k < 0 || k + ka > n) throw std::invalid_argument("mult_map: degree overflow");
    auto dom = blade_list(n, k);
    auto cod = blade_list(n, k + ka);
    Mat m(int(cod.size()), int(dom.size()));
    for (std::size_t j = 0; j < dom.size(); ++j) {
        Form img = wedge(alpha, Form::blade(n, dom[j]));
        for (const auto& [mask, v] : img.terms()) m(int(colex_index(mask)), int(j)) = v;
    }
    return m;
}

/// Half the rank of the skew coefficient matrix A with A[i][j] = coeff of
/// w{i,j} for i < j.
inline int rank_two_form(const Form& alpha) {
    if (alpha.degree() != 2) throw std::invalid_argument("rank_two_form: degree must be 2");
    int n = alpha.n();
    Mat a(n, n);
    for (const auto& [mask, v] : alpha.terms()) {
        auto idx = mask_to_indices(mask);
        int i = idx[0] - 1, j = idx[1] - 1;
        a(i, j) = v;
        a(j, i) = -v;
    }
    return rank_of(a) / 2;
}

/// T_alpha(beta) = *(alpha ^ beta) on Lambda^k, for deg alpha = n - 2k.
/// Self-adjoint for even k, anti-self-adjoint for odd k.
inline Mat t_operator(const Form& alpha, int k) {
    int n = alpha.n();
    if (alpha.degree() != n - 2 * k)
        throw std::invalid_argument("t_operator: need deg(alpha) = n - 2k");
    auto dom = blade_list(n, k);
    Mat m(int(dom.size()), int(dom.size()));
    for (std::size_t j = 0; j < dom.size(); ++j) {
        Form img = hodge_star(wedge(alpha, Form::blade(n, dom[j])));
        for (const auto& [mask, v] : img.terms()) m(int(colex_index(mask)), int(j)) = v;
    }
    return m;
}

/// Kernel of (map - value * id) as a canonically reduced subspace of
/// Lambda^k(R^n); the zero subspace when value is not an eigenvalue.
inline Subspace eigenspace(const Mat& map, const Rational& value, int n, int k) {
    if (map.rows() != map.cols()) throw std::invalid_argument("eigenspace: non-square map");
    if (map.rows() != int(binomial(n, k)))
        throw std::invalid_argument("eigenspace: map size does not match Lambda^k(R^n)");
    Mat shifted = map;
    for (int i = 0; i < map.rows(); ++i) shifted(i, i) -= value;
    return Subspace::from_rows(n, k, kernel_of(shifted));
}

/// Image of a matrix acting on Lambda^k coordinates, as a subspace of the
/// codomain Lambda^{k'}(R^n).
inline Subspace image_subspace(const Mat& m, int n, int cod_k) {
    return Subspace::from_rows(n, cod_k, m.transpose());
}

}  // namespace holoprime
