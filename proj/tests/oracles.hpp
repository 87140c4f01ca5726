#pragma once

// Independent oracles for the test suites. These deliberately avoid the
// production code paths: wedge/star are recomputed from index lists with
// insertion-sort parity, ranks come from modular arithmetic or explicit
// minors, so an implementation bug cannot certify itself.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>
#include <vector>

#include "holoprime/form.hpp"
#include "holoprime/matrix.hpp"
#include "holoprime/transform.hpp"

namespace oracle {

using holoprime::Form;
using holoprime::Mat;
using holoprime::Rational;

/// Parity of the permutation sorting v, or -1 sign convention: returns 0 if v
/// has duplicates, +1/-1 otherwise.
inline int sort_sign(std::vector<int> v) {
    int swaps = 0;
    for (std::size_t i = 1; i < v.size(); ++i) {
        std::size_t j = i;
        while (j > 0 && v[j - 1] > v[j]) {
            std::swap(v[j - 1], v[j]);
            ++swaps;
            --j;
        }
    }
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] == v[i - 1]) return 0;
    return (swaps % 2 == 0) ? 1 : -1;
}

inline Form slow_wedge(const Form& a, const Form& b) {
    Form out(a.n(), a.degree() + b.degree());
    if (a.degree() + b.degree() > a.n()) return out;
    for (const auto& [ma, va] : a.terms()) {
        for (const auto& [mb, vb] : b.terms()) {
            std::vector<int> idx = holoprime::mask_to_indices(ma);
            auto ib = holoprime::mask_to_indices(mb);
            idx.insert(idx.end(), ib.begin(), ib.end());
            int s = sort_sign(idx);
            if (s == 0) continue;
            std::sort(idx.begin(), idx.end());
            out.add_term(holoprime::indices_to_mask(idx, a.n()), Rational(s) * va * vb);
        }
    }
    return out;
}

inline Form slow_star(const Form& a) {
    Form out(a.n(), a.n() - a.degree());
    for (const auto& [m, v] : a.terms()) {
        std::vector<int> idx = holoprime::mask_to_indices(m);
        std::vector<int> comp;
        for (int i = 1; i <= a.n(); ++i)
            if (std::find(idx.begin(), idx.end(), i) == idx.end()) comp.push_back(i);
        std::vector<int> cat = idx;
        cat.insert(cat.end(), comp.begin(), comp.end());
        int s = sort_sign(cat);
        out.add_term(holoprime::indices_to_mask(comp, a.n()), Rational(s) * v);
    }
    return out;
}

/// Rank over Z/p. Throws if a denominator vanishes mod p; callers retry with
/// the next prime.
inline int modp_rank(const Mat& m, std::uint64_t p) {
    auto inv_mod = [&](std::uint64_t a) {
        std::uint64_t r = 1, b = a % p, e = p - 2;
        while (e) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return r;
    };
    std::vector<std::vector<std::uint64_t>> a(m.rows(), std::vector<std::uint64_t>(m.cols()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            const Rational& x = m(i, j);
            std::uint64_t num = mpz_fdiv_ui(x.get_num().get_mpz_t(), p);
            std::uint64_t den = mpz_fdiv_ui(x.get_den().get_mpz_t(), p);
            if (den == 0) throw std::runtime_error("denominator vanishes mod p");
            a[i][j] = num * inv_mod(den) % p;
        }
    int rank = 0;
    for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
        int sel = -1;
        for (int i = rank; i < m.rows(); ++i)
            if (a[i][col] != 0) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        std::swap(a[sel], a[rank]);
        std::uint64_t inv = inv_mod(a[rank][col]);
        for (int j = col; j < m.cols(); ++j) a[rank][j] = a[rank][j] * inv % p;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == rank || a[i][col] == 0) continue;
            std::uint64_t f = a[i][col];
            for (int j = col; j < m.cols(); ++j)
                a[i][j] = (a[i][j] + (p - f) * a[rank][j]) % p;
        }
        ++rank;
    }
    return rank;
}

inline int modp_rank_retrying(const Mat& m) {
    for (std::uint64_t p : {1000003ULL, 1000033ULL, 1000037ULL, 999983ULL}) {
        try {
            return modp_rank(m, p);
        } catch (const std::runtime_error&) {
            continue;
        }
    }
    throw std::runtime_error("all oracle primes hit a denominator");
}

inline Rational det_cofactor(const Mat& m) {
    const int n = m.rows();
    if (n == 0) return Rational(1);
    if (n == 1) return m(0, 0);
    Rational d(0);
    for (int j = 0; j < n; ++j) {
        if (m(0, j) == 0) continue;
        Mat sub(n - 1, n - 1);
        for (int i = 1; i < n; ++i) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) continue;
                sub(i - 1, cc++) = m(i, c);
            }
        }
        Rational t = m(0, j) * det_cofactor(sub);
        d += (j % 2 == 0) ? t : -t;
    }
    return d;
}

/// Exhaustive minor rank for small matrices (cofactor determinants).
inline int minor_rank(const Mat& m) {
    int best = 0;
    std::vector<int> rows(m.rows()), cols(m.cols());
    for (int i = 0; i < m.rows(); ++i) rows[i] = i;
    for (int j = 0; j < m.cols(); ++j) cols[j] = j;
    int maxr = std::min(m.rows(), m.cols());
    for (int r = maxr; r >= 1; --r) {
        std::vector<int> rsel(r), csel(r);
        std::function<bool(int, int)> pick_cols = [&](int from, int depth) {
            if (depth == r) {
                Mat sub(r, r);
                for (int i = 0; i < r; ++i)
                    for (int j = 0; j < r; ++j) sub(i, j) = m(rsel[i], csel[j]);
                return det_cofactor(sub) != 0;
            }
            for (int c = from; c < m.cols(); ++c) {
                csel[depth] = c;
                if (pick_cols(c + 1, depth + 1)) return true;
            }
            return false;
        };
        std::function<bool(int, int)> pick_rows = [&](int from, int depth) {
            if (depth == r) return pick_cols(0, 0);
            for (int i = from; i < m.rows(); ++i) {
                rsel[depth] = i;
                if (pick_rows(i + 1, depth + 1)) return true;
            }
            return false;
        };
        if (pick_rows(0, 0)) {
            best = r;
            break;
        }
    }
    return best;
}

inline Form random_form(int n, int k, std::mt19937_64& rng, long range = 5) {
    Form f(n, k);
    for (auto m : holoprime::blade_list(n, k)) {
        long c = holoprime::bounded_int(rng, -range, range);
        if (c != 0) f.add_term(m, Rational(c));
    }
    return f;
}

inline Form random_nonzero_form(int n, int k, std::mt19937_64& rng, long range = 5) {
    for (;;) {
        Form f = random_form(n, k, rng, range);
        if (!f.is_zero()) return f;
    }
}

}  // namespace oracle
