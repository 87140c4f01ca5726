#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "holoprime/operators.hpp"

namespace holoprime {

namespace detail {

/// Cyclic Jacobi eigensolver for small symmetric matrices. Returns
/// eigenvalues and an orthogonal matrix of column eigenvectors.
inline void jacobi_eigen(std::vector<std::vector<double>> s, std::vector<double>& eigvals,
                         std::vector<std::vector<double>>& eigvecs) {
    const int n = int(s.size());
    eigvecs.assign(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i) eigvecs[i][i] = 1.0;
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += s[i][j] * s[i][j];
        if (off < 1e-26) break;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                if (std::fabs(s[p][q]) < 1e-300) continue;
                double theta = (s[q][q] - s[p][p]) / (2 * s[p][q]);
                double sgn = theta >= 0 ? 1.0 : -1.0;
                double t = sgn / (std::fabs(theta) + std::sqrt(theta * theta + 1));
                double c = 1.0 / std::sqrt(t * t + 1);
                double sn = t * c;
                for (int k = 0; k < n; ++k) {
                    double skp = s[k][p], skq = s[k][q];
                    s[k][p] = c * skp - sn * skq;
                    s[k][q] = sn * skp + c * skq;
                }
                for (int k = 0; k < n; ++k) {
                    double spk = s[p][k], sqk = s[q][k];
                    s[p][k] = c * spk - sn * sqk;
                    s[q][k] = sn * spk + c * sqk;
                }
                for (int k = 0; k < n; ++k) {
                    double vp = eigvecs[k][p], vq = eigvecs[k][q];
                    eigvecs[k][p] = c * vp - sn * vq;
                    eigvecs[k][q] = sn * vp + c * vq;
                }
            }
        }
    }
    eigvals.assign(n, 0.0);
    for (int i = 0; i < n; ++i) eigvals[i] = s[i][i];
}

}  // namespace detail

struct NumericCertificate {
    double minimum = 0.0;
    std::vector<double> per_restart;
    int restarts = 0;
    double tolerance = 0.0;
    std::uint64_t seed = 0;
    bool below_tolerance = false;
};

/// Heuristic evidence for primeness of a subspace: multi-start projected
/// gradient descent on the smallest singular value of the multiplication map
/// over the unit sphere of E. A floor well above the tolerance is evidence
/// that no element of E is annihilated by a covector; it is never a
/// certificate.
inline NumericCertificate numeric_prime_certificate(const Subspace& e, int restarts,
                                                    double tolerance, std::uint64_t seed) {
    if (restarts < 1) throw std::invalid_argument("numeric certificate: restarts must be >= 1");
    if (tolerance <= 0) throw std::invalid_argument("numeric certificate: tolerance must be > 0");
    NumericCertificate cert;
    cert.restarts = restarts;
    cert.tolerance = tolerance;
    cert.seed = seed;
    const int n = e.n(), k = e.degree(), d = e.dim();
    if (d == 0) {
        cert.minimum = std::numeric_limits<double>::infinity();
        return cert;
    }
    const int rows = int(binomial(n, k + 1));
    // orthonormalize the basis in the blade metric so the x-sphere is the
    // unit sphere of forms, then take per-basis multiplication matrices
    const int amb = e.ambient_dim();
    std::vector<std::vector<double>> ortho(d, std::vector<double>(amb, 0.0));
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < amb; ++j) ortho[i][j] = e.basis()(i, j).get_d();
        for (int p = 0; p < i; ++p) {
            double dot = 0;
            for (int j = 0; j < amb; ++j) dot += ortho[i][j] * ortho[p][j];
            for (int j = 0; j < amb; ++j) ortho[i][j] -= dot * ortho[p][j];
        }
        double norm = 0;
        for (int j = 0; j < amb; ++j) norm += ortho[i][j] * ortho[i][j];
        norm = std::sqrt(norm);
        for (int j = 0; j < amb; ++j) ortho[i][j] /= norm;
    }
    std::vector<std::vector<std::vector<double>>> raw_maps(d);
    for (int i = 0; i < d; ++i) {
        Mat m = mult_map(e.basis_form(i), 1);
        raw_maps[i].assign(rows, std::vector<double>(n, 0.0));
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < n; ++c) raw_maps[i][r][c] = m(r, c).get_d();
    }
    // coefficients of the orthonormal vectors over the raw basis: since the
    // raw basis is RREF, read them off at the pivot columns
    std::vector<std::vector<std::vector<double>>> basis_maps(d);
    for (int i = 0; i < d; ++i) {
        basis_maps[i].assign(rows, std::vector<double>(n, 0.0));
        for (int p = 0; p < d; ++p) {
            double coeff = ortho[i][e.pivots()[p]];
            if (coeff == 0) continue;
            for (int r = 0; r < rows; ++r)
                for (int c = 0; c < n; ++c) basis_maps[i][r][c] += coeff * raw_maps[p][r][c];
        }
    }
    auto assemble = [&](const std::vector<double>& x) {
        std::vector<std::vector<double>> a(rows, std::vector<double>(n, 0.0));
        for (int i = 0; i < d; ++i)
            for (int r = 0; r < rows; ++r)
                for (int c = 0; c < n; ++c) a[r][c] += x[i] * basis_maps[i][r][c];
        return a;
    };
    // sigma_min and its gradient via the singular pair
    auto sigma_min = [&](const std::vector<double>& x, std::vector<double>* grad) {
        auto a = assemble(x);
        std::vector<std::vector<double>> s(n, std::vector<double>(n, 0.0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int r = 0; r < rows; ++r) s[i][j] += a[r][i] * a[r][j];
        std::vector<double> vals;
        std::vector<std::vector<double>> vecs;
        detail::jacobi_eigen(s, vals, vecs);
        int argmin = 0;
        for (int i = 1; i < n; ++i)
            if (vals[i] < vals[argmin]) argmin = i;
        double sigma = std::sqrt(std::max(vals[argmin], 0.0));
        if (grad) {
            grad->assign(d, 0.0);
            if (sigma > 1e-12) {
                std::vector<double> v(n), u(rows, 0.0);
                for (int i = 0; i < n; ++i) v[i] = vecs[i][argmin];
                for (int r = 0; r < rows; ++r)
                    for (int c = 0; c < n; ++c) u[r] += a[r][c] * v[c];
                for (int r = 0; r < rows; ++r) u[r] /= sigma;
                for (int i = 0; i < d; ++i) {
                    double g = 0;
                    for (int r = 0; r < rows; ++r)
                        for (int c = 0; c < n; ++c) g += u[r] * basis_maps[i][r][c] * v[c];
                    (*grad)[i] = g;
                }
            }
        }
        return sigma;
    };
    std::mt19937_64 rng(seed);
    double best = std::numeric_limits<double>::infinity();
    for (int trial = 0; trial < restarts; ++trial) {
        std::vector<double> x(d);
        double norm = 0;
        for (int i = 0; i < d; ++i) {
            // Box-Muller from two uniform draws; deterministic given the seed
            double u1 = (double(rng() >> 11) + 0.5) / 9007199254740992.0;
            double u2 = (double(rng() >> 11) + 0.5) / 9007199254740992.0;
            x[i] = std::sqrt(-2 * std::log(u1)) * std::cos(6.283185307179586 * u2);
            norm += x[i] * x[i];
        }
        norm = std::sqrt(norm);
        for (auto& xi : x) xi /= norm;
        std::vector<double> grad;
        double f = sigma_min(x, &grad);
        double step = 0.3;
        for (int it = 0; it < 200 && f > 1e-14; ++it) {
            // project the gradient to the tangent space of the sphere
            double dot = 0;
            for (int i = 0; i < d; ++i) dot += grad[i] * x[i];
            std::vector<double> dir(d);
            double dn = 0;
            for (int i = 0; i < d; ++i) {
                dir[i] = grad[i] - dot * x[i];
                dn += dir[i] * dir[i];
            }
            if (dn < 1e-20) break;
            bool improved = false;
            while (step > 1e-10) {
                std::vector<double> y(d);
                double yn = 0;
                for (int i = 0; i < d; ++i) {
                    y[i] = x[i] - step * dir[i];
                    yn += y[i] * y[i];
                }
                yn = std::sqrt(yn);
                for (auto& yi : y) yi /= yn;
                std::vector<double> g2;
                double f2 = sigma_min(y, &g2);
                if (f2 < f - 1e-15) {
                    x = y;
                    f = f2;
                    grad = g2;
                    improved = true;
                    step *= 1.3;
                    break;
                }
                step *= 0.5;
            }
            if (!improved) break;
        }
        cert.per_restart.push_back(f);
        if (f < best) best = f;
    }
    cert.minimum = best;
    cert.below_tolerance = best < tolerance;
    return cert;
}

}  // namespace holoprime
