#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "holoprime/primeness.hpp"

namespace holoprime {

enum class ComplexKind { type1, type2, dual };

inline const char* to_string(ComplexKind k) {
    switch (k) {
        case ComplexKind::type1: return "type1";
        case ComplexKind::type2: return "type2";
        default: return "dual";
    }
}

struct ComplexStage {
    std::string label;
    int dim;
    int out_rank;  // rank of the map leaving this stage; 0 at the end
};

struct SymbolComplexReport {
    ComplexKind kind;
    Form lambda;
    std::vector<ComplexStage> stages;
    std::vector<bool> exact_at;
    long long euler_characteristic = 0;
    bool verdict = false;
    int failing_position = -1;
    bool composition_zero = true;

    void finish() {
        euler_characteristic = 0;
        long long s = 1;
        for (const auto& st : stages) {
            euler_characteristic += s * st.dim;
            s = -s;
        }
        exact_at.assign(stages.size(), false);
        verdict = composition_zero;
        failing_position = -1;
        for (std::size_t p = 0; p < stages.size(); ++p) {
            int in_rank = p == 0 ? 0 : stages[p - 1].out_rank;
            int out_rank = stages[p].out_rank;
            exact_at[p] = (in_rank == stages[p].dim - out_rank);
            if (!exact_at[p] && failing_position < 0) failing_position = int(p);
        }
        for (bool e : exact_at) verdict = verdict && e;
        if (!composition_zero && failing_position < 0) failing_position = 0;
    }
};

struct ComplexOptions {
    bool check_composition = true;
};

/// The lambda-independent data of the complexes generated by E (and F): the
/// divisor chain E_i = E.Lambda^i up to saturation and the quotient spaces
/// realized on orthogonal complements. Build once, evaluate per lambda.
class SymbolChain {
public:
    static SymbolChain make(const Subspace& e) {
        SymbolChain c;
        c.n_ = e.n();
        c.k_ = e.degree();
        std::vector<Subspace> divisors;
        divisors.push_back(e);
        if (e.is_zero()) {
            for (int d = c.k_ + 1; d <= c.n_; ++d) divisors.push_back(Subspace::zero(c.n_, d));
        } else if (!e.is_full()) {
            for (;;) {
                Subspace next = product_space(divisors.back(), 1);
                if (next.is_full()) break;
                divisors.push_back(next);
            }
        }
        for (std::size_t i = 0; i < divisors.size(); ++i)
            c.quotients_.emplace_back(c.n_, c.k_ + int(i), divisors[i]);
        return c;
    }

    int n() const { return n_; }
    int degree() const { return k_; }
    int length() const { return int(quotients_.size()); }
    const QuotientSpace& quotient(int i) const { return quotients_[i]; }
    const Subspace& divisor(int i) const { return quotients_[i].divisor(); }

private:
    int n_ = 0, k_ = 0;
    std::vector<QuotientSpace> quotients_;
};

namespace detail {

/// Map Lambda^{k-1} -> Lambda^k / E, beta |-> [lambda ^ beta].
inline Mat bridge_map(const Form& lambda, const QuotientSpace& q) {
    auto dom = blade_list(lambda.n(), q.degree() - 1);
    Mat m(q.dim(), int(dom.size()));
    for (std::size_t j = 0; j < dom.size(); ++j) {
        auto c = q.coords(wedge(lambda, Form::blade(lambda.n(), dom[j])));
        for (int i = 0; i < q.dim(); ++i) m(i, int(j)) = c[i];
    }
    return m;
}

inline bool maps_compose_to_zero(const std::vector<Mat>& maps) {
    for (std::size_t i = 0; i + 1 < maps.size(); ++i) {
        if (maps[i].rows() == 0 || maps[i + 1].cols() == 0) continue;
        if (!(maps[i + 1] * maps[i]).is_zero()) return false;
    }
    return true;
}

inline void fill_report(SymbolComplexReport& rep, const std::vector<int>& dims,
                        const std::vector<std::string>& labels, const std::vector<Mat>& maps,
                        const ComplexOptions& opts) {
    rep.stages.clear();
    for (std::size_t i = 0; i < dims.size(); ++i) {
        int out = i < maps.size() ? rank_of(maps[i]) : 0;
        rep.stages.push_back(ComplexStage{labels[i], dims[i], out});
    }
    rep.composition_zero = opts.check_composition ? maps_compose_to_zero(maps) : true;
    rep.finish();
}

}  // namespace detail

/// Complex generated by E:
///   0 -> L0 -> ... -> L^{k-1} -> L^k/E -> ... -> L^{k+r}/E_r -> 0.
/// E = 0 yields the full Koszul complex up to L^n. E full truncates after the
/// zero quotient.
inline SymbolComplexReport build_type1_symbol_complex(const SymbolChain& chain, const Form& lambda,
                                                      const ComplexOptions& opts = {}) {
    if (lambda.degree() != 1 || lambda.is_zero())
        throw std::invalid_argument("type1 complex: lambda must be a nonzero covector");
    if (lambda.n() != chain.n()) throw std::invalid_argument("type1 complex: ambient mismatch");
    const int n = chain.n(), k = chain.degree();
    std::vector<int> dims;
    std::vector<std::string> labels;
    std::vector<Mat> maps;
    for (int i = 0; i < k; ++i) {
        dims.push_back(int(binomial(n, i)));
        labels.push_back("L" + std::to_string(i));
    }
    for (int i = 0; i < chain.length(); ++i) {
        dims.push_back(chain.quotient(i).dim());
        labels.push_back("L" + std::to_string(k + i) + "/E" + std::to_string(i));
    }
    for (int i = 0; i + 1 < k; ++i) maps.push_back(mult_map(lambda, i));
    if (k >= 1) maps.push_back(detail::bridge_map(lambda, chain.quotient(0)));
    for (int i = 0; i + 1 < chain.length(); ++i)
        maps.push_back(induced_quotient_map(lambda, chain.quotient(i), chain.quotient(i + 1)));
    SymbolComplexReport rep;
    rep.kind = ComplexKind::type1;
    rep.lambda = lambda;
    detail::fill_report(rep, dims, labels, maps, opts);
    return rep;
}

inline SymbolComplexReport build_type1_symbol_complex(const Subspace& e, const Form& lambda,
                                                      const ComplexOptions& opts = {}) {
    return build_type1_symbol_complex(SymbolChain::make(e), lambda, opts);
}

/// Complex generated by the pair (F, E):
///   0 -> F -> L^k/E -> L^{k+1}/E_1 -> ... -> L^{k+r}/E_r -> 0.
inline SymbolComplexReport build_type2_symbol_complex(const Subspace& f, const SymbolChain& chain,
                                                      const Form& lambda,
                                                      const ComplexOptions& opts = {}) {
    if (lambda.degree() != 1 || lambda.is_zero())
        throw std::invalid_argument("type2 complex: lambda must be a nonzero covector");
    const int n = chain.n(), k = chain.degree();
    if (f.n() != n || f.degree() != k - 1)
        throw std::invalid_argument("type2 complex: F must live in degree k-1");
    std::vector<int> dims{f.dim()};
    std::vector<std::string> labels{"F"};
    std::vector<Mat> maps;
    for (int i = 0; i < chain.length(); ++i) {
        dims.push_back(chain.quotient(i).dim());
        labels.push_back("L" + std::to_string(k + i) + "/E" + std::to_string(i));
    }
    {
        const QuotientSpace& q0 = chain.quotient(0);
        Mat m(q0.dim(), f.dim());
        for (int j = 0; j < f.dim(); ++j) {
            auto c = q0.coords(wedge(lambda, f.basis_form(j)));
            for (int i = 0; i < q0.dim(); ++i) m(i, j) = c[i];
        }
        maps.push_back(std::move(m));
    }
    for (int i = 0; i + 1 < chain.length(); ++i)
        maps.push_back(induced_quotient_map(lambda, chain.quotient(i), chain.quotient(i + 1)));
    SymbolComplexReport rep;
    rep.kind = ComplexKind::type2;
    rep.lambda = lambda;
    detail::fill_report(rep, dims, labels, maps, opts);
    return rep;
}

inline SymbolComplexReport build_type2_symbol_complex(const Subspace& f, const Subspace& e,
                                                      const Form& lambda,
                                                      const ComplexOptions& opts = {}) {
    return build_type2_symbol_complex(f, SymbolChain::make(e), lambda, opts);
}

/// Dual complex on the divisor chain itself:
///   0 -> E -> E_1 -> ... -> E_r -> L^{k+r+1} -> ... -> L^n -> 0.
inline SymbolComplexReport build_dual_symbol_complex(const SymbolChain& chain, const Form& lambda,
                                                     const ComplexOptions& opts = {}) {
    if (lambda.degree() != 1 || lambda.is_zero())
        throw std::invalid_argument("dual complex: lambda must be a nonzero covector");
    if (chain.divisor(0).is_zero())
        throw std::invalid_argument("dual complex: E must be nonzero");
    const int n = chain.n(), k = chain.degree();
    std::vector<int> dims;
    std::vector<std::string> labels;
    std::vector<Mat> maps;
    const int r = chain.length() - 1;
    for (int i = 0; i <= r; ++i) {
        dims.push_back(chain.divisor(i).dim());
        labels.push_back("E" + std::to_string(i));
    }
    for (int d = k + r + 1; d <= n; ++d) {
        dims.push_back(int(binomial(n, d)));
        labels.push_back("L" + std::to_string(d));
    }
    for (int i = 0; i + 1 <= r; ++i) {
        const Subspace& src = chain.divisor(i);
        const Subspace& dst = chain.divisor(i + 1);
        auto dst_blades = blade_list(n, dst.degree());
        Mat m(dst.dim(), src.dim());
        for (int j = 0; j < src.dim(); ++j) {
            auto c = dst.coords_in_basis(form_coords(wedge(lambda, src.basis_form(j)), dst_blades));
            for (int i2 = 0; i2 < dst.dim(); ++i2) m(i2, j) = c[i2];
        }
        maps.push_back(std::move(m));
    }
    if (k + r + 1 <= n) {
        const Subspace& er = chain.divisor(r);
        auto cod = blade_list(n, k + r + 1);
        Mat m(int(cod.size()), er.dim());
        for (int j = 0; j < er.dim(); ++j) {
            auto v = form_coords(wedge(lambda, er.basis_form(j)), cod);
            for (std::size_t i2 = 0; i2 < cod.size(); ++i2) m(int(i2), j) = v[i2];
        }
        maps.push_back(std::move(m));
        for (int d = k + r + 1; d < n; ++d) maps.push_back(mult_map(lambda, d));
    }
    SymbolComplexReport rep;
    rep.kind = ComplexKind::dual;
    rep.lambda = lambda;
    detail::fill_report(rep, dims, labels, maps, opts);
    return rep;
}

inline SymbolComplexReport build_dual_symbol_complex(const Subspace& e, const Form& lambda,
                                                     const ComplexOptions& opts = {}) {
    return build_dual_symbol_complex(SymbolChain::make(e), lambda, opts);
}

}  // namespace holoprime
