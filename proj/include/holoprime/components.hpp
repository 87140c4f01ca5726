#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "holoprime/symbol_complex.hpp"

namespace holoprime {

struct LabeledSpace {
    std::string label;
    Subspace space;
};

/// Per-degree irreducible components of an invariant decomposition, in a
/// fixed canonical order. Sum labels join component labels with '+', so the
/// certified-prime sets compare as plain string sets.
struct ComponentTable {
    int n = 0;
    std::map<int, std::vector<LabeledSpace>> by_degree;

    const Subspace& component(int degree, const std::string& label) const {
        for (const auto& ls : by_degree.at(degree))
            if (ls.label == label) return ls.space;
        throw std::invalid_argument("unknown component " + label);
    }

    /// All nonzero sums of same-degree components (2^m - 1 of them).
    std::vector<LabeledSpace> sums(int degree) const {
        const auto& comps = by_degree.at(degree);
        std::vector<LabeledSpace> out;
        const int m = int(comps.size());
        for (int mask = 1; mask < (1 << m); ++mask) {
            std::string label;
            Subspace s = Subspace::zero(n, comps.front().space.degree());
            for (int i = 0; i < m; ++i) {
                if (!(mask & (1 << i))) continue;
                if (!label.empty()) label += "+";
                label += comps[i].label;
                s = subspace_sum(s, comps[i].space);
            }
            out.push_back(LabeledSpace{std::move(label), std::move(s)});
        }
        return out;
    }
};

struct ClassificationEntry {
    int degree;
    std::string label;
    int dim;
    PrimeVerdict verdict;
};

struct ClassificationReport {
    std::vector<ClassificationEntry> entries;
    std::vector<std::string> certified;
    std::vector<std::string> expected;
    bool matches = false;
};

/// Runs the single-covector prime test over every nonzero component sum in
/// the given degrees and compares the certified set against the expected
/// list. Every excluded sum carries a re-verifiable witness in its entry.
inline ClassificationReport classify_prime_component_sums(const ComponentTable& table,
                                                          const std::vector<int>& degrees,
                                                          const Form& lambda, bool transitive,
                                                          std::vector<std::string> expected) {
    ClassificationReport rep;
    rep.expected = std::move(expected);
    for (int d : degrees) {
        for (const auto& ls : table.sums(d)) {
            PrimeVerdict v = prime_check_invariant(ls.space, lambda, transitive);
            if (v.certified()) rep.certified.push_back(ls.label);
            rep.entries.push_back(ClassificationEntry{d, ls.label, ls.space.dim(), std::move(v)});
        }
    }
    rep.matches = rep.certified == rep.expected;
    return rep;
}

struct GeneratorScanEntry {
    std::string f_label;  // empty for type-1
    std::string e_label;
    bool exact;
};

/// Type-1 scan over all component sums in the given degrees.
inline std::vector<GeneratorScanEntry> scan_type1_generators(const ComponentTable& table,
                                                             const std::vector<int>& degrees,
                                                             const Form& lambda) {
    std::vector<GeneratorScanEntry> out;
    for (int d : degrees)
        for (const auto& ls : table.sums(d)) {
            auto rep = build_type1_symbol_complex(ls.space, lambda);
            out.push_back(GeneratorScanEntry{"", ls.label, rep.verdict});
        }
    return out;
}

/// Type-2 scan over all pairs (F in degree k-1, E in degree k).
inline std::vector<GeneratorScanEntry> scan_type2_pairs(const ComponentTable& table,
                                                        const std::vector<std::pair<int, int>>& degree_pairs,
                                                        const Form& lambda) {
    std::vector<GeneratorScanEntry> out;
    for (auto [df, de] : degree_pairs) {
        auto fsums = table.sums(df);
        auto esums = table.sums(de);
        for (const auto& es : esums) {
            SymbolChain chain = SymbolChain::make(es.space);
            for (const auto& fs : fsums) {
                auto rep = build_type2_symbol_complex(fs.space, chain, lambda);
                out.push_back(GeneratorScanEntry{fs.label, es.label, rep.verdict});
            }
        }
    }
    return out;
}

inline std::vector<std::string> exact_type1_labels(const std::vector<GeneratorScanEntry>& scan) {
    std::vector<std::string> out;
    for (const auto& e : scan)
        if (e.exact) out.push_back(e.e_label);
    return out;
}

inline std::vector<std::pair<std::string, std::string>> exact_type2_labels(
    const std::vector<GeneratorScanEntry>& scan) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& e : scan)
        if (e.exact) out.emplace_back(e.f_label, e.e_label);
    return out;
}

}  // namespace holoprime
