#pragma once

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace holoprime {

/// Hard ceiling on the ambient dimension; blade masks use one bit per axis.
inline constexpr int kAbsoluteMaxDim = 16;

/// Configured ambient-dimension cap. HOLOPRIME_MAX_DIM overrides the
/// default of 12; values above kAbsoluteMaxDim are clamped.
inline int max_ambient_dim() {
    static const int cap = [] {
        int v = 12;
        if (const char* env = std::getenv("HOLOPRIME_MAX_DIM")) {
            try {
                v = std::stoi(env);
            } catch (const std::exception&) {
                v = 12;
            }
        }
        if (v < 1) v = 1;
        if (v > kAbsoluteMaxDim) v = kAbsoluteMaxDim;
        return v;
    }();
    return cap;
}

inline void check_ambient_dim(int n) {
    if (n < 1 || n > max_ambient_dim())
        throw std::invalid_argument("ambient dimension " + std::to_string(n) +
                                    " outside [1, " + std::to_string(max_ambient_dim()) + "]");
}

}  // namespace holoprime
