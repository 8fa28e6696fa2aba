// Shared vocabulary for su(3) irrep labels.
#pragma once

#include <compare>
#include <stdexcept>

namespace su3mult {

struct IrrepLabel {
    int p = 0;
    int q = 0;

    auto operator<=>(const IrrepLabel&) const = default;
};

inline long su3_dim(const IrrepLabel& r) {
    if (r.p < 0 || r.q < 0) throw std::invalid_argument("su3_dim: negative label");
    return static_cast<long>(r.p + 1) * (r.q + 1) * (r.p + r.q + 2) / 2;
}

inline int su3_triality(const IrrepLabel& r) { return ((r.p - r.q) % 3 + 3) % 3; }

inline IrrepLabel su3_conjugate(const IrrepLabel& r) { return {r.q, r.p}; }

}  // namespace su3mult
