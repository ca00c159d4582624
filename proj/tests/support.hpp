#pragma once

#include <array>
#include <optional>

#include "biratlab/map_model.hpp"

namespace testsupport {

using namespace biratlab;

inline MapParams mp(std::array<long, 3> a, std::array<long, 3> b, std::array<long, 3> c) {
    return {{GaussianRational(a[0]), GaussianRational(a[1]), GaussianRational(a[2])},
            {GaussianRational(b[0]), GaussianRational(b[1]), GaussianRational(b[2])},
            {GaussianRational(c[0]), GaussianRational(c[1]), GaussianRational(c[2])}};
}

/// alpha=(0,0,1), beta=(1,0,1), gamma=(0,1,0): f(x,y) = (y, (1+y)/x).
inline MapParams lyness() { return mp({0, 0, 1}, {1, 0, 1}, {0, 1, 0}); }

/// Generic four-nonzero instance used by several scenarios.
inline MapParams t1_generic() { return mp({0, 1, 1}, {1, 2, 1}, {1, 1, 2}); }

inline ProjPoint pt(long a, long b, long c) {
    return ProjPoint(GaussianRational(a), GaussianRational(b), GaussianRational(c));
}

} // namespace testsupport
