#include "qhecke/rotation.hpp"

#include <array>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace qhecke {

namespace {

using Mat4 = std::array<std::array<double, 4>, 4>;

Mat4 zero() {
    Mat4 m{};
    return m;
}

Mat4 identity() {
    Mat4 m{};
    for (int i = 0; i < 4; ++i) m[i][i] = 1.0;
    return m;
}

Mat4 mul(const Mat4& a, const Mat4& b) {
    Mat4 r{};
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k)
            for (int j = 0; j < 4; ++j) r[i][j] += a[i][k] * b[k][j];
    return r;
}

// Plain exponential series; the arguments here have norm below 0.2, so the
// series hits machine precision in well under 30 terms.
Mat4 expm(const Mat4& a) {
    Mat4 sum = identity();
    Mat4 term = identity();
    for (int k = 1; k <= 60; ++k) {
        term = mul(term, a);
        double maxabs = 0.0;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                term[i][j] /= k;
                maxabs = std::max(maxabs, std::abs(term[i][j]));
            }
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) sum[i][j] += term[i][j];
        if (maxabs < 1e-18) break;
    }
    return sum;
}

}  // namespace

double rotation_check(double t) {
    if (std::abs(t) > 0.3) throw std::invalid_argument("rotation_check: |t| must be <= 0.3");
    const double q = 1.0 / std::cos(t) - std::tan(t);

    // Rbar on (xx, xy, yx, yy).
    Mat4 rbar = zero();
    rbar[0][0] = q;
    rbar[1][1] = q - 1.0 / q;
    rbar[1][2] = 1.0;
    rbar[2][1] = 1.0;
    rbar[3][3] = q;

    Mat4 flip = zero();
    flip[0][0] = 1.0;
    flip[1][2] = 1.0;
    flip[2][1] = 1.0;
    flip[3][3] = 1.0;

    Mat4 gamma = zero();
    gamma[1][2] = 0.5;
    gamma[2][1] = -0.5;

    Mat4 plus = gamma, minus = gamma;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            plus[i][j] *= t;
            minus[i][j] *= -t;
        }
    const Mat4 rhs = mul(expm(minus), mul(flip, expm(plus)));

    double residual = 0.0;
    const double c = std::cos(t), s = std::sin(t);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            const double lhs = c * rbar[i][j] + (i == j ? s : 0.0);
            residual = std::max(residual, std::abs(lhs - rhs[i][j]));
        }
    return residual;
}

}  // namespace qhecke
