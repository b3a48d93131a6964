#pragma once

// Numeric spot-check (the library's only floating-point path): for d = 2 and
// q = sec t - tan t, the braid operator satisfies
//   (cos t) Rbar + (sin t) I = exp(-t g) (12) exp(t g)
// with g the rotation generator (1/2)(E_{xy,yx} - E_{yx,xy}) on the basis
// (xx, xy, yx, yy) and (12) the tensor flip. Returns the max absolute entry
// of the difference of the two sides.

namespace qhecke {

// Requires |t| <= 0.3.
double rotation_check(double t);

}  // namespace qhecke
