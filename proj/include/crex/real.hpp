#pragma once

namespace crex {

#ifdef CREX_SINGLE_PRECISION
using real = float;
#else
using real = double;
#endif

// Test tolerances scale with the active precision.  The 64-bit values are
// the ones the verification suite is written against; the 32-bit build
// relaxes them.
namespace tol {
inline constexpr real grad_check = sizeof(real) == 8 ? real(1e-4) : real(1e-2);
inline constexpr real decompose  = sizeof(real) == 8 ? real(1e-12) : real(1e-5);
inline constexpr real additivity = sizeof(real) == 8 ? real(1e-10) : real(1e-4);
}  // namespace tol

}  // namespace crex
