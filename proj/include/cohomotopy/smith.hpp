#pragma once

#include "cohomotopy/matrix.hpp"

namespace cohomotopy {

/// Smith decomposition U*M*V = D with U, V unimodular and D diagonal,
/// entries non-negative and d1 | d2 | ... with zeros last.
/// Uinv and Vinv are maintained alongside so callers can move elements
/// between the original and diagonalized coordinates without re-solving.
struct SmithResult {
    IntMat U, D, V;
    IntMat Uinv, Vinv;
};

SmithResult smith_normal_form(const IntMat& m);

}  // namespace cohomotopy
