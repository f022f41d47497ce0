// Copyright (c) 2026 the depinner developers.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

namespace depinner {

/// Eigenvalues of a real symmetric tridiagonal matrix, ascending.
/// `diag` holds the n diagonal entries, `sub` the n-1 couplings between
/// neighbors. Implicit-shift QL with Wilkinson shifts and deflation on
/// negligible couplings; built for the small dense matrices this project
/// diagonalizes (dimension a few hundred), where charge-basis spectra mix
/// huge diagonal range with sub-epsilon degenerate splittings.
std::vector<double> tridiag_eigenvalues(std::vector<double> diag,
                                        std::vector<double> sub);

}  // namespace depinner
