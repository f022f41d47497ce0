// Copyright (c) 2026 the depinner developers.
// SPDX-License-Identifier: Apache-2.0

#include "depinner/tridiag.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace depinner {

std::vector<double> tridiag_eigenvalues(std::vector<double> d, std::vector<double> e) {
    const std::size_t n = d.size();
    if (n == 0) throw std::invalid_argument("tridiag_eigenvalues: empty matrix");
    if (e.size() + 1 != n) {
        throw std::invalid_argument("tridiag_eigenvalues: sub-diagonal must have n-1 entries");
    }
    if (n == 1) return d;

    e.push_back(0.0);  // sentinel so e[m] is addressable at m = n-1
    constexpr int kMaxSweepsPerValue = 80;
    constexpr double kEps = std::numeric_limits<double>::epsilon();

    for (std::size_t l = 0; l < n; ++l) {
        int sweeps = 0;
        std::size_t m;
        do {
            // Deflation scan: first negligible coupling at or past l.
            for (m = l; m + 1 < n; ++m) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= kEps * dd) break;
            }
            if (m == l) break;
            if (sweeps++ == kMaxSweepsPerValue) {
                throw std::runtime_error("tridiag_eigenvalues: QL sweep limit exceeded");
            }

            // Wilkinson shift from the leading 2x2, then one implicit QL
            // sweep rotating rows m-1..l.
            double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            double r = std::hypot(g, 1.0);
            g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
            double s = 1.0;
            double c = 1.0;
            double p = 0.0;
            bool deflated_early = false;
            for (std::size_t i = m; i-- > l;) {
                double f = s * e[i];
                const double b = c * e[i];
                r = std::hypot(f, g);
                e[i + 1] = r;
                if (r == 0.0) {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    deflated_early = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if (deflated_early) continue;
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        } while (m != l);
    }

    std::sort(d.begin(), d.end());
    return d;
}

}  // namespace depinner
