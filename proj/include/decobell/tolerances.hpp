// Copyright 2026 The decobell Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

namespace decobell::tol {

// All numeric tolerances live here; nothing else in the library hardcodes one.

inline constexpr double hermitian = 1e-12;        // max entry-wise |M - M^dag|
inline constexpr double symmetry = 1e-12;         // max |m_ij - m_ji| for real matrices
inline constexpr double unit_trace = 1e-12;       // |Tr(rho) - 1|
inline constexpr double psd_floor = -1e-10;       // smallest admissible eigenvalue of rho
inline constexpr double unit_norm = 1e-12;        // | |v| - 1 | for measurement directions
inline constexpr double factor_modulus = 1e-12;   // |r| <= 1 + factor_modulus
inline constexpr double amplitude_norm = 1e-12;   // | |a|^2 + |b|^2 - 1 |
inline constexpr double entry_range = 1e-12;      // correlation entries in [-1, 1] + entry_range
inline constexpr double real_trace = 1e-12;       // imaginary part of Tr(rho * hermitian)
inline constexpr double eig_residual = 1e-9;      // |det(m - lambda I)|, scaled by norm^3
inline constexpr double cross_check = 1e-10;      // trace form vs correlation-matrix form
inline constexpr double reconstruction = 1e-10;   // Z + |r| P vs Tr(rho B)
inline constexpr double tsirelson_slack = 1e-9;   // operator norm <= 2 sqrt(2) + slack
inline constexpr double orthogonal = 1e-10;       // |a . a'| for the analytic family
inline constexpr double grad_converged = 1e-9;    // tangent gradient norm at convergence
inline constexpr double weight_sum = 1e-12;       // |w_a + w_b - 1| for bath weights
inline constexpr double p_bound_slack = 1e-12;    // |P| <= 2 sqrt(2) + slack
inline constexpr double z_lemma_slack = 1e-12;    // |Z| <= 2k + slack

// Eigensolver internals.
inline constexpr double degenerate_disc = 1e-14;  // normalized cubic discriminant cutoff
inline constexpr double jacobi_offdiag = 1e-13;   // off-diagonal norm target, relative

}  // namespace decobell::tol
