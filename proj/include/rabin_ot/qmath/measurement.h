// Copyright 2026 The Rabin OT Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RABIN_OT_QMATH_MEASUREMENT_H
#define RABIN_OT_QMATH_MEASUREMENT_H

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rabin_ot/qmath/states.h"

namespace rabin_ot::qmath {

/// Probabilities that round to slightly outside [0, 1] are clipped; a clip
/// larger than this is a contract violation and throws std::domain_error.
inline constexpr double kMaxClip = 1e-9;

/// Clips to [0, 1], throwing if the required correction exceeds kMaxClip.
double clip_probability(double p);

/// tr(rho E_k) for every element, in POVM order.
std::vector<double> born_probabilities(const DensityMatrix &state, const Povm &povm);

/// <psi| E_k |psi> for every element; the fast path for pure states.
std::vector<double> born_probabilities(const PureState &state, const Povm &povm);

/// Optimal two-state minimum-error success probability,
/// (1 + ||p0 rho0 - p1 rho1||_1) / 2.
double helstrom_success(double p0, const DensityMatrix &rho0, double p1, const DensityMatrix &rho1);

/// Projective measurement in the eigenbasis of p0 rho0 - p1 rho1. The first
/// element projects onto the strictly positive eigenspace (guess rho0), the
/// second onto the rest (guess rho1).
Povm helstrom_measurement(double p0, const DensityMatrix &rho0, double p1, const DensityMatrix &rho1,
                          std::string label0 = "0", std::string label1 = "1");

/// Square-root measurement E_i = p_i rho^{-1/2} rho_i rho^{-1/2} with
/// rho = sum_i p_i rho_i. When rho is singular an extra element labelled
/// "null" completes the POVM on rho's kernel.
Povm square_root_measurement(std::span<const double> priors, std::span<const DensityMatrix> states);

/// sum_i p_i tr(rho_i E_i) for the square-root measurement.
double srm_success(std::span<const double> priors, std::span<const DensityMatrix> states);

/// Alice's side of a bipartite state after Bob obtains a measurement outcome.
struct RemoteState {
    double probability = 0;
    /// Empty when the outcome probability is below 1e-14.
    std::optional<DensityMatrix> state;

    bool defined() const {
        return state.has_value();
    }
};

/// Probability <Psi|(I x E)|Psi> of Bob's outcome and Alice's normalized
/// conditional state Tr_B[(I x E)|Psi><Psi|] / probability.
RemoteState conditional_remote_state(const BipartiteState &psi, const Matrix &bob_element);

}  // namespace rabin_ot::qmath

#endif
