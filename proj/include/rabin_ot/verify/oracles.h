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

#ifndef RABIN_OT_VERIFY_ORACLES_H
#define RABIN_OT_VERIFY_ORACLES_H

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "rabin_ot/adversary/strategies.h"
#include "rabin_ot/qmath/states.h"

/// Brute-force searches that re-derive optimal measurements and cheat states
/// without using any closed form. Each result is the maximum over the
/// candidates actually evaluated, so it can only undershoot the true optimum.
namespace rabin_ot::verify {

struct OracleResult {
    double best_value = 0;
    std::vector<double> best_parameters;
    std::vector<double> grid_resolution;
    std::uint64_t evaluations = 0;
    /// Candidates discarded because a completed element was not PSD.
    std::uint64_t rejected = 0;
};

struct BlochGrid {
    std::size_t polar_steps = 720;
    std::size_t azimuth_steps = 1440;
    int refinements = 20;
};

/// Two-outcome projective measurements {|n><n|, I - |n><n|} over a Bloch
/// grid (polar angle in [0, pi], azimuth in [0, 2 pi)) plus the two trivial
/// measurements, then coordinate refinement with step halving. Parameters:
/// (polar, azimuth) of the best |n>.
OracleResult oracle_qubit_minerr(const qmath::DensityMatrix &rho0, const qmath::DensityMatrix &rho1, double p0,
                                 double p1, const BlochGrid &grid = {});

struct ThreeOutcomeSearch {
    int restarts = 200;
    int refine_halvings = 30;
    std::uint64_t seed = 2026;
};

/// Three-outcome qubit POVMs. Two rank-one elements W t (I + n1.sigma) and
/// W (1 - t)(I + n2.sigma) are drawn from (t, n1, n2); the third is the
/// completeness deficit, which is PSD exactly when W <= 1 / (1 + |t n1 +
/// (1 - t) n2|), so W is set to that bound (success is linear in W). All six
/// assignments of elements to states and the trivial measurements are
/// scored. Random restarts plus coordinate refinement. Parameters: (t,
/// polar1, azimuth1, polar2, azimuth2, permutation index).
OracleResult oracle_three_outcome(const std::array<qmath::DensityMatrix, 3> &states,
                                  const std::array<double, 3> &priors, const ThreeOutcomeSearch &search = {});

struct CheatStateScan {
    OracleResult result;
    double argmax_a = 0;
    /// max - min of the objective over the scanned a values.
    double spread = 0;
    bool flat = false;
    std::vector<double> values;
};

/// Scans the cheat coefficient a over [0, 1] at the given step. TwoOutcome
/// uses the Helstrom value of Alice's conditional states; ThreeOutcome runs
/// oracle_three_outcome on the three-state ensemble. Ties keep the smallest a.
/// flat means spread <= 1e-9.
CheatStateScan oracle_cheat_state(double p_question, adversary::Objective objective, double a_step,
                                  const ThreeOutcomeSearch &search = {});

enum class InputTarget { MaximizeBit, MaximizeNoBit };

/// Pure qubit states on a Bloch grid, scoring Bob's P(Bit) or P(NoBit) under
/// the USD measurement. Parameters: (polar, azimuth) of the best state.
OracleResult oracle_alice_input_state(double theta, InputTarget target, const BlochGrid &grid = {});

}  // namespace rabin_ot::verify

#endif
