// Copyright 2026 The qslnoise Authors
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

#include <optional>
#include <string>
#include <vector>

#include "qslnoise/matops.hpp"

// Two-qubit noise channels driven by random telegraph noise (RTN) dephasing.
//
// The single-qubit decoherence factor is
//
//   phi(nu) = e^{-nu} [cos(u nu) + sin(u nu)/u],   nu = t/(2 tau),
//   u = sqrt((4 tau)^2 - 1),
//
// continued analytically to cosh/sinh with u' = sqrt(1 - (4 tau)^2) when
// 4 tau < 1 and to e^{-nu}(1 + nu) at 4 tau = 1.  Every family here has
// phi(t = 0) = 1 and |phi| <= 1.
//
// Channels come in an uncorrelated form (tensor products of single-qubit
// operators) and a correlated form (both qubits hit by the same operator);
// a MemoryMix interpolates between them by scaling the two groups with
// sqrt(1 - mu) and sqrt(mu), which keeps the union a single trace-preserving
// operator set.

namespace qslnoise {

// ---------- RTN dephasing input point ----------

struct RtnParams {
  double tau = 0.25;  // noise correlation parameter, > 0
  double t = 0.0;     // evolution time, >= 0

  RtnParams(double tau_in, double t_in);

  double nu() const { return t / (2.0 * tau); }
  // For tau > 1/4 the decoherence factor oscillates and may go negative.
  bool oscillatory() const { return tau > 0.25; }
};

double phi(const RtnParams& p);
double dphi_dnu(const RtnParams& p);
double dphi_dt(const RtnParams& p);  // dphi_dnu / (2 tau)

// ---------- channel parameter bundles ----------

struct MemoryMix {
  double mu = 0.0;  // weight of the fully correlated part, in [0, 1]
  MemoryMix() = default;
  explicit MemoryMix(double mu_in);
};

// Dephasing weights: probability p on sigma3 and 1 - p on the identity.
// Optional one-sided limits cover the sqrt kink where a weight reaches zero
// quadratically in t (see KrausSet::degenerate).
struct PhaseDampingParams {
  double p = 0.0;
  double dp_dt = 0.0;
  double sqrt_p0_rate_limit = 0.0;  // lim d sqrt(1-p)/dt where p -> 1
  double sqrt_p3_rate_limit = 0.0;  // lim d sqrt(p)/dt where p -> 0

  explicit PhaseDampingParams(double p_in, double dp_dt_in = 0.0);

  double p0() const { return 1.0 - p; }
  double p3() const { return p; }

  // p bound to phi(nu) itself; valid on the monotone branch where phi >= 0.
  static PhaseDampingParams dephasing_from_rtn(const RtnParams& at);
  // p bound to the RTN sigma3 weight (1 - phi)/2, valid for every phi.
  static PhaseDampingParams rtn_weights(const RtnParams& at);
};

struct AmplitudeDampingParams {
  double p = 0.0;  // decay probability, in [0, 1]
  double dp_dt = 0.0;
  double sqrt_p_rate_limit = 0.0;  // lim d sqrt(p)/dt where p -> 0

  explicit AmplitudeDampingParams(double p_in, double dp_dt_in = 0.0);

  // p bound to 1 - phi(nu)^2.
  static AmplitudeDampingParams from_rtn(const RtnParams& at);
};

// standard: excitation decay |1> -> |0> per qubit, with the correlated pair
//   acting on |11> -> |00> only.
// paper_literal: both damping operators are diagonal multiples of the
//   identity, so the map is the identity channel for any p and the
//   correlated and uncorrelated forms coincide (speed-limit ratio exactly
//   1).  Kept for comparison and flagged via KrausSet::identity_map.
enum class AmplitudeVariant { standard, paper_literal };

// ---------- Kraus sets ----------

// K = coeff * base with base fixed in time.  coeff_sq_rate = d(coeff^2)/dt
// stays smooth even where coeff itself has a sqrt kink, which is what the
// speed-limit denominator needs: ||K rho dK/dt|| = |coeff_sq_rate|/2 *
// ||base rho base^dag||.
struct ScaledKraus {
  Matrix base;
  double coeff = 0.0;
  double coeff_sq_rate = 0.0;
};

struct KrausSet {
  int dim = 0;
  std::string label;
  std::vector<Matrix> operators;
  std::vector<Matrix> derivatives;  // dK/dt, parallel to operators
  // Factored form where available, parallel to operators.
  std::vector<std::optional<ScaledKraus>> scaled;
  // True when a coefficient sat at a sqrt kink (phi = 1, i.e. t = 0); the
  // stored derivatives there are one-sided limits.
  bool degenerate = false;
  // True when every operator is proportional to the identity.
  bool identity_map = false;
};

// ||sum_k K^dag K - I||_HS
double completeness_defect(const KrausSet& k);

// {K1, K2} = {sqrt((1+phi)/2) I, sqrt((1-phi)/2) sigma3} on one qubit.
KrausSet rtn_single_qubit(const RtnParams& at);

// All pairwise tensor products {K_i (x) K_j} of a single-qubit set.
KrausSet product_two_qubit(const KrausSet& single);

// Uncorrelated part: sqrt(P_i P_j) sigma_i (x) sigma_j over i, j in {0, 3};
// correlated part: sqrt(P_k) sigma_k (x) sigma_k.  P_0 = 1 - p, P_3 = p.
KrausSet phase_damping_two_qubit(const PhaseDampingParams& params,
                                 const MemoryMix& mix);

KrausSet amplitude_damping_two_qubit(const AmplitudeDampingParams& params,
                                     const MemoryMix& mix,
                                     AmplitudeVariant variant = AmplitudeVariant::standard);

DensityMatrix apply_channel(const KrausSet& k, const DensityMatrix& state);

// ---------- complete positivity / trace preservation ----------

Matrix choi_matrix(const KrausSet& k);

struct CptpReport {
  double completeness_defect = 0.0;
  double choi_min_eigenvalue = 0.0;

  bool ok(double completeness_tol = 1e-10, double choi_tol = 1e-10) const {
    return completeness_defect <= completeness_tol &&
           choi_min_eigenvalue >= -choi_tol;
  }
};

CptpReport validate_cptp(const KrausSet& k);

}  // namespace qslnoise
