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

#include "qslnoise/channels.hpp"

#include <algorithm>
#include <cmath>

namespace qslnoise {

namespace {

// Weight below this counts as a sqrt kink point; the stored derivative is
// the one-sided limit supplied by the caller.
constexpr double kKinkTol = 1e-12;

struct SqrtWeight {
  double c = 0.0;    // sqrt(value)
  double dc = 0.0;   // d sqrt(value)/dt
  bool kinked = false;
};

SqrtWeight sqrt_weight(double value, double rate, double kink_limit) {
  const double v = std::max(value, 0.0);
  if (v < kKinkTol) return {std::sqrt(v), kink_limit, true};
  const double c = std::sqrt(v);
  return {c, rate / (2.0 * c), false};
}

bool is_zero(const Matrix& m) { return m.cwiseAbs().maxCoeff() == 0.0; }

bool identity_proportional(const Matrix& m) {
  const Matrix rest = m - m(0, 0) * Matrix::Identity(m.rows(), m.cols());
  return rest.cwiseAbs().maxCoeff() <= 1e-14;
}

void finalize_identity_flag(KrausSet& k) {
  k.identity_map = std::all_of(k.operators.begin(), k.operators.end(),
                               identity_proportional);
}

// One operator plus the scalar data needed for its factored form.
struct Term {
  Matrix base;
  double c = 0.0;     // coefficient
  double dc = 0.0;    // d c/dt
  double rate = 0.0;  // d(c^2)/dt
};

void push_term(KrausSet& k, const Term& term) {
  if (term.c == 0.0 && term.dc == 0.0 && term.rate == 0.0) return;
  k.operators.push_back(term.c * term.base);
  k.derivatives.push_back(term.dc * term.base);
  k.scaled.push_back(ScaledKraus{term.base, term.c, term.rate});
}

}  // namespace

// ---------- decoherence factor ----------

RtnParams::RtnParams(double tau_in, double t_in) : tau(tau_in), t(t_in) {
  if (!std::isfinite(tau) || tau <= 0.0) {
    throw std::invalid_argument("RtnParams: tau must be positive");
  }
  if (!std::isfinite(t) || t < 0.0) {
    throw std::invalid_argument("RtnParams: t must be non-negative");
  }
}

double phi(const RtnParams& p) {
  const double nu = p.nu();
  const double w = 16.0 * p.tau * p.tau - 1.0;  // u^2
  if (std::abs(w) < 1e-12) return std::exp(-nu) * (1.0 + nu);
  if (w > 0.0) {
    const double u = std::sqrt(w);
    return std::exp(-nu) * (std::cos(u * nu) + std::sin(u * nu) / u);
  }
  const double up = std::sqrt(-w);
  if (up * nu <= 30.0) {
    return std::exp(-nu) * (std::cosh(up * nu) + std::sinh(up * nu) / up);
  }
  // Large argument: regroup as decaying exponentials to avoid cosh overflow.
  const double ea = std::exp(-(1.0 - up) * nu);
  const double eb = std::exp(-(1.0 + up) * nu);
  return 0.5 * (ea + eb) + 0.5 * (ea - eb) / up;
}

double dphi_dnu(const RtnParams& p) {
  const double nu = p.nu();
  const double w = 16.0 * p.tau * p.tau - 1.0;
  const double f = w + 1.0;  // (4 tau)^2
  if (std::abs(w) < 1e-12) return -std::exp(-nu) * f * nu;
  if (w > 0.0) {
    const double u = std::sqrt(w);
    return -std::exp(-nu) * f * std::sin(u * nu) / u;
  }
  const double up = std::sqrt(-w);
  if (up * nu <= 30.0) return -std::exp(-nu) * f * std::sinh(up * nu) / up;
  const double ea = std::exp(-(1.0 - up) * nu);
  const double eb = std::exp(-(1.0 + up) * nu);
  return -f * 0.5 * (ea - eb) / up;
}

double dphi_dt(const RtnParams& p) { return dphi_dnu(p) / (2.0 * p.tau); }

// ---------- parameter bundles ----------

MemoryMix::MemoryMix(double mu_in) : mu(mu_in) {
  if (!std::isfinite(mu) || mu < 0.0 || mu > 1.0) {
    throw std::invalid_argument("MemoryMix: mu must lie in [0, 1]");
  }
}

PhaseDampingParams::PhaseDampingParams(double p_in, double dp_dt_in)
    : p(p_in), dp_dt(dp_dt_in) {
  if (!std::isfinite(p) || p < 0.0 || p > 1.0) {
    throw std::invalid_argument("PhaseDampingParams: p must lie in [0, 1]");
  }
}

PhaseDampingParams PhaseDampingParams::dephasing_from_rtn(const RtnParams& at) {
  const double ph = phi(at);
  if (ph < 0.0) {
    throw std::domain_error(
        "phase damping: p = phi(nu) is negative in the oscillatory regime; "
        "this binding needs the monotone branch (tau <= 1/4)");
  }
  PhaseDampingParams out(ph, dphi_dt(at));
  out.sqrt_p0_rate_limit = std::sqrt(2.0);  // 1 - phi = 2 t^2 + O(t^3)
  return out;
}

PhaseDampingParams PhaseDampingParams::rtn_weights(const RtnParams& at) {
  PhaseDampingParams out(0.5 * (1.0 - phi(at)), -0.5 * dphi_dt(at));
  out.sqrt_p3_rate_limit = 1.0;  // (1 - phi)/2 = t^2 + O(t^3)
  return out;
}

AmplitudeDampingParams::AmplitudeDampingParams(double p_in, double dp_dt_in)
    : p(p_in), dp_dt(dp_dt_in) {
  if (!std::isfinite(p) || p < 0.0 || p > 1.0) {
    throw std::invalid_argument("AmplitudeDampingParams: p must lie in [0, 1]");
  }
}

AmplitudeDampingParams AmplitudeDampingParams::from_rtn(const RtnParams& at) {
  const double ph = phi(at);
  AmplitudeDampingParams out(1.0 - ph * ph, -2.0 * ph * dphi_dt(at));
  out.sqrt_p_rate_limit = 2.0;  // 1 - phi^2 = 4 t^2 + O(t^3)
  return out;
}

// ---------- Kraus families ----------

double completeness_defect(const KrausSet& k) {
  Matrix sum = Matrix::Zero(k.dim, k.dim);
  for (const Matrix& op : k.operators) sum += op.adjoint() * op;
  return hs_norm(sum - Matrix::Identity(k.dim, k.dim));
}

KrausSet rtn_single_qubit(const RtnParams& at) {
  const double ph = phi(at);
  const double rate = dphi_dt(at);
  // K2's coefficient behaves as t + O(t^2) near t = 0, so its one-sided
  // derivative limit at the phi = 1 kink is 1 for every tau.
  const SqrtWeight w1 = sqrt_weight(0.5 * (1.0 + ph), 0.5 * rate, 0.0);
  const SqrtWeight w2 = sqrt_weight(0.5 * (1.0 - ph), -0.5 * rate, 1.0);

  KrausSet k;
  k.dim = 2;
  k.label = "rtn";
  k.degenerate = w1.kinked || w2.kinked;
  const Matrix i2 = identity(2);
  const Matrix s3 = sigma_z();
  k.operators = {w1.c * i2, w2.c * s3};
  k.derivatives = {w1.dc * i2, w2.dc * s3};
  k.scaled = {ScaledKraus{i2, w1.c, 0.5 * rate},
              ScaledKraus{s3, w2.c, -0.5 * rate}};
  finalize_identity_flag(k);
  return k;
}

KrausSet product_two_qubit(const KrausSet& single) {
  if (single.dim != 2) {
    throw DimensionMismatchError("product_two_qubit: expected a single-qubit set");
  }
  if (single.operators.empty() ||
      single.derivatives.size() != single.operators.size()) {
    throw std::invalid_argument(
        "product_two_qubit: operators and matching derivatives required");
  }
  KrausSet out;
  out.dim = 4;
  out.label = single.label + "-product";
  out.degenerate = single.degenerate;
  const std::size_t n = single.operators.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out.operators.push_back(kron(single.operators[i], single.operators[j]));
      out.derivatives.push_back(
          kron(single.derivatives[i], single.operators[j]) +
          kron(single.operators[i], single.derivatives[j]));
      const auto& si = single.scaled.size() == n ? single.scaled[i] : std::nullopt;
      const auto& sj = single.scaled.size() == n ? single.scaled[j] : std::nullopt;
      if (si && sj) {
        out.scaled.push_back(ScaledKraus{
            kron(si->base, sj->base), si->coeff * sj->coeff,
            si->coeff * si->coeff * sj->coeff_sq_rate +
                si->coeff_sq_rate * sj->coeff * sj->coeff});
      } else {
        out.scaled.push_back(std::nullopt);
      }
    }
  }
  finalize_identity_flag(out);
  return out;
}

KrausSet phase_damping_two_qubit(const PhaseDampingParams& params,
                                 const MemoryMix& mix) {
  const Matrix sig[2] = {identity(2), sigma_z()};
  const double weight[2] = {params.p0(), params.p3()};
  const double d_weight[2] = {-params.dp_dt, params.dp_dt};
  const double limit[2] = {params.sqrt_p0_rate_limit, params.sqrt_p3_rate_limit};
  SqrtWeight w[2];
  for (int k = 0; k < 2; ++k) {
    w[k] = sqrt_weight(weight[k], d_weight[k], limit[k]);
  }

  KrausSet out;
  out.dim = 4;
  out.label = "phase-damping";
  out.degenerate = w[0].kinked || w[1].kinked;

  const double group_u = 1.0 - mix.mu;
  if (group_u > 0.0) {
    const double s = std::sqrt(group_u);
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        push_term(out, Term{kron(sig[i], sig[j]), s * w[i].c * w[j].c,
                            s * (w[i].dc * w[j].c + w[i].c * w[j].dc),
                            group_u * (weight[i] * d_weight[j] +
                                       d_weight[i] * weight[j])});
      }
    }
  }
  if (mix.mu > 0.0) {
    const double s = std::sqrt(mix.mu);
    for (int k = 0; k < 2; ++k) {
      push_term(out, Term{kron(sig[k], sig[k]), s * w[k].c, s * w[k].dc,
                          mix.mu * d_weight[k]});
    }
  }
  finalize_identity_flag(out);
  return out;
}

namespace {

KrausSet amplitude_damping_standard(const AmplitudeDampingParams& params,
                                    const MemoryMix& mix) {
  const double p = params.p;
  const SqrtWeight survive = sqrt_weight(1.0 - p, -params.dp_dt, 0.0);
  const SqrtWeight decay = sqrt_weight(p, params.dp_dt, params.sqrt_p_rate_limit);

  // Single-qubit pair in the |1>, |0> ordering: the excited amplitude
  // shrinks by sqrt(1-p) and |1> -> |0> happens with probability p.
  Matrix ka = identity(2);
  ka(0, 0) = survive.c;
  Matrix dka = Matrix::Zero(2, 2);
  dka(0, 0) = survive.dc;
  const Matrix sm = sigma_minus();
  const Matrix kb = decay.c * sm;
  const Matrix dkb = decay.dc * sm;

  KrausSet out;
  out.dim = 4;
  out.label = "amplitude-damping";
  out.degenerate = survive.kinked || decay.kinked;

  const double group_u = 1.0 - mix.mu;
  if (group_u > 0.0) {
    const double s = std::sqrt(group_u);
    const Matrix singles[2] = {ka, kb};
    const Matrix dsingles[2] = {dka, dkb};
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        const Matrix op = s * kron(singles[i], singles[j]);
        const Matrix dop = s * (kron(dsingles[i], singles[j]) +
                                kron(singles[i], dsingles[j]));
        if (is_zero(op) && is_zero(dop)) continue;
        out.operators.push_back(op);
        out.derivatives.push_back(dop);
        if (i == 1 && j == 1) {
          // kb (x) kb = p * (sm (x) sm) is the only product with a fixed base.
          out.scaled.push_back(ScaledKraus{kron(sm, sm), group_u * p,
                                           group_u * 2.0 * p * params.dp_dt});
        } else {
          out.scaled.push_back(std::nullopt);
        }
      }
    }
  }
  if (mix.mu > 0.0) {
    const double s = std::sqrt(mix.mu);
    // Joint decay: |11> survives with amplitude sqrt(1-p), |11> -> |00>.
    Matrix e0 = identity(4);
    e0(0, 0) = survive.c;
    Matrix de0 = Matrix::Zero(4, 4);
    de0(0, 0) = survive.dc;
    Matrix unit_00_11 = Matrix::Zero(4, 4);
    unit_00_11(3, 0) = 1.0;
    out.operators.push_back(s * e0);
    out.derivatives.push_back(s * de0);
    out.scaled.push_back(std::nullopt);
    const Matrix e1 = s * decay.c * unit_00_11;
    const Matrix de1 = s * decay.dc * unit_00_11;
    if (!(is_zero(e1) && is_zero(de1))) {
      out.operators.push_back(e1);
      out.derivatives.push_back(de1);
      out.scaled.push_back(ScaledKraus{unit_00_11, s * decay.c,
                                       mix.mu * params.dp_dt});
    }
  }
  finalize_identity_flag(out);
  return out;
}

KrausSet amplitude_damping_paper_literal(const AmplitudeDampingParams& params,
                                         const MemoryMix& mix) {
  const double ph = std::sqrt(std::max(1.0 - params.p, 0.0));
  double dph = 0.0;
  bool phi_kinked = false;
  if (1.0 - params.p < kKinkTol) {
    phi_kinked = true;  // p -> 1 is reached only asymptotically
  } else {
    dph = -params.dp_dt / (2.0 * ph);
  }
  const SqrtWeight c1 = sqrt_weight(0.5 * (1.0 + ph), 0.5 * dph, 0.0);
  // (1 - phi)/2 = p / (2 (1 + phi)) -> p/4 near p = 0, so the kink limit
  // here is half the sqrt(p) limit.
  const SqrtWeight c2 = sqrt_weight(0.5 * (1.0 - ph), -0.5 * dph,
                                    0.5 * params.sqrt_p_rate_limit);

  KrausSet out;
  out.dim = 4;
  out.label = "amplitude-damping-paper-literal";
  out.degenerate = phi_kinked || c1.kinked || c2.kinked;

  const Matrix i4 = identity(4);
  const SqrtWeight coeffs[2] = {c1, c2};
  const double rates[2] = {0.5 * dph, -0.5 * dph};
  // Both groups carry the same diagonal pair, so the correlated and
  // uncorrelated forms coincide and any mix of them stays the identity map.
  const double groups[2] = {1.0 - mix.mu, mix.mu};
  for (double g : groups) {
    if (g <= 0.0) continue;
    const double s = std::sqrt(g);
    for (int k = 0; k < 2; ++k) {
      push_term(out, Term{i4, s * coeffs[k].c, s * coeffs[k].dc, g * rates[k]});
    }
  }
  finalize_identity_flag(out);
  return out;
}

}  // namespace

KrausSet amplitude_damping_two_qubit(const AmplitudeDampingParams& params,
                                     const MemoryMix& mix,
                                     AmplitudeVariant variant) {
  if (variant == AmplitudeVariant::paper_literal) {
    return amplitude_damping_paper_literal(params, mix);
  }
  return amplitude_damping_standard(params, mix);
}

// ---------- application and validation ----------

DensityMatrix apply_channel(const KrausSet& k, const DensityMatrix& state) {
  if (k.dim != state.dim()) {
    throw DimensionMismatchError("apply_channel: operator and state dims differ");
  }
  if (k.operators.empty()) {
    throw std::invalid_argument("apply_channel: empty operator set");
  }
  Matrix out = Matrix::Zero(k.dim, k.dim);
  for (const Matrix& op : k.operators) {
    out += op * state.matrix() * op.adjoint();
  }
  return DensityMatrix(out);
}

Matrix choi_matrix(const KrausSet& k) {
  const int dd = k.dim * k.dim;
  Matrix j = Matrix::Zero(dd, dd);
  for (const Matrix& op : k.operators) {
    Eigen::Map<const Vector> v(op.data(), dd);  // column stacking
    j += v * v.adjoint();
  }
  return j;
}

CptpReport validate_cptp(const KrausSet& k) {
  CptpReport report;
  report.completeness_defect = completeness_defect(k);
  const Matrix j = choi_matrix(k);
  const auto eigs = hermitian_eigenvalues(0.5 * (j + j.adjoint()));
  report.choi_min_eigenvalue = eigs.front();
  return report;
}

}  // namespace qslnoise
