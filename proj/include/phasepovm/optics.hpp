// Copyright 2026 The phasepovm Authors
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

// Single-photon simulation of the direct and folded detection schemes.
//
// A single photon spread over several spatial paths is described by the
// coefficients of the creation operators a^dagger_{H,V}(m). They are stacked
// as [H(1), V(1), H(2), V(2), ...], so path m (1-based) occupies the 0-based
// slots 2m-2 (H) and 2m-1 (V). Passive optics acts linearly on this vector.
//
// Detectors are ideal: unit efficiency, no dark counts, no dead time. The
// folded scheme is simulated by unrolling the loop into time slots; no
// physical delay is modelled.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <numbers>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "phasepovm/decomposition.hpp"
#include "phasepovm/naimark.hpp"
#include "phasepovm/numerics.hpp"
#include "phasepovm/povm.hpp"

namespace phasepovm {

enum class Polarization { H, V };

inline const char* to_string(Polarization p) { return p == Polarization::H ? "H" : "V"; }

/// Slot of (path, polarization) in the stacked amplitude vector.
inline std::size_t mode_index(std::size_t path, Polarization pol) {
  return 2 * (path - 1) + (pol == Polarization::V ? 1 : 0);
}

class ModeAmplitudes {
 public:
  static constexpr double kNormSlack = 1e-12;

  explicit ModeAmplitudes(std::size_t paths) : amplitudes_(2 * require_paths(paths)) {}

  ModeAmplitudes(std::size_t paths, ComplexVector amplitudes) : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() != 2 * require_paths(paths))
      throw ShapeError("ModeAmplitudes", amplitudes_.size(), 1, 2 * paths, 1);
    if (!amplitudes_.all_finite()) throw DomainError("ModeAmplitudes: non-finite amplitude");
    if (amplitudes_.squared_norm() > 1 + kNormSlack)
      throw DomainError("ModeAmplitudes: squared norm exceeds one");
  }

  std::size_t paths() const { return amplitudes_.size() / 2; }
  const ComplexVector& amplitudes() const { return amplitudes_; }

  Complex amplitude(std::size_t path, Polarization pol) const {
    check_path(path);
    return amplitudes_[mode_index(path, pol)];
  }
  Complex& amplitude(std::size_t path, Polarization pol) {
    check_path(path);
    return amplitudes_[mode_index(path, pol)];
  }

  double squared_norm() const { return amplitudes_.squared_norm(); }

  /// Appends vacuum paths until `paths` are present.
  void grow_to(std::size_t paths) {
    if (paths <= this->paths()) return;
    std::vector<Complex> v(amplitudes_.begin(), amplitudes_.end());
    v.resize(2 * paths);
    amplitudes_ = ComplexVector(std::move(v));
  }

  void check_path(std::size_t path) const {
    if (path < 1 || path > paths())
      throw DomainError("path " + std::to_string(path) + " out of range (state has " +
                        std::to_string(paths()) + " paths)");
  }

 private:
  static std::size_t require_paths(std::size_t paths) {
    if (paths < 1) throw DomainError("ModeAmplitudes: need at least one path");
    return paths;
  }

  ComplexVector amplitudes_;
};

/// (1/sqrt2, e^{i phi}/sqrt2, 0, ..., 0): the photon on path 1, rest vacuum.
inline ModeAmplitudes input_state(double phi, std::size_t paths = 1) {
  ModeAmplitudes s(paths);
  s.amplitude(1, Polarization::H) = 1 / std::numbers::sqrt2;
  s.amplitude(1, Polarization::V) = std::polar(1 / std::numbers::sqrt2, wrap_phase(phi));
  return s;
}

inline ModeAmplitudes input_state(const ComplexVector& qubit, std::size_t paths = 1) {
  if (qubit.size() != 2) throw ShapeError("input_state", qubit.size(), 1, 2, 1);
  ModeAmplitudes s(paths);
  s.amplitude(1, Polarization::H) = qubit[0];
  s.amplitude(1, Polarization::V) = qubit[1];
  return s;
}

// Optical elements ----------------------------------------------------------

/// Rotation of the polarization plane on one path: [[c, s], [-s, c]] on (H, V).
struct PolarizationRotation {
  std::size_t path = 1;
  double omega = 0;
};

/// Waveplate with fast axis on H: diag(1, e^{-i phi}) on (H, V).
struct WaveplatePhase {
  std::size_t path = 1;
  double phi = 0;
};

/// Partially polarizing beam splitter between two paths, acting on
/// [H(a), V(a), H(b), V(b)] as W(H(a),H(b),omega_h) W(V(a),V(b),omega_v).
/// omega_h == omega_v is an ordinary beam splitter.
struct PPBS {
  std::size_t path_a = 1;
  std::size_t path_b = 2;
  double omega_h = 0;
  double omega_v = 0;
};

/// Polarizing beam splitter: H stays on path_a, V is sent to path_b.
/// Same matrix as PPBS with omega_h = 0, omega_v = pi/2.
struct PBS {
  std::size_t path_a = 1;
  std::size_t path_b = 2;
};

/// Ideal photon counter on one polarization mode, labelled with an outcome.
struct Detector {
  std::size_t path = 1;
  Polarization polarization = Polarization::H;
  std::size_t outcome = 0;
};

using OpticalElement = std::variant<PolarizationRotation, WaveplatePhase, PPBS, PBS, Detector>;

inline PPBS as_ppbs(const PBS& p) { return {p.path_a, p.path_b, 0.0, std::numbers::pi / 2}; }

/// Highest path index an element touches.
inline std::size_t max_path(const OpticalElement& e) {
  return std::visit(
      [](const auto& x) -> std::size_t {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, PPBS> || std::is_same_v<T, PBS>)
          return std::max(x.path_a, x.path_b);
        else
          return x.path;
      },
      e);
}

namespace detail {

inline void rotate_pair(ComplexVector& a, std::size_t i, std::size_t j, double omega) {
  const double c = std::cos(omega);
  const double s = std::sin(omega);
  const Complex x = a[i];
  const Complex y = a[j];
  a[i] = c * x + s * y;
  a[j] = -s * x + c * y;
}

inline void apply_in_place(ComplexVector& a, std::size_t paths, const OpticalElement& e) {
  auto check = [&](std::size_t path) {
    if (path < 1 || path > paths)
      throw DomainError("optical element references path " + std::to_string(path) +
                        " but the state has " + std::to_string(paths) + " paths");
  };
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, PolarizationRotation>) {
          check(x.path);
          rotate_pair(a, mode_index(x.path, Polarization::H), mode_index(x.path, Polarization::V),
                      x.omega);
        } else if constexpr (std::is_same_v<T, WaveplatePhase>) {
          check(x.path);
          a[mode_index(x.path, Polarization::V)] *= std::polar(1.0, -x.phi);
        } else if constexpr (std::is_same_v<T, PPBS> || std::is_same_v<T, PBS>) {
          PPBS p;
          if constexpr (std::is_same_v<T, PBS>)
            p = as_ppbs(x);
          else
            p = x;
          check(p.path_a);
          check(p.path_b);
          if (p.path_a == p.path_b) throw DomainError("beam splitter needs two distinct paths");
          rotate_pair(a, mode_index(p.path_a, Polarization::H), mode_index(p.path_b, Polarization::H),
                      p.omega_h);
          rotate_pair(a, mode_index(p.path_a, Polarization::V), mode_index(p.path_b, Polarization::V),
                      p.omega_v);
        } else {
          check(x.path);  // detectors do not change amplitudes
        }
      },
      e);
}

}  // namespace detail

/// Applies one element; amplitudes outside the touched paths are unchanged.
inline ModeAmplitudes apply_element(const ModeAmplitudes& state, const OpticalElement& e) {
  ComplexVector a = state.amplitudes();
  detail::apply_in_place(a, state.paths(), e);
  return ModeAmplitudes(state.paths(), std::move(a));
}

/// Matrix of an element on `paths` paths (2*paths modes).
inline ComplexMatrix element_matrix(const OpticalElement& e, std::size_t paths) {
  ComplexMatrix m(2 * paths, 2 * paths);
  for (std::size_t c = 0; c < 2 * paths; ++c) {
    auto col = ComplexVector::basis(2 * paths, c);
    detail::apply_in_place(col, paths, e);
    for (std::size_t r = 0; r < 2 * paths; ++r) m(r, c) = col[r];
  }
  return m;
}

// Direct scheme -------------------------------------------------------------

/// Paths are allocated in order of first use: path 1 carries the photon,
/// modular block k opens its pass-through path 2k+2 and its PBS exit path
/// 2k+3, and the final PBS opens path M.
struct DirectLayout {
  std::size_t M;

  /// Path carrying network modes 2i-1 (H) and 2i (V), i = 1..M/2.
  std::size_t network_path(std::size_t i) const { return i == 1 ? 1 : 2 * (i - 1); }
  /// PBS exit path for the V polarization tapped from network path i.
  std::size_t tap_path(std::size_t i) const { return i == M / 2 ? M : 2 * i + 1; }
  std::size_t total_paths() const { return M; }
};

struct Scheme {
  std::size_t M = 0;
  std::size_t paths = 0;
  std::vector<OpticalElement> elements;
  /// Detector for outcome k sits at detectors[k].
  std::vector<Detector> detectors;
  /// Stacked-vector slot of network mode u (1-based u -> index u-1).
  std::vector<std::size_t> network_modes;
};

/// BS angle of modular block k: arctan sqrt((M-2-2k)/2).
inline double block_splitter_angle(std::size_t m, std::size_t k) { return triplet_angle(m, k); }

inline Scheme build_direct_scheme(std::size_t m) {
  require_outcome_count(m);
  const DirectLayout layout{m};
  Scheme s;
  s.M = m;
  s.paths = layout.total_paths();
  s.detectors.resize(m);

  auto add_detectors = [&](std::size_t i) {
    const std::size_t k = i - 1;
    const Detector h{layout.network_path(i), Polarization::H, k};
    const Detector v{layout.tap_path(i), Polarization::V, k + m / 2};
    s.elements.emplace_back(PBS{layout.network_path(i), layout.tap_path(i)});
    s.elements.emplace_back(h);
    s.elements.emplace_back(v);
    s.detectors[h.outcome] = h;
    s.detectors[v.outcome] = v;
  };

  // Initial block: W(1,2,pi/4) as a polarization rotation, S(2,pi/2) as a waveplate.
  s.elements.emplace_back(PolarizationRotation{1, std::numbers::pi / 4});
  s.elements.emplace_back(WaveplatePhase{1, std::numbers::pi / 2});

  for (std::size_t k = 0; k + 2 <= m / 2; ++k) {
    const std::size_t in = layout.network_path(k + 1);
    const std::size_t through = layout.network_path(k + 2);
    const double t = block_splitter_angle(m, k);
    s.elements.emplace_back(PPBS{in, through, t, t});
    add_detectors(k + 1);
    s.elements.emplace_back(PolarizationRotation{through, triplet_closing_angle(m)});
  }
  add_detectors(m / 2);

  s.network_modes.resize(m);
  for (std::size_t i = 1; i <= m / 2; ++i) {
    s.network_modes[2 * i - 2] = mode_index(layout.network_path(i), Polarization::H);
    s.network_modes[2 * i - 1] = mode_index(layout.network_path(i), Polarization::V);
  }
  return s;
}

/// Full transfer matrix of the scheme on all 2*paths modes.
inline ComplexMatrix scheme_transfer_matrix(const Scheme& s) {
  const std::size_t n = 2 * s.paths;
  ComplexMatrix t(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    auto col = ComplexVector::basis(n, c);
    for (const auto& e : s.elements) detail::apply_in_place(col, s.paths, e);
    for (std::size_t r = 0; r < n; ++r) t(r, c) = col[r];
  }
  return t;
}

/// Transfer matrix of the interferometer alone (beam splitters, rotations,
/// waveplates; no PBS or detectors), restricted to the M network modes.
/// Equals evaluate_netlist(decompose_closed(M)).
inline ComplexMatrix interferometer_matrix(const Scheme& s) {
  ComplexMatrix t(s.M, s.M);
  for (std::size_t c = 0; c < s.M; ++c) {
    ComplexVector col(2 * s.paths);
    col[s.network_modes[c]] = 1;
    for (const auto& e : s.elements) {
      if (std::holds_alternative<PBS>(e) || std::holds_alternative<Detector>(e)) continue;
      detail::apply_in_place(col, s.paths, e);
    }
    for (std::size_t r = 0; r < s.M; ++r) t(r, c) = col[s.network_modes[r]];
  }
  return t;
}

/// Amplitude response of each detector to each network input mode, rows in
/// output-port order: row j belongs to the detector of outcome sigma(j)
/// (interleaved). Equals diag(+1, -1, +1, -1, ...) Z^dagger; the -1 is the
/// PBS reflection on V ports.
inline ComplexMatrix detection_matrix(const Scheme& s) {
  const auto t = scheme_transfer_matrix(s);
  ComplexMatrix d(s.M, s.M);
  for (std::size_t j = 0; j < s.M; ++j) {
    const auto& det = s.detectors[outcome_of_column(s.M, j)];
    const std::size_t row = mode_index(det.path, det.polarization);
    for (std::size_t c = 0; c < s.M; ++c) d(j, c) = t(row, s.network_modes[c]);
  }
  return d;
}

/// Result of pushing one input amplitude vector through a scheme.
struct Propagation {
  std::vector<Complex> detector_amplitudes;  // indexed by outcome
  std::vector<double> step_norms;            // squared norm after each element
  ModeAmplitudes final_state{1};
};

/// Propagates `input` through the scheme, opening vacuum paths on first use.
inline Propagation propagate(const Scheme& s, const ModeAmplitudes& input) {
  Propagation out;
  out.detector_amplitudes.assign(s.M, Complex{});
  out.step_norms.reserve(s.elements.size());
  ModeAmplitudes state = input;
  for (const auto& e : s.elements) {
    state.grow_to(max_path(e));
    state = apply_element(state, e);
    if (const auto* d = std::get_if<Detector>(&e))
      out.detector_amplitudes.at(d->outcome) = state.amplitude(d->path, d->polarization);
    out.step_norms.push_back(state.squared_norm());
  }
  out.final_state = std::move(state);
  return out;
}

/// Runs `pure_run` on each eigenvector of rho and mixes the results with the
/// eigenvalues as weights.
template <typename Result, typename PureRun, typename Accumulate>
void for_each_eigencomponent(const QubitState& rho, PureRun pure_run, Accumulate accumulate) {
  const auto eig = eig_hermitian_2x2(rho.density(), tolerance::kCompare);
  for (std::size_t i = 0; i < 2; ++i) {
    const double w = eig.values[i];
    if (w <= 0) continue;  // PSD up to rounding; negative slivers carry no weight
    const Result r = pure_run(eig.vectors[i]);
    accumulate(w, r);
  }
}

inline constexpr double kProbabilityTolerance = 1e-10;

inline OutcomeDistribution simulate_direct(const Scheme& s, const QubitState& rho) {
  OutcomeDistribution dist{s.M, std::vector<double>(s.M, 0.0)};
  for_each_eigencomponent<Propagation>(
      rho, [&](const ComplexVector& v) { return propagate(s, input_state(v)); },
      [&](double w, const Propagation& p) {
        for (std::size_t k = 0; k < s.M; ++k) dist.probabilities[k] += w * std::norm(p.detector_amplitudes[k]);
      });
  if (std::abs(dist.total() - 1) > kProbabilityTolerance)
    throw NumericalError("simulate_direct: click probabilities sum to " + std::to_string(dist.total()));
  return dist;
}

/// Mode-level simulation of an arbitrary netlist with ideal detectors on all
/// output modes; output mode j is labelled with outcome sigma(j).
inline OutcomeDistribution simulate_netlist(const Netlist& n, const QubitState& rho) {
  validate(n);
  if (n.M < 2 || !is_power_of_two(n.M))
    throw DomainError("simulate_netlist: mode count must be a power of 2");
  OutcomeDistribution dist{n.M, std::vector<double>(n.M, 0.0)};
  const auto u = evaluate_netlist(n);
  for_each_eigencomponent<ComplexVector>(
      rho,
      [&](const ComplexVector& v) {
        ComplexVector in(n.M);
        in[0] = v[0];
        in[1] = v[1];
        return matvec(u, in);
      },
      [&](double w, const ComplexVector& out) {
        for (std::size_t j = 0; j < n.M; ++j) dist.probabilities[outcome_of_column(n.M, j)] += w * std::norm(out[j]);
      });
  return dist;
}

/// 4x2 map from the (H, V) pair entering modular block k to
/// [H(m), V(m), H(n), V(n)]: tapped path m then pass-through path n, with the
/// pass-through already rotated by pi + pi/M.
inline ComplexMatrix modular_block_isometry(std::size_t m, std::size_t k) {
  require_outcome_count(m);
  if (m < 4 || k + 2 > m / 2)
    throw DomainError("modular_block_isometry: block index " + std::to_string(k) +
                      " out of range for M=" + std::to_string(m));
  const double t = block_splitter_angle(m, k);
  const std::vector<OpticalElement> block{PPBS{1, 2, t, t},
                                          PolarizationRotation{2, triplet_closing_angle(m)}};
  ComplexMatrix iso(4, 2);
  for (std::size_t c = 0; c < 2; ++c) {
    auto v = ComplexVector::basis(4, c);
    for (const auto& e : block) detail::apply_in_place(v, 2, e);
    for (std::size_t r = 0; r < 4; ++r) iso(r, c) = v[r];
  }
  return iso;
}

// Folded scheme -------------------------------------------------------------

struct SlotSetting {
  std::size_t slot = 1;          // 1-based time slot
  double splitter_angle = 0;     // time-varying BS angle in this slot
  double loop_rotation = 0;      // polarization rotation on the loop arm
};

struct FoldedSchedule {
  std::size_t M = 0;
  /// Slots 1..M/2-1: part of the photon is tapped, the rest circulates.
  /// Empty for M=2, where the photon never enters the loop.
  std::vector<SlotSetting> loop_slots;
  /// Slot M/2: splitter angle 0, everything left is sent to the detectors.
  SlotSetting exit;
};

inline FoldedSchedule build_folded_schedule(std::size_t m) {
  require_outcome_count(m);
  FoldedSchedule f;
  f.M = m;
  for (std::size_t k = 0; k + 2 <= m / 2; ++k)
    f.loop_slots.push_back({k + 1, block_splitter_angle(m, k), triplet_closing_angle(m)});
  f.exit = {m / 2, 0.0, 0.0};
  return f;
}

struct SlotDistribution {
  std::size_t M = 0;
  /// slots[s] = (P_H, P_V) in time slot s+1, i.e. outcomes s and s+M/2.
  std::vector<std::pair<double, double>> slots;
  /// Squared amplitude still circulating after the exit slot.
  double residual_loop_norm = 0;

  double total() const {
    double t = 0;
    for (const auto& [h, v] : slots) t += h + v;
    return t;
  }

  OutcomeDistribution flatten() const {
    OutcomeDistribution d{M, std::vector<double>(M, 0.0)};
    for (std::size_t s = 0; s < slots.size(); ++s) {
      d.probabilities[s] = slots[s].first;
      d.probabilities[s + M / 2] = slots[s].second;
    }
    return d;
  }
};

/// Time-slot unrolling of the folded loop. Each slot runs one modular block
/// on a three-path register: path 1 enters the time-varying BS and is
/// tapped, path 2 is the BS vacuum port that becomes the loop arm, path 3 is
/// the PBS exit for V.
inline SlotDistribution simulate_folded(std::size_t m, const QubitState& rho) {
  const auto schedule = build_folded_schedule(m);
  SlotDistribution dist;
  dist.M = m;
  dist.slots.assign(m / 2, {0.0, 0.0});

  struct SlotRun {
    std::vector<std::pair<double, double>> clicks;
    double residual = 0;
  };

  auto run_slot = [](ComplexVector& loop, const SlotSetting& setting, bool exit) {
    ModeAmplitudes reg(3);
    reg.amplitude(1, Polarization::H) = loop[0];
    reg.amplitude(1, Polarization::V) = loop[1];
    const double before = reg.squared_norm();
    const double t = setting.splitter_angle;
    reg = apply_element(reg, PPBS{1, 2, t, t});
    reg = apply_element(reg, PBS{1, 3});
    const std::pair<double, double> clicks{std::norm(reg.amplitude(1, Polarization::H)),
                                           std::norm(reg.amplitude(3, Polarization::V))};
    if (!exit) reg = apply_element(reg, PolarizationRotation{2, setting.loop_rotation});
    loop = ComplexVector{reg.amplitude(2, Polarization::H), reg.amplitude(2, Polarization::V)};
    const double after = clicks.first + clicks.second + loop.squared_norm();
    if (std::abs(after - before) > kProbabilityTolerance)
      throw NumericalError("simulate_folded: norm not conserved in slot " + std::to_string(setting.slot));
    return clicks;
  };

  for_each_eigencomponent<SlotRun>(
      rho,
      [&](const ComplexVector& v) {
        // Initial block, then the loop.
        ModeAmplitudes in = input_state(v);
        in = apply_element(in, PolarizationRotation{1, std::numbers::pi / 4});
        in = apply_element(in, WaveplatePhase{1, std::numbers::pi / 2});
        ComplexVector loop{in.amplitude(1, Polarization::H), in.amplitude(1, Polarization::V)};
        SlotRun r;
        for (const auto& slot : schedule.loop_slots) r.clicks.push_back(run_slot(loop, slot, false));
        r.clicks.push_back(run_slot(loop, schedule.exit, true));
        r.residual = loop.squared_norm();
        return r;
      },
      [&](double w, const SlotRun& r) {
        for (std::size_t s = 0; s < r.clicks.size(); ++s) {
          dist.slots[s].first += w * r.clicks[s].first;
          dist.slots[s].second += w * r.clicks[s].second;
        }
        dist.residual_loop_norm += w * r.residual;
      });

  if (std::abs(dist.total() - 1) > kProbabilityTolerance)
    throw NumericalError("simulate_folded: click probabilities sum to " + std::to_string(dist.total()));
  return dist;
}

}  // namespace phasepovm
