// Copyright (c) 2026 The mftts Authors
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

#ifndef MFTTS_VOCODER_HPP_
#define MFTTS_VOCODER_HPP_

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "mftts/audiofeat.hpp"

namespace mftts {

struct GriffinLimConfig {
  int iterations = 60;
  double momentum = 0.99;
  double power = 1.2;  // magnitude pre-emphasis exponent used by mel_to_wav
};

// De-logs the mel spectrogram and maps it back to linear magnitudes through
// the Moore-Penrose pseudo-inverse of the filterbank; negatives clamp to 0.
// Output is [F x n_bins]. Throws ConfigError if the mel was produced with a
// different filterbank configuration.
Eigen::MatrixXd mel_to_linear(const MelSpectrogram& mel,
                              const Eigen::MatrixXd& filterbank,
                              const SpectrogramConfig& cfg);

// Alternating-projection phase reconstruction with momentum. Deterministic
// for a fixed seed; an all-zero magnitude returns an all-zero signal. The
// result is peak-normalized to 0.95.
std::vector<double> griffin_lim(const Eigen::MatrixXd& magnitude,
                                const GriffinLimConfig& cfg,
                                const SpectrogramConfig& spec_cfg,
                                uint64_t seed = 0);

// Relative reconstruction error || |STFT(y)| - M ||_F / ||M||_F.
double spectral_convergence(const std::vector<double>& samples,
                            const Eigen::MatrixXd& magnitude,
                            const SpectrogramConfig& spec_cfg);

// Full synthesis path: mel -> linear -> magnitude^power -> griffin_lim.
AudioClip mel_to_wav(const MelSpectrogram& mel, const GriffinLimConfig& cfg,
                     uint64_t seed = 0);

}  // namespace mftts

#endif  // MFTTS_VOCODER_HPP_
