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

#include "mftts/vocoder.hpp"

#include <cmath>

#include "mftts/error.hpp"
#include "mftts/rng.hpp"

namespace mftts {

Eigen::MatrixXd mel_to_linear(const MelSpectrogram& mel,
                              const Eigen::MatrixXd& filterbank,
                              const SpectrogramConfig& cfg) {
  if (mel.cfg.n_fft != cfg.n_fft || mel.cfg.n_mels != cfg.n_mels ||
      mel.cfg.fmin != cfg.fmin || mel.cfg.fmax != cfg.fmax ||
      mel.cfg.rate != cfg.rate) {
    throw Error(ErrorCode::ConfigError,
                "mel spectrogram and filterbank configs disagree");
  }
  if (filterbank.rows() != cfg.n_mels || filterbank.cols() != cfg.n_bins()) {
    throw Error(ErrorCode::ShapeError, "filterbank has wrong shape");
  }
  Eigen::MatrixXd mel_mag =
      Eigen::pow(10.0, mel.frames.array());  // de-log, [F x mels]
  Eigen::MatrixXd pinv =
      filterbank.completeOrthogonalDecomposition().pseudoInverse();
  // [F x mels] * [mels x bins] with pinv^T; clamp the least-squares
  // negatives away.
  Eigen::MatrixXd mag = mel_mag * pinv.transpose();
  return mag.cwiseMax(0.0);
}

std::vector<double> griffin_lim(const Eigen::MatrixXd& magnitude,
                                const GriffinLimConfig& cfg,
                                const SpectrogramConfig& spec_cfg,
                                uint64_t seed) {
  if (cfg.iterations < 1 || cfg.momentum < 0.0 || cfg.momentum >= 1.0) {
    throw Error(ErrorCode::ConfigError, "bad Griffin-Lim config");
  }
  if (magnitude.minCoeff() < 0.0) {
    throw Error(ErrorCode::ConfigError, "magnitude must be non-negative");
  }
  int frames = int(magnitude.rows());
  int bins = int(magnitude.cols());
  if (magnitude.norm() == 0.0) {
    return std::vector<double>(size_t(std::max(frames - 1, 0)) *
                                   size_t(spec_cfg.hop),
                               0.0);
  }

  Stft stft(spec_cfg);
  Rng rng(seed);
  Eigen::MatrixXcd angles(frames, bins);
  for (int f = 0; f < frames; ++f) {
    for (int b = 0; b < bins; ++b) {
      double phi = rng.uniform(-M_PI, M_PI);
      angles(f, b) = std::complex<double>(std::cos(phi), std::sin(phi));
    }
  }

  Eigen::MatrixXcd rebuilt = Eigen::MatrixXcd::Zero(frames, bins);
  Eigen::MatrixXcd prev = Eigen::MatrixXcd::Zero(frames, bins);
  std::vector<double> signal;
  for (int it = 0; it < cfg.iterations; ++it) {
    prev = rebuilt;
    Eigen::MatrixXcd proj =
        magnitude.array().cast<std::complex<double>>() * angles.array();
    signal = stft.inverse(proj);
    rebuilt = stft.transform(signal);
    Eigen::MatrixXcd update =
        rebuilt - (cfg.momentum / (1.0 + cfg.momentum)) * prev;
    Eigen::ArrayXXd denom = update.cwiseAbs().array() + 1e-16;
    angles = update.array() / denom.cast<std::complex<double>>();
  }
  Eigen::MatrixXcd final_spec =
      magnitude.array().cast<std::complex<double>>() * angles.array();
  signal = stft.inverse(final_spec);

  double peak = 0.0;
  for (double s : signal) peak = std::max(peak, std::abs(s));
  if (peak > 0.0) {
    double gain = 0.95 / peak;
    for (double& s : signal) s *= gain;
  }
  return signal;
}

double spectral_convergence(const std::vector<double>& samples,
                            const Eigen::MatrixXd& magnitude,
                            const SpectrogramConfig& spec_cfg) {
  Stft stft(spec_cfg);
  Eigen::MatrixXd got = stft.magnitude(samples);
  long frames = std::min(got.rows(), magnitude.rows());
  Eigen::MatrixXd a = got.topRows(frames);
  Eigen::MatrixXd b = magnitude.topRows(frames);
  double denom = b.norm();
  if (denom == 0.0) return 0.0;
  return (a - b).norm() / denom;
}

AudioClip mel_to_wav(const MelSpectrogram& mel, const GriffinLimConfig& cfg,
                     uint64_t seed) {
  Eigen::MatrixXd fb = mel_filterbank(mel.cfg);
  Eigen::MatrixXd mag = mel_to_linear(mel, fb, mel.cfg);
  // pre-emphasis exponent sharpens the magnitude before inversion
  mag = mag.array().pow(cfg.power);
  AudioClip clip;
  clip.rate = mel.cfg.rate;
  clip.samples = griffin_lim(mag, cfg, mel.cfg, seed);
  return clip;
}

}  // namespace mftts
