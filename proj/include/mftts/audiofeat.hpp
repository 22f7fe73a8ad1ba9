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

#ifndef MFTTS_AUDIOFEAT_HPP_
#define MFTTS_AUDIOFEAT_HPP_

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "mftts/wavio.hpp"

namespace mftts {

// Spectral analysis settings. 1024/256/1024 at 16 kHz with 80 mel bins over
// 50-8000 Hz; log10 magnitudes floored at 1e-5 (so -5 is the spectrogram
// floor).
struct SpectrogramConfig {
  int n_fft = 1024;
  int hop = 256;
  int win = 1024;
  int n_mels = 80;
  double fmin = 50.0;
  double fmax = 8000.0;
  int rate = kSampleRate;

  int n_bins() const { return n_fft / 2 + 1; }
};

constexpr double kLogFloor = 1e-5;  // log10(1e-5) = -5

double hz_to_mel(double hz);
double mel_to_hz(double mel);

// Triangular mel filterbank [n_mels x n_bins], peak value 1, centers equally
// spaced on the mel scale. Throws InvalidBand if fmax exceeds Nyquist or
// fmin >= fmax.
Eigen::MatrixXd mel_filterbank(const SpectrogramConfig& cfg);

// Centered STFT with a periodic Hann window and reflect padding. Frame count
// is floor(len/hop) + 1. Wraps FFTW; one instance is not safe for concurrent
// calls, use one per thread.
class Stft {
 public:
  explicit Stft(const SpectrogramConfig& cfg);
  ~Stft();
  Stft(const Stft&) = delete;
  Stft& operator=(const Stft&) = delete;

  // Complex spectrogram [F x n_bins].
  Eigen::MatrixXcd transform(const std::vector<double>& samples) const;
  Eigen::MatrixXd magnitude(const std::vector<double>& samples) const;

  // Overlap-add inverse with squared-window normalization; returns
  // (F-1)*hop samples (the center padding is removed).
  std::vector<double> inverse(const Eigen::MatrixXcd& spec) const;

  const SpectrogramConfig& config() const { return cfg_; }
  const std::vector<double>& window() const { return window_; }

 private:
  SpectrogramConfig cfg_;
  std::vector<double> window_;
  struct FftwState;
  FftwState* fftw_;
};

// Log10 mel spectrogram, frames x n_mels, values >= -5.
struct MelSpectrogram {
  Eigen::MatrixXd frames;
  SpectrogramConfig cfg;
};

// |STFT| -> mel filterbank -> clamp at 1e-5 -> log10. Throws TooShort for
// clips shorter than one window and ConfigError for a wrong sample rate.
MelSpectrogram wav_to_mel(const AudioClip& clip, const SpectrogramConfig& cfg);

}  // namespace mftts

#endif  // MFTTS_AUDIOFEAT_HPP_
