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

#include "mftts/audiofeat.hpp"

#include <fftw3.h>

#include <cmath>

#include "mftts/error.hpp"

namespace mftts {

double hz_to_mel(double hz) { return 2595.0 * std::log10(1.0 + hz / 700.0); }

double mel_to_hz(double mel) {
  return 700.0 * (std::pow(10.0, mel / 2595.0) - 1.0);
}

Eigen::MatrixXd mel_filterbank(const SpectrogramConfig& cfg) {
  if (cfg.fmax > cfg.rate / 2.0) {
    throw Error(ErrorCode::InvalidBand,
                "fmax " + std::to_string(cfg.fmax) + " above Nyquist " +
                    std::to_string(cfg.rate / 2.0));
  }
  if (cfg.fmin >= cfg.fmax || cfg.fmin < 0.0) {
    throw Error(ErrorCode::InvalidBand, "need 0 <= fmin < fmax");
  }

  int n_bins = cfg.n_bins();
  Eigen::MatrixXd fb = Eigen::MatrixXd::Zero(cfg.n_mels, n_bins);

  // n_mels + 2 points equally spaced in mel; triangle k spans
  // [centers[k-1], centers[k+1]] with peak 1 at centers[k].
  std::vector<double> centers(size_t(cfg.n_mels) + 2);
  double mel_lo = hz_to_mel(cfg.fmin);
  double mel_hi = hz_to_mel(cfg.fmax);
  for (size_t i = 0; i < centers.size(); ++i) {
    double mel = mel_lo + (mel_hi - mel_lo) * double(i) / double(cfg.n_mels + 1);
    centers[i] = mel_to_hz(mel);
  }

  for (int m = 0; m < cfg.n_mels; ++m) {
    double left = centers[size_t(m)];
    double center = centers[size_t(m) + 1];
    double right = centers[size_t(m) + 2];
    for (int b = 0; b < n_bins; ++b) {
      double f = double(b) * cfg.rate / cfg.n_fft;
      double w = 0.0;
      if (f > left && f < center) {
        w = (f - left) / (center - left);
      } else if (f >= center && f < right) {
        w = (right - f) / (right - center);
      }
      fb(m, b) = w;
    }
  }
  return fb;
}

struct Stft::FftwState {
  fftw_plan forward = nullptr;
  fftw_plan backward = nullptr;
  double* real_buf = nullptr;
  fftw_complex* cplx_buf = nullptr;
  int n_fft = 0;
};

Stft::Stft(const SpectrogramConfig& cfg) : cfg_(cfg) {
  if (cfg.win > cfg.n_fft) {
    throw Error(ErrorCode::ConfigError, "window longer than n_fft");
  }
  // periodic Hann
  window_.resize(size_t(cfg.win));
  for (int n = 0; n < cfg.win; ++n) {
    window_[size_t(n)] = 0.5 * (1.0 - std::cos(2.0 * M_PI * n / cfg.win));
  }
  fftw_ = new FftwState;
  fftw_->n_fft = cfg.n_fft;
  fftw_->real_buf = fftw_alloc_real(size_t(cfg.n_fft));
  fftw_->cplx_buf = fftw_alloc_complex(size_t(cfg.n_fft / 2 + 1));
  fftw_->forward = fftw_plan_dft_r2c_1d(cfg.n_fft, fftw_->real_buf,
                                        fftw_->cplx_buf, FFTW_ESTIMATE);
  fftw_->backward = fftw_plan_dft_c2r_1d(cfg.n_fft, fftw_->cplx_buf,
                                         fftw_->real_buf, FFTW_ESTIMATE);
}

Stft::~Stft() {
  fftw_destroy_plan(fftw_->forward);
  fftw_destroy_plan(fftw_->backward);
  fftw_free(fftw_->real_buf);
  fftw_free(fftw_->cplx_buf);
  delete fftw_;
}

namespace {

// numpy-style reflect padding (no edge duplication).
std::vector<double> reflect_pad(const std::vector<double>& x, int pad) {
  int n = int(x.size());
  if (n < 2) {
    throw Error(ErrorCode::TooShort, "cannot reflect-pad a <2 sample signal");
  }
  std::vector<double> out(size_t(n) + 2 * size_t(pad));
  auto mirrored = [&](long i) -> double {
    long period = 2 * (n - 1);
    long j = ((i % period) + period) % period;
    if (j >= n) j = period - j;
    return x[size_t(j)];
  };
  for (long i = 0; i < long(out.size()); ++i) {
    out[size_t(i)] = mirrored(i - pad);
  }
  return out;
}

}  // namespace

Eigen::MatrixXcd Stft::transform(const std::vector<double>& samples) const {
  int hop = cfg_.hop;
  int win = cfg_.win;
  int n_bins = cfg_.n_bins();
  long len = long(samples.size());
  if (len < win) {
    throw Error(ErrorCode::TooShort,
                "clip of " + std::to_string(len) + " samples is shorter than "
                "one window (" + std::to_string(win) + ")");
  }
  int frames = int(len / hop) + 1;
  std::vector<double> padded = reflect_pad(samples, win / 2);

  Eigen::MatrixXcd spec(frames, n_bins);
  for (int f = 0; f < frames; ++f) {
    long start = long(f) * hop;
    for (int n = 0; n < win; ++n) {
      fftw_->real_buf[n] = padded[size_t(start + n)] * window_[size_t(n)];
    }
    for (int n = win; n < cfg_.n_fft; ++n) fftw_->real_buf[n] = 0.0;
    fftw_execute(fftw_->forward);
    for (int b = 0; b < n_bins; ++b) {
      spec(f, b) = std::complex<double>(fftw_->cplx_buf[b][0],
                                        fftw_->cplx_buf[b][1]);
    }
  }
  return spec;
}

Eigen::MatrixXd Stft::magnitude(const std::vector<double>& samples) const {
  return transform(samples).cwiseAbs();
}

std::vector<double> Stft::inverse(const Eigen::MatrixXcd& spec) const {
  int hop = cfg_.hop;
  int win = cfg_.win;
  int n_bins = cfg_.n_bins();
  if (int(spec.cols()) != n_bins) {
    throw Error(ErrorCode::ShapeError, "spectrogram has wrong bin count");
  }
  int frames = int(spec.rows());
  long padded_len = long(frames - 1) * hop + win;
  std::vector<double> acc(size_t(padded_len), 0.0);
  std::vector<double> win_sq(size_t(padded_len), 0.0);

  for (int f = 0; f < frames; ++f) {
    for (int b = 0; b < n_bins; ++b) {
      fftw_->cplx_buf[b][0] = spec(f, b).real();
      fftw_->cplx_buf[b][1] = spec(f, b).imag();
    }
    fftw_execute(fftw_->backward);
    long start = long(f) * hop;
    for (int n = 0; n < win; ++n) {
      // FFTW's c2r is unnormalized.
      double sample = fftw_->real_buf[n] / cfg_.n_fft;
      acc[size_t(start + n)] += sample * window_[size_t(n)];
      win_sq[size_t(start + n)] += window_[size_t(n)] * window_[size_t(n)];
    }
  }
  long out_len = long(frames - 1) * hop;
  std::vector<double> out(size_t(out_len), 0.0);
  int pad = win / 2;
  for (long i = 0; i < out_len; ++i) {
    double denom = win_sq[size_t(i + pad)];
    out[size_t(i)] = denom > 1e-11 ? acc[size_t(i + pad)] / denom : 0.0;
  }
  return out;
}

MelSpectrogram wav_to_mel(const AudioClip& clip, const SpectrogramConfig& cfg) {
  if (clip.rate != cfg.rate) {
    throw Error(ErrorCode::ConfigError,
                "clip rate " + std::to_string(clip.rate) +
                    " does not match config rate " + std::to_string(cfg.rate));
  }
  for (double s : clip.samples) {
    if (!std::isfinite(s)) {
      throw Error(ErrorCode::NonFiniteValue, "non-finite audio sample");
    }
  }
  Stft stft(cfg);
  Eigen::MatrixXd mag = stft.magnitude(clip.samples);  // [F x bins]
  Eigen::MatrixXd fb = mel_filterbank(cfg);            // [mels x bins]
  Eigen::MatrixXd mel = mag * fb.transpose();          // [F x mels]

  MelSpectrogram out;
  out.cfg = cfg;
  out.frames = mel.cwiseMax(kLogFloor).array().log10();
  return out;
}

}  // namespace mftts
