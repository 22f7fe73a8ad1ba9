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

#ifndef MFTTS_WAVIO_HPP_
#define MFTTS_WAVIO_HPP_

#include <string>
#include <vector>

namespace mftts {

constexpr int kSampleRate = 16000;

// Mono 16 kHz clip with samples in [-1, 1].
struct AudioClip {
  std::vector<double> samples;
  int rate = kSampleRate;
};

// Reads a 16-bit PCM mono WAV. Anything else (wrong rate, stereo, float
// format) is rejected with CorruptFile/ConfigError.
AudioClip read_wav(const std::string& path);

// Writes 16-bit PCM mono at 16 kHz; samples are clipped to [-1, 1].
void write_wav(const AudioClip& clip, const std::string& path);

// Cuts leading/trailing samples below the dBFS threshold (default -60).
AudioClip trim_silence(const AudioClip& clip, double threshold_db = -60.0);

}  // namespace mftts

#endif  // MFTTS_WAVIO_HPP_
