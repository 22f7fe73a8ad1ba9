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

#ifndef MFTTS_FMAT_HPP_
#define MFTTS_FMAT_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace mftts {

// Row-major float matrix with a small string metadata block. This is the
// on-disk unit for every per-utterance feature (phones, word/parser streams,
// mel targets, contextual embeddings).
//
// File layout (".fmat", little-endian):
//   magic "FMAT" | version u8 (=1) | rows u32 | cols u32
//   | rows*cols float32 row-major
//   | meta_len u32 | meta_len bytes of UTF-8 "key=value\n" lines
struct FeatureMatrix {
  uint32_t rows = 0;
  uint32_t cols = 0;
  std::vector<float> data;  // rows * cols, row-major
  std::map<std::string, std::string> meta;

  float& at(uint32_t r, uint32_t c) { return data[size_t(r) * cols + c]; }
  float at(uint32_t r, uint32_t c) const { return data[size_t(r) * cols + c]; }

  bool operator==(const FeatureMatrix& o) const {
    return rows == o.rows && cols == o.cols && data == o.data && meta == o.meta;
  }
};

FeatureMatrix make_fmat(uint32_t rows, uint32_t cols, float fill = 0.0f);

// Writes atomically (temp file then rename). Throws NonFiniteValue if any
// entry is NaN/inf, IoError on filesystem failure.
void write_fmat(const FeatureMatrix& m, const std::string& path);

// Throws CorruptFile on bad magic, bad version, or truncation.
FeatureMatrix read_fmat(const std::string& path);

}  // namespace mftts

#endif  // MFTTS_FMAT_HPP_
