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

#include "mftts/featalign.hpp"

#include "mftts/error.hpp"

namespace mftts {

std::vector<std::vector<double>> upsample(
    const std::vector<std::vector<double>>& word_feats,
    const PhoneSequence& phone_seq) {
  int expected_words = phone_seq.word_count();
  if (int(word_feats.size()) != expected_words) {
    throw Error(ErrorCode::AlignmentError,
                "expected " + std::to_string(expected_words) +
                    " word feature rows, got " +
                    std::to_string(word_feats.size()));
  }
  size_t dim = word_feats.empty() ? 0 : word_feats[0].size();
  for (const auto& row : word_feats) {
    if (row.size() != dim) {
      throw Error(ErrorCode::ShapeError, "ragged word feature rows");
    }
  }

  std::vector<std::vector<double>> out(phone_seq.length());
  for (size_t t = 0; t < phone_seq.length(); ++t) {
    int wi = phone_seq.word_index[t];
    std::vector<double>& row = out[t];
    row.assign(dim + 1, 0.0);
    if (wi >= 0) {
      const auto& src = word_feats[size_t(wi)];
      for (size_t d = 0; d < dim; ++d) row[d] = src[d];
      row[dim] = 1.0;  // is-word flag
    }
  }
  return out;
}

FeatureMatrix to_fmat(const std::vector<std::vector<double>>& rows,
                      uint32_t cols_if_empty) {
  uint32_t cols = rows.empty() ? cols_if_empty : uint32_t(rows[0].size());
  FeatureMatrix m = make_fmat(uint32_t(rows.size()), cols);
  for (uint32_t r = 0; r < m.rows; ++r) {
    if (rows[r].size() != cols) {
      throw Error(ErrorCode::ShapeError, "ragged rows in to_fmat");
    }
    for (uint32_t c = 0; c < cols; ++c) m.at(r, c) = float(rows[r][c]);
  }
  return m;
}

std::vector<std::vector<double>> from_fmat(const FeatureMatrix& m) {
  std::vector<std::vector<double>> rows(m.rows);
  for (uint32_t r = 0; r < m.rows; ++r) {
    rows[r].resize(m.cols);
    for (uint32_t c = 0; c < m.cols; ++c) rows[r][c] = double(m.at(r, c));
  }
  return rows;
}

}  // namespace mftts
