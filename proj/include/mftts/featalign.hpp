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

#ifndef MFTTS_FEATALIGN_HPP_
#define MFTTS_FEATALIGN_HPP_

#include <vector>

#include "mftts/fmat.hpp"
#include "mftts/textfront.hpp"

namespace mftts {

// Repeats each word-level feature row once per phone of that word, appending
// an is-word flag channel: phones with word_index >= 0 get the word's row
// plus flag 1, SIL/EOS positions get zeros plus flag 0. Output is
// [T x (D+1)]. Throws AlignmentError when the word count disagrees with the
// alignment.
std::vector<std::vector<double>> upsample(
    const std::vector<std::vector<double>>& word_feats,
    const PhoneSequence& phone_seq);

// Dense matrix <-> FeatureMatrix conversion helpers.
FeatureMatrix to_fmat(const std::vector<std::vector<double>>& rows,
                      uint32_t cols_if_empty = 0);
std::vector<std::vector<double>> from_fmat(const FeatureMatrix& m);

}  // namespace mftts

#endif  // MFTTS_FEATALIGN_HPP_
