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

#ifndef MFTTS_EMBEDSTORE_HPP_
#define MFTTS_EMBEDSTORE_HPP_

#include <map>
#include <string>
#include <vector>

#include "mftts/fmat.hpp"
#include "mftts/textfront.hpp"

namespace mftts {

// Static word -> vector table. OOV lookups fall back to deterministic
// pseudo-random vectors seeded by FNV-1a of the word and scaled to the
// table's per-dimension standard deviation, so an unseen word always maps to
// the same vector on every platform.
class EmbeddingTable {
 public:
  // File format: one entry per line, "word v1 v2 ... v_dim"; dim is inferred
  // from the first line. Throws DimensionMismatch(line) / EmptyTable.
  static EmbeddingTable load(const std::string& path);
  static EmbeddingTable from_map(
      const std::map<std::string, std::vector<double>>& table);

  int dim() const { return dim_; }
  size_t size() const { return table_.size(); }
  bool contains(const std::string& word) const {
    return table_.count(word) > 0;
  }

  // Table row for in-vocabulary words, seeded pseudo-random vector otherwise.
  std::vector<double> vector_for(const std::string& word) const;

  // One row per WORD token (PUNCT skipped). OOV words are logged via the
  // optional counter, never an error.
  std::vector<std::vector<double>> lookup_utterance(
      const std::vector<Token>& tokens, size_t* oov_count = nullptr) const;

  const std::vector<double>& per_dim_std() const { return per_dim_std_; }

 private:
  void compute_stats();

  int dim_ = 0;
  std::map<std::string, std::vector<double>> table_;
  std::vector<double> per_dim_std_;
};

// Precomputed per-utterance contextual vectors, stored as a .fmat file named
// "<utt_id>.emb" with one row per WORD token.
struct ContextualEmbeddings {
  std::string utt_id;
  std::vector<std::vector<double>> vectors;
};

ContextualEmbeddings load_contextual(const std::string& path,
                                     const std::string& utt_id);

// Validates the row count against the utterance's WORD-token count; throws
// DimensionMismatch on disagreement.
void check_contextual(const ContextualEmbeddings& emb, size_t word_count);

}  // namespace mftts

#endif  // MFTTS_EMBEDSTORE_HPP_
