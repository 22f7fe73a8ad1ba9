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

#include "mftts/embedstore.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "mftts/error.hpp"
#include "mftts/rng.hpp"

namespace mftts {

EmbeddingTable EmbeddingTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open embeddings: " + path);
  std::map<std::string, std::vector<double>> table;
  std::string line;
  size_t lineno = 0;
  int dim = -1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream iss(line);
    std::string word;
    iss >> word;
    std::vector<double> vec;
    double v;
    while (iss >> v) vec.push_back(v);
    if (vec.empty()) {
      throw Error(ErrorCode::DimensionMismatch,
                  "no values on line " + std::to_string(lineno));
    }
    if (dim < 0) {
      dim = int(vec.size());
    } else if (int(vec.size()) != dim) {
      throw Error(ErrorCode::DimensionMismatch,
                  "dimension mismatch on line " + std::to_string(lineno) +
                      ": expected " + std::to_string(dim) + ", got " +
                      std::to_string(vec.size()));
    }
    std::string lowered;
    for (char c : word) {
      lowered.push_back(char(std::tolower(static_cast<unsigned char>(c))));
    }
    table[lowered] = std::move(vec);
  }
  if (table.empty()) throw Error(ErrorCode::EmptyTable, "empty table: " + path);
  return from_map(table);
}

EmbeddingTable EmbeddingTable::from_map(
    const std::map<std::string, std::vector<double>>& table) {
  if (table.empty()) throw Error(ErrorCode::EmptyTable, "empty table");
  EmbeddingTable t;
  t.dim_ = int(table.begin()->second.size());
  for (const auto& [word, vec] : table) {
    if (int(vec.size()) != t.dim_) {
      throw Error(ErrorCode::DimensionMismatch,
                  "dimension mismatch for word: " + word);
    }
  }
  t.table_ = table;
  t.compute_stats();
  return t;
}

void EmbeddingTable::compute_stats() {
  per_dim_std_.assign(size_t(dim_), 0.0);
  std::vector<double> mean(size_t(dim_), 0.0);
  for (const auto& [word, vec] : table_) {
    (void)word;
    for (int d = 0; d < dim_; ++d) mean[size_t(d)] += vec[size_t(d)];
  }
  double n = double(table_.size());
  for (int d = 0; d < dim_; ++d) mean[size_t(d)] /= n;
  for (const auto& [word, vec] : table_) {
    (void)word;
    for (int d = 0; d < dim_; ++d) {
      double diff = vec[size_t(d)] - mean[size_t(d)];
      per_dim_std_[size_t(d)] += diff * diff;
    }
  }
  for (int d = 0; d < dim_; ++d) {
    per_dim_std_[size_t(d)] = std::sqrt(per_dim_std_[size_t(d)] / n);
  }
}

std::vector<double> EmbeddingTable::vector_for(const std::string& word) const {
  auto it = table_.find(word);
  if (it != table_.end()) return it->second;
  Rng rng(fnv1a64(word));
  std::vector<double> vec(size_t(dim_));
  for (int d = 0; d < dim_; ++d) {
    vec[size_t(d)] = rng.normal() * per_dim_std_[size_t(d)];
  }
  return vec;
}

std::vector<std::vector<double>> EmbeddingTable::lookup_utterance(
    const std::vector<Token>& tokens, size_t* oov_count) const {
  std::vector<std::vector<double>> rows;
  for (const Token& tok : tokens) {
    if (tok.kind != TokenKind::WORD) continue;
    if (!contains(tok.text) && oov_count) ++*oov_count;
    rows.push_back(vector_for(tok.text));
  }
  return rows;
}

ContextualEmbeddings load_contextual(const std::string& path,
                                     const std::string& utt_id) {
  FeatureMatrix m = read_fmat(path);
  ContextualEmbeddings emb;
  emb.utt_id = utt_id;
  emb.vectors.resize(m.rows);
  for (uint32_t r = 0; r < m.rows; ++r) {
    emb.vectors[r].resize(m.cols);
    for (uint32_t c = 0; c < m.cols; ++c) {
      emb.vectors[r][c] = double(m.at(r, c));
    }
  }
  return emb;
}

void check_contextual(const ContextualEmbeddings& emb, size_t word_count) {
  if (emb.vectors.size() != word_count) {
    throw Error(ErrorCode::DimensionMismatch,
                "contextual embeddings for " + emb.utt_id + " have " +
                    std::to_string(emb.vectors.size()) + " rows but the " +
                    "utterance has " + std::to_string(word_count) + " words");
  }
}

}  // namespace mftts
