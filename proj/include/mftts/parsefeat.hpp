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

#ifndef MFTTS_PARSEFEAT_HPP_
#define MFTTS_PARSEFEAT_HPP_

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "mftts/textfront.hpp"

namespace mftts {

// Constituency tree node. Internal nodes have children and no leaf text;
// leaves carry a POS label and the word.
struct ParseTree {
  std::string label;
  std::vector<std::unique_ptr<ParseTree>> children;
  std::string leaf_text;

  bool is_leaf() const { return children.empty(); }
  std::vector<const ParseTree*> leaves() const;
};

// Phrase label inventory for the one-hot component, OTHER as fallback.
constexpr int kPhraseTypeCount = 8;
extern const std::array<const char*, kPhraseTypeCount> kPhraseTypes;
// {NP, VP, PP, ADJP, ADVP, S, SBAR, OTHER}
int phrase_type_index(const std::string& stripped_label);  // -1 if not listed
std::string strip_function_tags(const std::string& label);

// Per-word parse features: 8-dim phrase-type one-hot, begin/end border
// flags, and the relative position of the word inside its enclosing phrase.
struct WordParseFeatures {
  int phrase_type = kPhraseTypeCount - 1;  // index into kPhraseTypes
  bool begin = false;
  bool end = false;
  double rel_pos = 0.5;

  static constexpr int kDim = kPhraseTypeCount + 3;  // 11
  std::array<double, kDim> to_vector() const;
};

// Parses one bracketed tree. A ROOT wrapper (label "ROOT" or empty, single
// child) is removed and -NONE- trace leaves are deleted. Throws
// MalformedTree with a character offset for unbalanced or empty input.
std::unique_ptr<ParseTree> read_ptb(const std::string& text);

// One feature row per leaf, in leaf order. The enclosing phrase of a leaf is
// its lowest ancestor whose stripped label is in the inventory; with none,
// phrase_type is OTHER and the root encloses it.
std::vector<WordParseFeatures> extract_features(const ParseTree& tree);

// Reconciles parser leaves with front-end tokens: PUNCT tokens and
// punctuation-only leaves are dropped, the rest must match word-for-word
// after lowercasing. Throws TokenizationMismatch naming the first divergent
// pair. Returns features reindexed to WORD-token order.
std::vector<WordParseFeatures> align_to_tokens(
    const std::vector<WordParseFeatures>& features,
    const std::vector<std::string>& tree_leaves,
    const std::vector<Token>& tokens);

}  // namespace mftts

#endif  // MFTTS_PARSEFEAT_HPP_
