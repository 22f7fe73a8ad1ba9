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

#include "mftts/parsefeat.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "mftts/error.hpp"

namespace mftts {

const std::array<const char*, kPhraseTypeCount> kPhraseTypes = {
    "NP", "VP", "PP", "ADJP", "ADVP", "S", "SBAR", "OTHER"};

std::string strip_function_tags(const std::string& label) {
  // "NP-SBJ-1" -> "NP", "S=2" -> "S". Labels that start with '-' (e.g.
  // -NONE-, -LRB-) are left alone.
  if (label.empty() || label[0] == '-') return label;
  size_t cut = label.find_first_of("-=");
  return cut == std::string::npos ? label : label.substr(0, cut);
}

int phrase_type_index(const std::string& stripped_label) {
  for (int i = 0; i < kPhraseTypeCount - 1; ++i) {
    if (stripped_label == kPhraseTypes[size_t(i)]) return i;
  }
  return -1;
}

std::array<double, WordParseFeatures::kDim> WordParseFeatures::to_vector()
    const {
  std::array<double, kDim> v{};
  v[size_t(phrase_type)] = 1.0;
  v[kPhraseTypeCount] = begin ? 1.0 : 0.0;
  v[kPhraseTypeCount + 1] = end ? 1.0 : 0.0;
  v[kPhraseTypeCount + 2] = rel_pos;
  return v;
}

std::vector<const ParseTree*> ParseTree::leaves() const {
  std::vector<const ParseTree*> out;
  std::function<void(const ParseTree&)> walk = [&](const ParseTree& node) {
    if (node.is_leaf()) {
      out.push_back(&node);
      return;
    }
    for (const auto& child : node.children) walk(*child);
  };
  walk(*this);
  return out;
}

namespace {

struct PtbParser {
  const std::string& text;
  size_t pos = 0;

  explicit PtbParser(const std::string& t) : text(t) {}

  [[noreturn]] void fail(const std::string& what) {
    throw Error(ErrorCode::MalformedTree,
                what + " at offset " + std::to_string(pos));
  }

  void skip_space() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
  }

  std::string read_atom() {
    size_t start = pos;
    while (pos < text.size() && text[pos] != '(' && text[pos] != ')' &&
           !std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
    return text.substr(start, pos - start);
  }

  std::unique_ptr<ParseTree> parse_node() {
    skip_space();
    if (pos >= text.size() || text[pos] != '(') fail("expected '('");
    ++pos;
    skip_space();
    auto node = std::make_unique<ParseTree>();
    node->label = read_atom();  // may be empty for "( (S ...))" wrappers
    skip_space();
    if (pos >= text.size()) fail("unbalanced parentheses");
    if (text[pos] == ')') fail("empty node");

    if (text[pos] != '(') {
      // leaf: (TAG word)
      node->leaf_text = read_atom();
      if (node->leaf_text.empty()) fail("empty leaf");
      if (node->label.empty()) fail("leaf without POS label");
      skip_space();
      if (pos >= text.size() || text[pos] != ')') fail("expected ')'");
      ++pos;
      return node;
    }
    while (true) {
      skip_space();
      if (pos >= text.size()) fail("unbalanced parentheses");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (text[pos] != '(') fail("mixed leaf and subtree children");
      node->children.push_back(parse_node());
    }
    if (node->children.empty()) fail("empty node");
    return node;
  }
};

// Removes -NONE- traces and any internal node left without children.
// Returns nullptr if the whole subtree vanishes.
std::unique_ptr<ParseTree> prune_traces(std::unique_ptr<ParseTree> node) {
  if (node->is_leaf()) {
    if (node->label == "-NONE-") return nullptr;
    return node;
  }
  std::vector<std::unique_ptr<ParseTree>> kept;
  for (auto& child : node->children) {
    auto pruned = prune_traces(std::move(child));
    if (pruned) kept.push_back(std::move(pruned));
  }
  if (kept.empty()) return nullptr;
  node->children = std::move(kept);
  return node;
}

bool is_punct_only_leaf(const std::string& text_lower) {
  if (text_lower == "-lrb-" || text_lower == "-rrb-" ||
      text_lower == "-lcb-" || text_lower == "-rcb-") {
    return true;
  }
  for (char c : text_lower) {
    if (std::isalnum(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::string lower_copy(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

}  // namespace

std::unique_ptr<ParseTree> read_ptb(const std::string& text) {
  PtbParser parser(text);
  auto root = parser.parse_node();
  parser.skip_space();
  if (parser.pos != text.size()) parser.fail("trailing input after tree");

  if ((root->label == "ROOT" || root->label.empty()) &&
      root->children.size() == 1) {
    root = std::move(root->children[0]);
  }
  root = prune_traces(std::move(root));
  if (!root) {
    throw Error(ErrorCode::MalformedTree, "tree has no leaves at offset 0");
  }
  return root;
}

std::vector<WordParseFeatures> extract_features(const ParseTree& tree) {
  auto all_leaves = tree.leaves();
  if (all_leaves.empty()) {
    throw Error(ErrorCode::MalformedTree, "tree has no leaves at offset 0");
  }

  // For every leaf, find the lowest ancestor whose stripped label is in the
  // phrase inventory; the root encloses leaves with no such ancestor.
  std::vector<WordParseFeatures> out(all_leaves.size());
  std::vector<const ParseTree*> path;
  size_t leaf_counter = 0;

  std::function<void(const ParseTree&)> walk = [&](const ParseTree& node) {
    if (node.is_leaf()) {
      const ParseTree* enclosing = &tree;
      int type_index = phrase_type_index(strip_function_tags(tree.label));
      int found = -1;
      for (size_t i = path.size(); i-- > 0;) {
        int idx = phrase_type_index(strip_function_tags(path[i]->label));
        if (idx >= 0) {
          enclosing = path[i];
          found = idx;
          break;
        }
      }
      WordParseFeatures& f = out[leaf_counter];
      if (found >= 0) {
        f.phrase_type = found;
      } else {
        f.phrase_type = kPhraseTypeCount - 1;  // OTHER
        enclosing = &tree;
        (void)type_index;
      }
      // position of this leaf inside the enclosing phrase
      auto phrase_leaves = enclosing->leaves();
      size_t local = 0;
      for (; local < phrase_leaves.size(); ++local) {
        if (phrase_leaves[local] == &node) break;
      }
      size_t L = phrase_leaves.size();
      f.begin = (local == 0);
      f.end = (local == L - 1);
      f.rel_pos = (double(local) + 0.5) / double(L);
      ++leaf_counter;
      return;
    }
    path.push_back(&node);
    for (const auto& child : node.children) walk(*child);
    path.pop_back();
  };
  walk(tree);
  return out;
}

std::vector<WordParseFeatures> align_to_tokens(
    const std::vector<WordParseFeatures>& features,
    const std::vector<std::string>& tree_leaves,
    const std::vector<Token>& tokens) {
  if (features.size() != tree_leaves.size()) {
    throw Error(ErrorCode::ShapeError,
                "feature count does not match leaf count");
  }
  std::vector<std::pair<std::string, size_t>> words_from_tree;
  for (size_t i = 0; i < tree_leaves.size(); ++i) {
    std::string low = lower_copy(tree_leaves[i]);
    if (!is_punct_only_leaf(low)) words_from_tree.emplace_back(low, i);
  }
  std::vector<std::string> words_from_tokens;
  for (const Token& t : tokens) {
    if (t.kind == TokenKind::WORD) words_from_tokens.push_back(t.text);
  }

  size_t n = std::min(words_from_tree.size(), words_from_tokens.size());
  for (size_t i = 0; i < n; ++i) {
    if (words_from_tree[i].first != words_from_tokens[i]) {
      throw Error(ErrorCode::TokenizationMismatch,
                  "leaf '" + words_from_tree[i].first + "' != token '" +
                      words_from_tokens[i] + "' at word " + std::to_string(i));
    }
  }
  if (words_from_tree.size() != words_from_tokens.size()) {
    throw Error(
        ErrorCode::TokenizationMismatch,
        "tree has " + std::to_string(words_from_tree.size()) +
            " words but tokens have " + std::to_string(words_from_tokens.size()));
  }

  std::vector<WordParseFeatures> out;
  out.reserve(words_from_tree.size());
  for (const auto& [word, leaf_index] : words_from_tree) {
    (void)word;
    out.push_back(features[leaf_index]);
  }
  return out;
}

}  // namespace mftts
