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

#include "mftts/textfront.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "mftts/error.hpp"

namespace mftts {

const char* kSilSymbol = "SIL";
const char* kEosSymbol = "EOS";

namespace {

const std::string kPunctChars = ".,;:!?\"()-";

bool is_word_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '\'';
}

bool is_punct_char(char c) {
  return kPunctChars.find(c) != std::string::npos;
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

// "AE1" -> "AE"; keeps non-digit symbols untouched.
std::string strip_stress(const std::string& phone) {
  std::string out;
  for (char c : phone) {
    if (!std::isdigit(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

}  // namespace

bool is_pause_punct(char c) {
  return c == '.' || c == ',' || c == ';' || c == ':' || c == '!' || c == '?';
}

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> tokens;
  std::string word;
  auto flush_word = [&]() {
    if (!word.empty()) {
      tokens.push_back({lower(word), TokenKind::WORD});
      word.clear();
    }
  };
  for (size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (is_word_char(c)) {
      word.push_back(c);
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      flush_word();
    } else if (is_punct_char(c)) {
      flush_word();
      tokens.push_back({std::string(1, c), TokenKind::PUNCT});
    } else {
      throw Error(ErrorCode::InvalidCharacter,
                  "unexpected character '" + std::string(1, c) +
                      "' at position " + std::to_string(i));
    }
  }
  flush_word();
  return tokens;
}

const std::map<char, std::vector<std::string>>& spell_table() {
  // English letter names in stress-free ARPAbet.
  static const std::map<char, std::vector<std::string>> table = {
      {'a', {"EY"}},
      {'b', {"B", "IY"}},
      {'c', {"S", "IY"}},
      {'d', {"D", "IY"}},
      {'e', {"IY"}},
      {'f', {"EH", "F"}},
      {'g', {"JH", "IY"}},
      {'h', {"EY", "CH"}},
      {'i', {"AY"}},
      {'j', {"JH", "EY"}},
      {'k', {"K", "EY"}},
      {'l', {"EH", "L"}},
      {'m', {"EH", "M"}},
      {'n', {"EH", "N"}},
      {'o', {"OW"}},
      {'p', {"P", "IY"}},
      {'q', {"K", "Y", "UW"}},
      {'r', {"AA", "R"}},
      {'s', {"EH", "S"}},
      {'t', {"T", "IY"}},
      {'u', {"Y", "UW"}},
      {'v', {"V", "IY"}},
      {'w', {"D", "AH", "B", "AH", "L", "Y", "UW"}},
      {'x', {"EH", "K", "S"}},
      {'y', {"W", "AY"}},
      {'z', {"Z", "IY"}},
  };
  return table;
}

Lexicon Lexicon::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open lexicon: " + path);
  std::map<std::string, std::vector<std::string>> entries;
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind(";;;", 0) == 0) continue;
    std::istringstream iss(line);
    std::string word;
    if (!(iss >> word)) continue;  // blank line
    std::vector<std::string> phones;
    std::string ph;
    while (iss >> ph) phones.push_back(strip_stress(ph));
    if (phones.empty()) {
      throw Error(ErrorCode::CorruptFile,
                  "lexicon entry without phones: " + word + " in " + path);
    }
    entries[lower(word)] = phones;
  }
  return from_entries(entries);
}

Lexicon Lexicon::from_entries(
    const std::map<std::string, std::vector<std::string>>& entries) {
  Lexicon lex;
  lex.entries_ = entries;
  lex.build_inventory();
  return lex;
}

void Lexicon::build_inventory() {
  std::set<std::string> symbols;
  for (const auto& [word, phones] : entries_) {
    (void)word;
    for (const auto& p : phones) symbols.insert(p);
  }
  // SPELL fallbacks must always be representable, so their phones are part
  // of every inventory regardless of lexicon content.
  for (const auto& [letter, phones] : spell_table()) {
    (void)letter;
    for (const auto& p : phones) symbols.insert(p);
  }
  symbols.erase(kSilSymbol);
  symbols.erase(kEosSymbol);

  inventory_.clear();
  inventory_.push_back(kSilSymbol);
  inventory_.push_back(kEosSymbol);
  inventory_.insert(inventory_.end(), symbols.begin(), symbols.end());
  phone_ids_.clear();
  for (size_t i = 0; i < inventory_.size(); ++i) {
    phone_ids_[inventory_[i]] = int(i);
  }
  sil_id_ = phone_ids_[kSilSymbol];
  eos_id_ = phone_ids_[kEosSymbol];
}

const std::vector<std::string>& Lexicon::pronunciation(
    const std::string& word) const {
  auto it = entries_.find(word);
  if (it == entries_.end()) {
    throw Error(ErrorCode::OovWord, "word not in lexicon: " + word);
  }
  return it->second;
}

int Lexicon::phone_id(const std::string& symbol) const {
  auto it = phone_ids_.find(symbol);
  if (it == phone_ids_.end()) {
    throw Error(ErrorCode::IndexError, "phone not in inventory: " + symbol);
  }
  return it->second;
}

const std::string& Lexicon::phone_symbol(int id) const {
  if (id < 0 || size_t(id) >= inventory_.size()) {
    throw Error(ErrorCode::IndexError,
                "phone id out of range: " + std::to_string(id));
  }
  return inventory_[size_t(id)];
}

int PhoneSequence::word_count() const {
  int max_index = -1;
  for (int wi : word_index) max_index = std::max(max_index, wi);
  return max_index + 1;
}

PhoneSequence to_phones(const std::vector<Token>& tokens,
                        const Lexicon& lexicon, OovPolicy policy) {
  PhoneSequence seq;
  int word_token_index = -1;
  for (const Token& tok : tokens) {
    if (tok.kind == TokenKind::WORD) {
      ++word_token_index;
      std::vector<std::string> phones;
      if (lexicon.contains(tok.text)) {
        phones = lexicon.pronunciation(tok.text);
      } else if (policy == OovPolicy::SPELL) {
        for (char c : tok.text) {
          auto it = spell_table().find(c);
          if (it == spell_table().end()) continue;  // apostrophes
          phones.insert(phones.end(), it->second.begin(), it->second.end());
        }
        if (phones.empty()) {
          throw Error(ErrorCode::OovWord,
                      "cannot spell out word: " + tok.text);
        }
      } else {
        throw Error(ErrorCode::OovWord, "word not in lexicon: " + tok.text);
      }
      for (const auto& p : phones) {
        seq.phones.push_back(lexicon.phone_id(p));
        seq.word_index.push_back(word_token_index);
      }
    } else if (tok.text.size() == 1 && is_pause_punct(tok.text[0])) {
      seq.phones.push_back(lexicon.sil_id());
      seq.word_index.push_back(-1);
    }
    // quotes, parens and dashes contribute nothing
  }
  seq.phones.push_back(lexicon.eos_id());
  seq.word_index.push_back(-1);
  return seq;
}

std::vector<std::pair<std::string, std::string>> read_manifest(
    const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open manifest: " + path);
  std::vector<std::pair<std::string, std::string>> out;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    size_t tab = line.find('\t');
    if (tab == std::string::npos) {
      throw Error(ErrorCode::CorruptFile,
                  "manifest line " + std::to_string(lineno) +
                      " has no tab separator in " + path);
    }
    out.emplace_back(line.substr(0, tab), line.substr(tab + 1));
  }
  return out;
}

}  // namespace mftts
