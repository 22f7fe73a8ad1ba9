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

#ifndef MFTTS_TEXTFRONT_HPP_
#define MFTTS_TEXTFRONT_HPP_

#include <map>
#include <string>
#include <vector>

namespace mftts {

// Reserved phone symbols. SIL is the pause inserted for punctuation, EOS
// terminates every utterance.
extern const char* kSilSymbol;  // "SIL"
extern const char* kEosSymbol;  // "EOS"

enum class TokenKind { WORD, PUNCT };

struct Token {
  std::string text;  // lowercase; WORD matches [a-z']+, PUNCT is one char
  TokenKind kind = TokenKind::WORD;

  bool operator==(const Token& o) const {
    return text == o.text && kind == o.kind;
  }
};

enum class OovPolicy { FAIL, SPELL };

// Pronunciation lexicon. Entries map lowercase words to phone symbol lists;
// the inventory is the full ordered phone set (SIL and EOS first, then the
// remaining symbols sorted), which doubles as the embedding vocabulary.
class Lexicon {
 public:
  // CMU-dictionary-style file: "WORD  PH1 PH2 ...", ";;;" comment lines
  // ignored, stress digits stripped from phone symbols.
  static Lexicon load(const std::string& path);
  static Lexicon from_entries(
      const std::map<std::string, std::vector<std::string>>& entries);

  bool contains(const std::string& word) const {
    return entries_.count(word) > 0;
  }
  const std::vector<std::string>& pronunciation(const std::string& word) const;

  const std::vector<std::string>& inventory() const { return inventory_; }
  int phone_id(const std::string& symbol) const;  // IndexError if unknown
  const std::string& phone_symbol(int id) const;

  int sil_id() const { return sil_id_; }
  int eos_id() const { return eos_id_; }
  size_t size() const { return entries_.size(); }

 private:
  void build_inventory();

  std::map<std::string, std::vector<std::string>> entries_;
  std::vector<std::string> inventory_;
  std::map<std::string, int> phone_ids_;
  int sil_id_ = 0;
  int eos_id_ = 1;
};

// Phones of one utterance plus the word<->phone alignment. word_index[t] is
// the WORD-token index that produced phone t, or -1 for SIL/EOS.
struct PhoneSequence {
  std::vector<int> phones;
  std::vector<int> word_index;

  size_t length() const { return phones.size(); }
  // Number of distinct non-negative word_index values.
  int word_count() const;
};

// Splits normalized text into lowercase WORD/PUNCT tokens. Throws
// InvalidCharacter (naming the byte position) for anything outside letters,
// apostrophe, the accepted punctuation set and whitespace.
std::vector<Token> tokenize(const std::string& text);

// Maps tokens to a PhoneSequence: lexicon phones per WORD, one SIL per pause
// punctuation {. , ; : ! ?}, then a final EOS. Other PUNCT is dropped.
// OOV words throw OovWord under FAIL or are spelled letter-by-letter under
// SPELL.
PhoneSequence to_phones(const std::vector<Token>& tokens,
                        const Lexicon& lexicon,
                        OovPolicy policy = OovPolicy::FAIL);

// Letter-name pronunciations backing OovPolicy::SPELL ('a' -> EY, ...).
const std::map<char, std::vector<std::string>>& spell_table();

bool is_pause_punct(char c);

// Manifest helpers: one utterance per line, "<utt_id>\t<payload>".
std::vector<std::pair<std::string, std::string>> read_manifest(
    const std::string& path);

}  // namespace mftts

#endif  // MFTTS_TEXTFRONT_HPP_
