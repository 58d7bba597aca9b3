#pragma once

// The script language.
//
//   # comment
//   context m=2 K=8 D=8 L=8
//   gen a = (e, a) (1 2)
//   gen b = (e, b^{1+x}) (1 2)
//   gen s = (1 2 3)                  root only: all entries e
//   let k = a^{2-x}
//   portrait k L=4
//   assert identity k*k
//
// Words: atoms are e, a name, or [word]; postfix ^{series}, ^n, ^-n and @n
// (a^{q}@n is a^{q x^n}); factors are joined by '*'.  Command arguments are
// words, integers, "strings" and key=value pairs; a bare name is a word.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "selfsim/adic.hpp"

namespace selfsim::dsl {

struct Word {
  enum class Kind { Identity, Gen, Mul, Inv, Pow, Diag };
  Kind kind = Kind::Identity;
  std::string name;                  // Gen
  std::vector<adic::BigInt> exponent;  // Pow, integer coefficients by degree
  int shift = 0;                     // Diag
  std::vector<Word> args;            // operands

  friend bool operator==(const Word&, const Word&) = default;
};

struct Arg {
  enum class Kind { Word, Int, String, KeyInt, KeyString };
  Kind kind = Kind::Word;
  Word word;
  long long integer = 0;
  std::string text;  // String / KeyString value
  std::string key;

  /// A word that is a single bare name.
  bool is_name() const { return kind == Kind::Word && word.kind == Word::Kind::Gen; }
  friend bool operator==(const Arg&, const Arg&) = default;
};

struct Statement {
  enum class Kind { Context, Gen, Let, Command };
  Kind kind = Kind::Command;
  int line = 0;
  std::string name;  // Gen/Let target, or the command keyword
  std::vector<std::pair<std::string, long long>> settings;  // Context
  bool has_entries = false;                                 // Gen
  std::vector<Word> entries;                                // Gen
  std::vector<std::vector<int>> cycles;                     // Gen
  Word word;                                                // Let
  std::vector<Arg> args;                                    // Command

  friend bool operator==(const Statement& a, const Statement& b) {
    return a.kind == b.kind && a.name == b.name && a.settings == b.settings && a.has_entries == b.has_entries &&
           a.entries == b.entries && a.cycles == b.cycles && a.word == b.word && a.args == b.args;
  }
};

struct Script {
  std::vector<Statement> statements;
  friend bool operator==(const Script&, const Script&) = default;
};

/// Known command keywords.
const std::vector<std::string>& commands();

/// Throws Error(Syntax) with "line L, column C: ..." messages.
Script parse(std::string_view text);
Word parse_word(std::string_view text);

std::string print(const Word& w);
std::string print(const Statement& s);
std::string print(const Script& s);

}  // namespace selfsim::dsl
