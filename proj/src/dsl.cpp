#include "selfsim/dsl.hpp"

#include <algorithm>
#include <cctype>

#include "selfsim/series_io.hpp"

namespace selfsim::dsl {

const std::vector<std::string>& commands() {
  static const std::vector<std::string> names = {
      "portrait", "act",  "state",   "order",     "zeta",      "closure", "present", "peel",
      "reduce",   "conjugate", "represent", "verify", "assert", "restrict", "level", "print"};
  return names;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, int line) : s_(text), line_(line) {}

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(Errc::Syntax, "line " + std::to_string(line_) + ", column " + std::to_string(pos_ + 1) + ": " + msg);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip();
    return pos_ >= s_.size();
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

  std::string ident() {
    if (!ident_start(peek())) fail("expected a name");
    std::size_t b = pos_;
    while (pos_ < s_.size() && ident_char(s_[pos_])) ++pos_;
    return std::string(s_.substr(b, pos_ - b));
  }

  long long integer() {
    skip();
    std::size_t b = pos_;
    if (pos_ < s_.size() && s_[pos_] == '-') ++pos_;
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected an integer");
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    try {
      return std::stoll(std::string(s_.substr(b, pos_ - b)));
    } catch (const std::out_of_range&) {
      pos_ = b;
      fail("integer out of range");
    }
  }

  std::string quoted() {
    expect('"');
    std::size_t b = pos_;
    while (pos_ < s_.size() && s_[pos_] != '"') ++pos_;
    if (pos_ >= s_.size()) fail("unterminated string");
    std::string out(s_.substr(b, pos_ - b));
    ++pos_;
    return out;
  }

  std::vector<adic::BigInt> series_in_braces() {
    expect('{');
    std::size_t b = pos_;
    while (pos_ < s_.size() && s_[pos_] != '}') ++pos_;
    if (pos_ >= s_.size()) fail("unterminated '{'");
    const std::size_t col = b;
    std::string body(s_.substr(b, pos_ - b));
    ++pos_;
    try {
      return adic::parse_series_literal(body);
    } catch (const Error& e) {
      pos_ = col;
      fail(std::string("bad series: ") + e.what());
    }
  }

  Word word() {
    Word w = factor();
    while (accept('*')) {
      Word r = factor();
      Word m;
      m.kind = Word::Kind::Mul;
      m.args = {std::move(w), std::move(r)};
      w = std::move(m);
    }
    return w;
  }

  Word factor() {
    Word w;
    if (accept('[')) {
      w = word();
      expect(']');
    } else {
      std::string n = ident();
      if (n != "e") {
        w.kind = Word::Kind::Gen;
        w.name = std::move(n);
      }
    }
    while (true) {
      if (peek() == '^') {
        ++pos_;
        Word p;
        p.args = {std::move(w)};
        if (peek() == '{') {
          p.kind = Word::Kind::Pow;
          p.exponent = series_in_braces();
        } else {
          long long k = integer();
          if (k == -1) {
            p.kind = Word::Kind::Inv;
          } else {
            p.kind = Word::Kind::Pow;
            p.exponent = {adic::BigInt(k)};
          }
        }
        w = std::move(p);
      } else if (peek() == '@') {
        ++pos_;
        long long k = integer();
        if (k < 0 || k > 1000000) fail("shift must lie in [0, 10^6]");
        Word d;
        d.kind = Word::Kind::Diag;
        d.shift = static_cast<int>(k);
        d.args = {std::move(w)};
        w = std::move(d);
      } else {
        return w;
      }
    }
  }

  std::vector<int> cycle() {
    expect('(');
    std::vector<int> c;
    while (!accept(')')) {
      long long v = integer();
      if (v < 1 || v > 65535) fail("point out of range");
      c.push_back(static_cast<int>(v));
      accept(',');
    }
    return c;
  }

  Statement statement() {
    Statement st;
    st.line = line_;
    std::string kw = ident();
    if (kw == "context") {
      st.kind = Statement::Kind::Context;
      while (!at_end()) {
        std::string k = ident();
        if (k != "m" && k != "K" && k != "D" && k != "L") fail("unknown context key '" + k + "'");
        expect('=');
        st.settings.emplace_back(k, integer());
      }
    } else if (kw == "gen") {
      st.kind = Statement::Kind::Gen;
      st.name = ident();
      if (st.name == "e") fail("'e' is reserved for the identity");
      expect('=');
      // an entry tuple starts with a word; a cycle starts with a digit or ')'
      skip();
      std::size_t save = pos_;
      if (accept('(')) {
        char c = peek();
        pos_ = save;
        if (c != ')' && !std::isdigit(static_cast<unsigned char>(c))) {
          expect('(');
          st.has_entries = true;
          do {
            st.entries.push_back(word());
          } while (accept(','));
          expect(')');
        }
      }
      while (!at_end()) st.cycles.push_back(cycle());
    } else if (kw == "let") {
      st.kind = Statement::Kind::Let;
      st.name = ident();
      if (st.name == "e") fail("'e' is reserved for the identity");
      expect('=');
      st.word = word();
    } else {
      const auto& cmds = commands();
      if (std::find(cmds.begin(), cmds.end(), kw) == cmds.end()) {
        pos_ = 0;
        skip();
        fail("unknown statement '" + kw + "'");
      }
      st.kind = Statement::Kind::Command;
      st.name = kw;
      while (!at_end()) st.args.push_back(arg());
    }
    if (!at_end()) fail("unexpected trailing text");
    return st;
  }

  Arg arg() {
    Arg a;
    char c = peek();
    if (c == '"') {
      a.kind = Arg::Kind::String;
      a.text = quoted();
      return a;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') {
      a.kind = Arg::Kind::Int;
      a.integer = integer();
      return a;
    }
    // key=value lookahead
    if (ident_start(c)) {
      std::size_t save = pos_;
      std::string k = ident();
      if (peek() == '=') {
        ++pos_;
        a.key = k;
        if (peek() == '"') {
          a.kind = Arg::Kind::KeyString;
          a.text = quoted();
        } else {
          a.kind = Arg::Kind::KeyInt;
          a.integer = integer();
        }
        return a;
      }
      pos_ = save;
    }
    a.kind = Arg::Kind::Word;
    a.word = word();
    return a;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
  int line_;
};

std::string strip_comment(std::string_view line) {
  bool in_str = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"') in_str = !in_str;
    if (line[i] == '#' && !in_str) return std::string(line.substr(0, i));
  }
  return std::string(line);
}

std::string atom(const Word& w) { return w.kind == Word::Kind::Mul ? "[" + print(w) + "]" : print(w); }

}  // namespace

Script parse(std::string_view text) {
  Script s;
  int line = 0;
  std::size_t b = 0;
  while (b <= text.size()) {
    std::size_t e = text.find('\n', b);
    if (e == std::string_view::npos) e = text.size();
    ++line;
    std::string body = strip_comment(text.substr(b, e - b));
    Parser p(body, line);
    if (!p.at_end()) s.statements.push_back(p.statement());
    b = e + 1;
  }
  return s;
}

Word parse_word(std::string_view text) {
  Parser p(text, 1);
  Word w = p.word();
  if (!p.at_end()) p.fail("unexpected trailing text");
  return w;
}

std::string print(const Word& w) {
  switch (w.kind) {
    case Word::Kind::Identity: return "e";
    case Word::Kind::Gen: return w.name;
    case Word::Kind::Inv: return atom(w.args[0]) + "^-1";
    case Word::Kind::Pow: return atom(w.args[0]) + "^{" + adic::format_integer_series(w.exponent) + "}";
    case Word::Kind::Diag: return atom(w.args[0]) + "@" + std::to_string(w.shift);
    case Word::Kind::Mul: return print(w.args[0]) + "*" + atom(w.args[1]);
  }
  return {};
}

std::string print(const Statement& s) {
  std::string out;
  switch (s.kind) {
    case Statement::Kind::Context:
      out = "context";
      for (const auto& [k, v] : s.settings) out += " " + k + "=" + std::to_string(v);
      return out;
    case Statement::Kind::Gen:
      out = "gen " + s.name + " =";
      if (s.has_entries) {
        out += " (";
        for (std::size_t i = 0; i < s.entries.size(); ++i) out += (i ? ", " : "") + print(s.entries[i]);
        out += ")";
      }
      for (const auto& c : s.cycles) {
        out += " (";
        for (std::size_t i = 0; i < c.size(); ++i) out += (i ? " " : "") + std::to_string(c[i]);
        out += ")";
      }
      return out;
    case Statement::Kind::Let: return "let " + s.name + " = " + print(s.word);
    case Statement::Kind::Command:
      out = s.name;
      for (const auto& a : s.args) {
        out += " ";
        switch (a.kind) {
          case Arg::Kind::Word: out += print(a.word); break;
          case Arg::Kind::Int: out += std::to_string(a.integer); break;
          case Arg::Kind::String: out += "\"" + a.text + "\""; break;
          case Arg::Kind::KeyInt: out += a.key + "=" + std::to_string(a.integer); break;
          case Arg::Kind::KeyString: out += a.key + "=\"" + a.text + "\""; break;
        }
      }
      return out;
  }
  return out;
}

std::string print(const Script& s) {
  std::string out;
  for (const auto& st : s.statements) out += print(st) + "\n";
  return out;
}

}  // namespace selfsim::dsl
