#include "selfsim/session.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "selfsim/closure.hpp"
#include "selfsim/conjugator.hpp"
#include "selfsim/level_perm.hpp"
#include "selfsim/machine.hpp"
#include "selfsim/portrait.hpp"
#include "selfsim/presentation.hpp"
#include "selfsim/quotient.hpp"
#include "selfsim/series_io.hpp"
#include "selfsim/suites.hpp"

namespace selfsim::cli {

using adic::BigInt;
using nlohmann::json;
using tree::AutExpr;
using tree::Element;

int exit_code_for(const Error& e) {
  switch (e.category()) {
    case ErrorCategory::Parse:
      return kParseError;
    case ErrorCategory::Context:
      return kContextError;
    case ErrorCategory::Math:
      return kMathError;
  }
  return kMathError;
}

namespace {

constexpr int kMaxDegree = 4096;

void validate(const adic::Truncation& t, int L) {
  if (t.m < 2 || t.m > kMaxDegree) throw Error(Errc::InvalidContext, "m must lie in 2.." + std::to_string(kMaxDegree));
  if (L < 1) throw Error(Errc::InvalidContext, "L must be positive");
  if (t.K < L) throw Error(Errc::InvalidContext, "K must be at least L");
  if (t.D < L) throw Error(Errc::InvalidContext, "D must be at least L");
}

// Positional and key=value views of a command's arguments.
struct Args {
  const dsl::Statement& s;

  std::vector<const dsl::Arg*> positional() const {
    std::vector<const dsl::Arg*> out;
    for (const auto& a : s.args) {
      if (a.kind != dsl::Arg::Kind::KeyInt && a.kind != dsl::Arg::Kind::KeyString) out.push_back(&a);
    }
    return out;
  }
  const dsl::Arg* key(const std::string& k) const {
    for (const auto& a : s.args) {
      if ((a.kind == dsl::Arg::Kind::KeyInt || a.kind == dsl::Arg::Kind::KeyString) && a.key == k) return &a;
    }
    return nullptr;
  }
  long long int_key(const std::string& k, long long fallback) const {
    const auto* a = key(k);
    if (!a) return fallback;
    if (a->kind != dsl::Arg::Kind::KeyInt) throw Error(Errc::Syntax, k + "= expects an integer");
    return a->integer;
  }
  std::optional<std::string> string_key(const std::string& k) const {
    const auto* a = key(k);
    if (!a) return std::nullopt;
    if (a->kind == dsl::Arg::Kind::KeyString) return a->text;
    return std::to_string(a->integer);
  }
  void check_keys(std::initializer_list<const char*> allowed) const {
    for (const auto& a : s.args) {
      if (a.kind != dsl::Arg::Kind::KeyInt && a.kind != dsl::Arg::Kind::KeyString) continue;
      if (std::none_of(allowed.begin(), allowed.end(), [&](const char* k) { return a.key == k; })) {
        throw Error(Errc::Syntax, s.name + ": unknown option " + a.key + "=");
      }
    }
  }
};

const dsl::Word& word_arg(const dsl::Statement& s, const dsl::Arg* a) {
  if (!a || a->kind != dsl::Arg::Kind::Word) throw Error(Errc::Syntax, s.name + ": expected an expression");
  return a->word;
}

long long int_arg(const dsl::Statement& s, const dsl::Arg* a) {
  if (!a || a->kind != dsl::Arg::Kind::Int) throw Error(Errc::Syntax, s.name + ": expected an integer");
  return a->integer;
}

std::string string_arg(const dsl::Statement& s, const dsl::Arg* a) {
  if (!a || a->kind != dsl::Arg::Kind::String) throw Error(Errc::Syntax, s.name + ": expected a quoted string");
  return a->text;
}

std::vector<int> int_list(const std::string& text) {
  std::vector<int> out;
  std::string tok;
  std::istringstream in(text);
  while (in >> tok) {
    tok.erase(std::remove(tok.begin(), tok.end(), ','), tok.end());
    if (tok.empty()) continue;
    try {
      out.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw Error(Errc::Syntax, "expected integers, got '" + tok + "'");
    }
  }
  return out;
}

std::string portrait_text(const tree::Portrait& p) {
  std::ostringstream o;
  for (int l = 0; l < p.L; ++l) {
    o << "\n  level " << l << ":";
    const std::size_t n = tree::Portrait::level_offset(p.m, l + 1) - tree::Portrait::level_offset(p.m, l);
    for (std::size_t v = 0; v < n; ++v) o << ' ' << p.label(l, v).cycle_string();
  }
  return o.str();
}

std::string join(const std::vector<int>& v, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + std::to_string(v[i]);
  return out;
}

std::string coefficients_text(const adic::PowerSeries& s) {
  std::vector<BigInt> c;
  for (const auto& d : s.coefficients()) c.push_back(d.value());
  return adic::format_integer_series(c);
}

}  // namespace

Session::Session(Options opts, std::ostream& out) : opts_(std::move(opts)), out_(out) {
  if (opts_.m) t_.m = *opts_.m;
  if (opts_.K) t_.K = *opts_.K;
  if (opts_.D) t_.D = *opts_.D;
  if (opts_.L) L_ = *opts_.L;
  validate(t_, L_);
  sys_ = tree::GeneratorSystem(t_.m);
}

Session::~Session() = default;

int Session::run(const dsl::Script& script) {
  bool ok = true;
  for (const auto& s : script.statements) {
    try {
      switch (s.kind) {
        case dsl::Statement::Kind::Context:
          set_context(s);
          break;
        case dsl::Statement::Kind::Gen:
          define_gen(s);
          break;
        case dsl::Statement::Kind::Let:
          define_let(s);
          break;
        case dsl::Statement::Kind::Command:
          ok = command(s) && ok;
          break;
      }
    } catch (const Error& e) {
      throw Error(e.code(), "line " + std::to_string(s.line) + ": " + e.what());
    }
  }
  return ok ? kOk : kCheckFailed;
}

void Session::set_context(const dsl::Statement& s) {
  adic::Truncation t = t_;
  int L = L_;
  for (const auto& [key, value] : s.settings) {
    if (value < 0 || value > (1 << 20)) throw Error(Errc::InvalidContext, key + " out of range");
    const int v = static_cast<int>(value);
    if (key == "m") {
      if (!opts_.m) t.m = v;
    } else if (key == "K") {
      if (!opts_.K) t.K = v;
    } else if (key == "D") {
      if (!opts_.D) t.D = v;
    } else if (key == "L") {
      if (!opts_.L) L = v;
    } else {
      throw Error(Errc::InvalidContext, "unknown context key " + key);
    }
  }
  validate(t, L);
  if (frozen_ && !(t == t_ && L == L_)) {
    throw Error(Errc::InvalidContext, "context cannot change after generators are defined");
  }
  if (t.m != t_.m) sys_ = tree::GeneratorSystem(t.m);
  t_ = t;
  L_ = L;
  ev_.reset();
  forest_.reset();
}

AutExpr Session::expr(const dsl::Word& w) const {
  using K = dsl::Word::Kind;
  switch (w.kind) {
    case K::Identity:
      return AutExpr();
    case K::Gen: {
      auto it = lets_.find(w.name);
      if (it != lets_.end()) return it->second;
      return AutExpr::gen(w.name);
    }
    case K::Mul: {
      AutExpr out;
      for (const auto& a : w.args) out = out * expr(a);
      return out;
    }
    case K::Inv:
      return expr(w.args.at(0)).inverse();
    case K::Pow:
      return expr(w.args.at(0)).pow(adic::PowerSeries::from_integers(t_, w.exponent));
    case K::Diag:
      return expr(w.args.at(0)).diagonal(w.shift);
  }
  return AutExpr();
}

void Session::define_gen(const dsl::Statement& s) {
  if (s.name == "e" || lets_.count(s.name)) throw Error(Errc::UndefinedName, "name " + s.name + " is already taken");
  for (const auto& c : s.cycles) {
    for (int p : c) {
      if (p < 1 || p > t_.m) throw Error(Errc::Arity, "cycle point " + std::to_string(p) + " outside 1.." + std::to_string(t_.m));
    }
  }
  tree::WreathGenerator g{s.name, tree::Permutation::from_cycles(t_.m, s.cycles), {}};
  if (s.has_entries) {
    for (const auto& w : s.entries) g.entries.push_back(expr(w));
  } else {
    g.entries.assign(static_cast<std::size_t>(t_.m), AutExpr());
  }
  sys_.add(std::move(g));
  frozen_ = true;
  ev_.reset();
  forest_.reset();
}

void Session::define_let(const dsl::Statement& s) {
  if (s.name == "e" || lets_.count(s.name) || sys_.index_of(s.name)) {
    throw Error(Errc::UndefinedName, "name " + s.name + " is already taken");
  }
  AutExpr e = expr(s.word);
  std::vector<std::string> names;
  e.collect_names(names);
  for (const auto& n : names) {
    if (!sys_.index_of(n)) throw Error(Errc::UndefinedName, "undefined name " + n);
  }
  lets_.emplace(s.name, std::move(e));
}

tree::Evaluator& Session::evaluator() {
  if (!ev_) {
    sys_.check();
    forest_ = std::make_unique<tree::Forest>(t_.m);
    ev_ = std::make_unique<tree::Evaluator>(*forest_, sys_);
  }
  return *ev_;
}

Element Session::eval(const dsl::Word& w, int depth) {
  AutExpr e = expr(w);
  std::vector<std::string> names;
  e.collect_names(names);
  for (const auto& n : names) {
    if (!sys_.index_of(n)) throw Error(Errc::UndefinedName, "undefined name " + n);
  }
  return evaluator().eval(e, depth);
}

std::optional<std::string> Session::name_of(const Element& e) {
  if (e.is_identity()) return "e";
  auto& ev = evaluator();
  for (std::size_t i = 0; i < sys_.size(); ++i) {
    if (ev.generator(i, e.depth) == e) return sys_.generators()[i].name;
  }
  for (const auto& [name, x] : lets_) {
    if (ev.eval(x, e.depth) == e) return name;
  }
  return std::nullopt;
}

void Session::emit(const std::string& cmd, json body, const std::string& text) {
  if (opts_.pretty) {
    out_ << cmd << ": " << text << "\n";
  } else {
    body["cmd"] = cmd;
    out_ << body.dump() << "\n";
  }
}

bool Session::command(const dsl::Statement& s) {
  Args args{s};
  const auto pos = args.positional();
  auto at = [&](std::size_t i) -> const dsl::Arg* { return i < pos.size() ? pos[i] : nullptr; };
  auto depth_key = [&](const char* key, int fallback) {
    const long long d = args.int_key(key, fallback);
    if (d < 0 || d > std::min(t_.K, t_.D)) {
      throw Error(Errc::InvalidContext, std::string(key) + "= must lie in 0.." + std::to_string(std::min(t_.K, t_.D)));
    }
    return static_cast<int>(d);
  };
  auto portrait_json = [&](const tree::Forest& f, const Element& e, int depth, const std::string& label, json& body,
                           std::string& text) {
    const auto p = tree::extract_portrait(f, e, depth);
    body["portrait"] = tree::to_json(p);
    if (opts_.dot) {
      body["dot"] = tree::to_dot(p, label);
      text += "\n" + tree::to_dot(p, label);
    } else {
      text += portrait_text(p);
    }
  };
  const std::string& c = s.name;
  auto f = [&]() -> tree::Forest& { return evaluator().forest(); };

  if (c == "portrait") {
    args.check_keys({"L"});
    const int L = depth_key("L", L_);
    const auto& w = word_arg(s, at(0));
    const Element e = eval(w, L);
    json body{{"expr", dsl::print(w)}};
    std::string text = dsl::print(w) + " to depth " + std::to_string(L);
    portrait_json(f(), e, L, dsl::print(w), body, text);
    emit(c, std::move(body), text);
    return true;
  }
  if (c == "act" || c == "state") {
    args.check_keys({"L"});
    const int L = depth_key("L", L_);
    const auto& w = word_arg(s, at(0));
    std::vector<int> letters;
    for (std::size_t i = 1; i < pos.size(); ++i) {
      const long long y = int_arg(s, pos[i]);
      if (y < 1 || y > t_.m) throw Error(Errc::Arity, "letter " + std::to_string(y) + " outside 1.." + std::to_string(t_.m));
      letters.push_back(static_cast<int>(y));
    }
    const Element e = eval(w, L);
    json body{{"expr", dsl::print(w)}, {"word", letters}};
    std::string text;
    Element residual;
    if (c == "act") {
      auto r = tree::act(f(), e, letters);
      residual = r.residual;
      body["image"] = r.image;
      text = join(letters) + " -> " + join(r.image);
    } else {
      residual = tree::state(f(), e, letters);
      text = "state at " + (letters.empty() ? std::string("root") : join(letters));
    }
    const auto name = name_of(residual);
    body["residual"] = name ? json(*name) : json(nullptr);
    body["residual_depth"] = residual.depth;
    text += ", residual " + (name ? *name : std::string("(unnamed)"));
    if (!name) portrait_json(f(), residual, std::min(residual.depth, 3), "residual", body, text);
    emit(c, std::move(body), text);
    return true;
  }
  if (c == "order") {
    args.check_keys({"L"});
    const int L = depth_key("L", L_);
    const auto& w = word_arg(s, at(0));
    const long long n = int_arg(s, at(1));
    auto r = tree::order_to_depth(f(), eval(w, L), n);
    json body = tree::to_json(r);
    body["expr"] = dsl::print(w);
    body["n"] = n;
    std::string text = "(" + dsl::print(w) + ")^" + std::to_string(n) +
                       (r.identity ? " = e to depth " + std::to_string(r.depth)
                                   : " first moves a vertex at level " + std::to_string(r.level));
    emit(c, std::move(body), text);
    return true;
  }
  if (c == "zeta") {
    args.check_keys({"L"});
    const int L = depth_key("L", L_);
    const auto& w = word_arg(s, at(0));
    const int z = tree::zeta(f(), eval(w, L));
    emit(c, {{"expr", dsl::print(w)}, {"zeta", z}, {"depth", L}}, "zeta(" + dsl::print(w) + ") = " + std::to_string(z));
    return true;
  }
  if (c == "closure") {
    args.check_keys({"L", "c", "cap"});
    tree::ClosureOptions o;
    o.depth = depth_key("L", L_);
    o.compare_depth = static_cast<int>(args.int_key("c", 0));
    o.cap = static_cast<std::size_t>(std::max<long long>(1, args.int_key("cap", 10000)));
    for (const auto* a : pos) {
      if (!a->is_name()) throw Error(Errc::Syntax, "closure expects generator names");
      o.roots.push_back(a->word.name);
    }
    auto r = tree::state_closure(evaluator(), o);
    std::ostringstream text;
    text << r.states.size() << " non-identity states" << (r.identity_state ? " plus e" : "") << ", "
         << (r.transitive ? "transitive" : "intransitive") << ", " << (r.abelian ? "abelian" : "not abelian")
         << " to depth " << r.depth;
    emit(c, tree::to_json(r), text.str());
    return true;
  }
  if (c == "present") {
    args.check_keys({"L"});
    const int L = depth_key("L", L_);
    std::vector<std::string> names;
    for (const auto* a : pos) {
      if (!a->is_name() || !sys_.index_of(a->word.name)) throw Error(Errc::UndefinedName, "present expects generator names");
      names.push_back(a->word.name);
    }
    if (names.empty()) {
      for (const auto& g : sys_.generators()) names.push_back(g.name);
    }
    std::vector<Element> betas;
    for (const auto& n : names) betas.push_back(evaluator().generator(n, L));
    auto pres = tree::extract_relations(f(), names, betas, t_);
    auto ok = tree::verify_relations(f(), pres, betas);
    json body = tree::to_json(pres);
    body["verified"] = ok;
    std::string text = "r = " + adic::format_series(pres.r);
    emit(c, std::move(body), text);
    return std::all_of(ok.begin(), ok.end(), [](bool b) { return b; });
  }
  if (c == "peel") {
    args.check_keys({"L"});
    const int L = depth_key("L", L_);
    const auto& w = word_arg(s, at(0));
    std::vector<std::string> names;
    for (std::size_t i = 1; i < pos.size(); ++i) {
      if (!pos[i]->is_name() || !sys_.index_of(pos[i]->word.name)) throw Error(Errc::UndefinedName, "peel expects generator names");
      names.push_back(pos[i]->word.name);
    }
    if (names.empty()) {
      for (const auto& g : sys_.generators()) names.push_back(g.name);
    }
    std::vector<Element> betas;
    std::vector<tree::Permutation> roots;
    for (const auto& n : names) {
      betas.push_back(evaluator().generator(n, L));
      roots.push_back(f().root(betas.back().node));
    }
    tree::PermLog log(roots);
    auto q = tree::peel(f(), betas, log, eval(w, L), t_);
    json coeffs = json::object();
    std::string text = dsl::print(w) + " =";
    for (std::size_t i = 0; i < names.size(); ++i) {
      coeffs[names[i]] = coefficients_text(q[i]);
      text += " " + names[i] + "^{" + coefficients_text(q[i]) + "}";
    }
    emit(c, {{"expr", dsl::print(w)}, {"depth", L}, {"coefficients", coeffs}}, text);
    return true;
  }
  if (c == "reduce") {
    args.check_keys({"r"});
    const auto value = adic::parse_series_literal(string_arg(s, at(0)));
    const auto r_text = args.string_key("r");
    if (!r_text) throw Error(Errc::Syntax, "reduce needs r=\"...\"");
    const auto r = adic::parse_series_literal(*r_text);
    if (r[0] < 2 || r[0] > kMaxDegree) throw Error(Errc::InvalidContext, "r(0) must be an integer m >= 2");
    std::size_t j = 1;
    while (j < r.size() && r[j] == 0) ++j;
    std::vector<BigInt> q;
    for (std::size_t i = j; i < r.size(); ++i) q.push_back(-r[i]);
    if (q.empty()) q.push_back(0);
    adic::QuotientRing ring(static_cast<int>(r[0]), static_cast<int>(j), q, t_.D);
    const auto e = ring.reduce(value);
    json body = adic::to_json(e);
    body["r"] = adic::format_integer_series(r);
    emit(c, std::move(body), adic::format_quotient(e));
    return true;
  }
  if (c == "conjugate") {
    args.check_keys({"L", "P"});
    const int L = depth_key("L", L_);
    const int P = std::min(L, depth_key("P", std::min(L, 3)));
    const auto& wb = word_arg(s, at(0));
    json body{{"b", dsl::print(wb)}, {"depth", L}};
    std::string text;
    Element h, b, a;
    if (at(1)) {
      const auto& wa = word_arg(s, at(1));
      b = eval(wb, L);
      a = eval(wa, L);
      h = tree::conjugator(f(), b, a);
      body["a"] = dsl::print(wa);
      text = "h^-1 (" + dsl::print(wb) + ") h = " + dsl::print(wa);
    } else {
      if (!at(0)->is_name()) throw Error(Errc::Syntax, "conjugate with one argument expects a generator name");
      auto r = tree::prop4_conjugator(f(), evaluator(), wb.name, L);
      b = evaluator().generator(wb.name, L);
      a = r.alpha;
      h = r.h;
      body["j"] = r.j;
      body["q"] = adic::format_integer_series(r.q);
      text = "h^-1 " + wb.name + " h = D_" + std::to_string(t_.m) + "(" + std::to_string(r.j) + ")";
    }
    const bool ok = tree::conjugate(f(), b, h) == a;
    body["check"] = ok;
    text += ok ? " (checked)" : " (CHECK FAILED)";
    portrait_json(f(), h, P, "h", body, text);
    emit(c, std::move(body), text);
    return ok;
  }
  if (c == "represent") {
    args.check_keys({"prefix", "P", "L"});
    const int L = depth_key("L", L_);
    const int P = std::min(L, depth_key("P", std::min(L, 3)));
    auto path = std::filesystem::path(string_arg(s, at(0)));
    if (path.is_relative()) path = opts_.base_dir / path;
    std::ifstream in(path);
    if (!in) throw Error(Errc::Io, "cannot read " + path.string());
    json j;
    try {
      j = json::parse(in);
    } catch (const json::exception& e) {
      throw Error(Errc::Io, path.string() + ": " + e.what());
    }
    auto triple = rep::triple_from_json(j);
    const std::string prefix = args.string_key("prefix").value_or("g");
    rep::SelfSimilarMachine machine(triple.endo, triple.transversal);
    const auto& G = triple.endo.group();
    std::vector<rep::Vec> basis;
    for (int i = 0; i < G.dim(); ++i) basis.push_back(G.basis(i));
    auto reach = machine.reachable(basis, 10000);
    json body{{"degree", machine.degree()}, {"complete", reach.complete}};
    std::string text = "degree " + std::to_string(machine.degree());
    if (reach.complete) {
      json defs = json::array();
      for (const auto& g : machine.to_generators(reach, prefix)) {
        defs.push_back(g.to_string());
        text += "\n" + g.to_string();
      }
      body["definitions"] = defs;
    }
    tree::Forest rf(machine.degree());
    json portraits = json::array();
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const auto p = tree::extract_portrait(rf, machine.element(rf, basis[i], L), P);
      portraits.push_back({{"g", basis[i]}, {"portrait", tree::to_json(p)}});
      text += "\nbasis " + std::to_string(i + 1) + ":" + portrait_text(p);
    }
    body["portraits"] = portraits;
    emit(c, std::move(body), text);
    return true;
  }
  if (c == "verify") {
    const auto* a = at(0);
    if (!a || !a->is_name()) throw Error(Errc::Syntax, "verify expects a suite name");
    auto r = suites::run_suite(a->word.name);
    std::ostringstream text;
    text << r.suite << " (" << r.title << "): " << (r.checks.size() - r.failures()) << "/" << r.checks.size()
         << " checks passed";
    for (const auto& chk : r.checks) {
      if (!chk.pass) text << "\n  FAIL " << chk.name << (chk.detail.empty() ? "" : ": " + chk.detail);
    }
    emit(c, suites::to_json(r), text.str());
    return r.passed();
  }
  if (c == "assert") {
    args.check_keys({"L"});
    const int L = depth_key("L", L_);
    const auto* kind = at(0);
    if (!kind || !kind->is_name()) throw Error(Errc::Syntax, "assert expects identity, equal or nonidentity");
    const std::string k = kind->word.name;
    bool ok = false;
    json body{{"kind", k}, {"depth", L}};
    if (k == "identity" || k == "nonidentity") {
      const auto& w = word_arg(s, at(1));
      ok = eval(w, L).is_identity() == (k == "identity");
      body["expr"] = dsl::print(w);
    } else if (k == "equal") {
      const auto& w1 = word_arg(s, at(1));
      const auto& w2 = word_arg(s, at(2));
      ok = eval(w1, L) == eval(w2, L);
      body["lhs"] = dsl::print(w1);
      body["rhs"] = dsl::print(w2);
    } else {
      throw Error(Errc::Syntax, "unknown assertion " + k);
    }
    body["pass"] = ok;
    emit(c, std::move(body), std::string(ok ? "pass " : "FAIL ") + dsl::print(s));
    return ok;
  }
  if (c == "restrict") {
    args.check_keys({"L", "P"});
    const int L = depth_key("L", L_);
    const int P = std::min(L, depth_key("P", std::min(L, 3)));
    const auto& w = word_arg(s, at(0));
    const auto orbit = int_list(string_arg(s, at(1)));
    if (orbit.empty()) throw Error(Errc::NotInvariant, "empty block");
    tree::Forest dst(static_cast<int>(orbit.size()));
    const Element r = tree::restrict_element(f(), eval(w, L), orbit, dst);
    json body{{"expr", dsl::print(w)}, {"block", orbit}};
    std::string text = dsl::print(w) + " on T({" + join(orbit, ",") + "})";
    portrait_json(dst, r, P, "restriction", body, text);
    emit(c, std::move(body), text);
    return true;
  }
  if (c == "level") {
    args.check_keys({});
    const auto& w = word_arg(s, at(0));
    const long long l = int_arg(s, at(1));
    if (l < 0 || l > std::min(t_.K, t_.D)) throw Error(Errc::InvalidContext, "level out of range");
    std::vector<std::uint32_t> images;
    std::string method = "portrait";
    if (at(0)->is_name() && sys_.index_of(w.name)) {
      try {
        images = tree::level_perm_fast(sys_.at(w.name), static_cast<int>(l));
        method = "recursive";
      } catch (const Error& e) {
        if (e.code() != Errc::ShapeMismatch) throw;
      }
    }
    if (method == "portrait") images = tree::level_permutation(f(), eval(w, static_cast<int>(l)), static_cast<int>(l));
    std::vector<std::uint64_t> one_based(images.begin(), images.end());
    for (auto& v : one_based) ++v;
    std::string text = dsl::print(w) + " on level " + std::to_string(l) + ":";
    for (auto v : one_based) text += " " + std::to_string(v);
    emit(c, {{"expr", dsl::print(w)}, {"level", l}, {"method", method}, {"images", one_based}}, text);
    return true;
  }
  if (c == "print") {
    args.check_keys({});
    if (pos.empty()) {
      json gens = json::array();
      std::string text;
      for (const auto& g : sys_.generators()) {
        gens.push_back(g.to_string());
        text += "\n" + g.to_string();
      }
      json lets = json::object();
      for (const auto& [name, e] : lets_) {
        lets[name] = e.to_string();
        text += "\nlet " + name + " = " + e.to_string();
      }
      json body{{"m", t_.m}, {"K", t_.K}, {"D", t_.D}, {"L", L_}, {"generators", gens}, {"lets", lets}};
      emit(c, std::move(body),
           "context m=" + std::to_string(t_.m) + " K=" + std::to_string(t_.K) + " D=" + std::to_string(t_.D) +
               " L=" + std::to_string(L_) + text);
      return true;
    }
    const auto& w = word_arg(s, at(0));
    const std::string e = expr(w).to_string();
    emit(c, {{"expr", dsl::print(w)}, {"value", e}}, dsl::print(w) + " = " + e);
    return true;
  }
  throw Error(Errc::Syntax, "unknown command " + c);
}

int run_text(const std::string& text, const Options& opts, std::ostream& out, std::ostream& err) {
  try {
    const auto script = dsl::parse(text);
    Session session(opts, out);
    return session.run(script);
  } catch (const Error& e) {
    out.flush();
    err << "selfsim: " << errc_name(e.code()) << ": " << e.what() << "\n";
    return exit_code_for(e);
  }
}

}  // namespace selfsim::cli
