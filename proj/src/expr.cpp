#include "selfsim/expr.hpp"

#include <algorithm>

#include "selfsim/series_io.hpp"

namespace selfsim::tree {

struct AutExpr::Node {
  Kind kind = Kind::Identity;
  std::string name;
  std::vector<AutExpr> args;
  std::optional<adic::PowerSeries> exponent;
  int shift = 0;
};

AutExpr::AutExpr() : node_(nullptr) {}

AutExpr AutExpr::gen(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Gen;
  n->name = std::move(name);
  return AutExpr(std::move(n));
}

AutExpr::Kind AutExpr::kind() const { return node_ ? node_->kind : Kind::Identity; }

const std::string& AutExpr::name() const {
  static const std::string empty;
  return node_ ? node_->name : empty;
}

const AutExpr& AutExpr::lhs() const { return node_->args.at(0); }
const AutExpr& AutExpr::rhs() const { return node_->args.at(1); }
const adic::PowerSeries& AutExpr::exponent() const { return *node_->exponent; }
int AutExpr::shift() const { return node_ ? node_->shift : 0; }

AutExpr AutExpr::inverse() const {
  if (is_identity()) return *this;
  if (kind() == Kind::Inv) return lhs();
  auto n = std::make_shared<Node>();
  n->kind = Kind::Inv;
  n->args = {*this};
  return AutExpr(std::move(n));
}

AutExpr AutExpr::pow(const adic::PowerSeries& q) const {
  if (is_identity() || q.is_zero()) return {};
  auto n = std::make_shared<Node>();
  n->kind = Kind::Pow;
  n->args = {*this};
  n->exponent = q;
  return AutExpr(std::move(n));
}

AutExpr AutExpr::diagonal(int s) const {
  if (s < 0) throw Error(Errc::Syntax, "diagonal shift must be nonnegative");
  if (is_identity() || s == 0) return *this;
  auto n = std::make_shared<Node>();
  n->kind = Kind::Diag;
  n->args = {*this};
  n->shift = s;
  return AutExpr(std::move(n));
}

AutExpr operator*(const AutExpr& a, const AutExpr& b) {
  if (a.is_identity()) return b;
  if (b.is_identity()) return a;
  auto n = std::make_shared<AutExpr::Node>();
  n->kind = AutExpr::Kind::Mul;
  n->args = {a, b};
  return AutExpr(std::move(n));
}

bool operator==(const AutExpr& a, const AutExpr& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  if (a.is_identity()) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  return x.name == y.name && x.shift == y.shift && x.exponent == y.exponent && x.args == y.args;
}

AutExpr commutator(const AutExpr& a, const AutExpr& b) { return a.inverse() * b.inverse() * a * b; }

void AutExpr::collect_names(std::vector<std::string>& out) const {
  if (is_identity()) return;
  if (kind() == Kind::Gen) {
    if (std::find(out.begin(), out.end(), name()) == out.end()) out.push_back(name());
    return;
  }
  for (const auto& a : node_->args) a.collect_names(out);
}

std::string AutExpr::to_string() const {
  auto atom = [](const AutExpr& e) {
    return e.kind() == Kind::Mul ? "[" + e.to_string() + "]" : e.to_string();
  };
  switch (kind()) {
    case Kind::Identity: return "e";
    case Kind::Gen: return name();
    case Kind::Inv: return atom(lhs()) + "^-1";
    case Kind::Pow: return atom(lhs()) + "^{" + adic::format_series(exponent()) + "}";
    case Kind::Diag: return atom(lhs()) + "@" + std::to_string(shift());
    case Kind::Mul: return lhs().to_string() + "*" + atom(rhs());
  }
  return {};
}

// ---------------------------------------------------------------------------

std::string WreathGenerator::to_string() const {
  std::string s = "gen " + name + " = (";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) s += ", ";
    s += entries[i].to_string();
  }
  s += ")";
  if (!root.is_identity()) s += " " + root.cycle_string();
  return s;
}

namespace {
Permutation full_cycle(int m) {
  std::vector<int> cyc(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) cyc[static_cast<std::size_t>(i)] = i + 1;
  return Permutation::from_cycles(m, {cyc});
}
}  // namespace

WreathGenerator adding_machine(int m, int j, const std::string& name) {
  if (j < 1) throw Error(Errc::InvalidContext, "adding machine needs j >= 1");
  std::vector<AutExpr> entries(static_cast<std::size_t>(m));
  entries.back() = AutExpr::gen(name).diagonal(j - 1);
  return {name, full_cycle(m), std::move(entries)};
}

WreathGenerator power_generator(const std::string& name, const std::vector<adic::PowerSeries>& q) {
  if (q.empty()) throw Error(Errc::Arity, "power generator needs m exponents");
  const int m = q.front().truncation().m;
  if (static_cast<int>(q.size()) != m) throw Error(Errc::Arity, "power generator needs m exponents");
  std::vector<AutExpr> entries;
  for (const auto& qi : q) entries.push_back(AutExpr::gen(name).pow(qi));
  return {name, full_cycle(m), std::move(entries)};
}

WreathGenerator rooted(const std::string& name, const Permutation& sigma) {
  return {name, sigma, std::vector<AutExpr>(static_cast<std::size_t>(sigma.degree()))};
}

// ---------------------------------------------------------------------------

void GeneratorSystem::add(WreathGenerator g) {
  if (static_cast<int>(g.entries.size()) != m_ || g.root.degree() != m_) {
    throw Error(Errc::Arity, "generator " + g.name + " has " + std::to_string(g.entries.size()) +
                                 " entries; the tree has degree " + std::to_string(m_));
  }
  if (g.name.empty() || g.name == "e") throw Error(Errc::Syntax, "invalid generator name '" + g.name + "'");
  if (index_.count(g.name)) throw Error(Errc::Syntax, "generator " + g.name + " defined twice");
  index_.emplace(g.name, gens_.size());
  gens_.push_back(std::move(g));
}

void GeneratorSystem::check() const {
  for (const auto& g : gens_) {
    std::vector<std::string> names;
    for (const auto& e : g.entries) e.collect_names(names);
    for (const auto& n : names) {
      if (!index_.count(n)) throw Error(Errc::UndefinedName, "generator " + g.name + " refers to undefined " + n);
    }
  }
}

std::optional<std::size_t> GeneratorSystem::index_of(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const WreathGenerator& GeneratorSystem::at(const std::string& name) const {
  auto i = index_of(name);
  if (!i) throw Error(Errc::UndefinedName, "undefined generator " + name);
  return gens_[*i];
}

// ---------------------------------------------------------------------------

Evaluator::Evaluator(Forest& forest, const GeneratorSystem& system) : f_(forest), sys_(system) {
  if (forest.degree() != system.degree()) throw Error(Errc::ContextMismatch, "forest and system degrees differ");
  sys_.check();
}

Element Evaluator::generator(std::size_t index, int depth) {
  if (depth <= 0) return identity(depth < 0 ? 0 : depth);
  if (gen_memo_.size() < sys_.size()) gen_memo_.resize(sys_.size());
  auto& slots = gen_memo_[index];
  if (slots.size() <= static_cast<std::size_t>(depth)) slots.resize(static_cast<std::size_t>(depth) + 1);
  if (auto v = slots[static_cast<std::size_t>(depth)]) return {*v, depth};
  const WreathGenerator& g = sys_.generators()[index];
  std::vector<NodeId> kids;
  kids.reserve(g.entries.size());
  for (const auto& w : g.entries) kids.push_back(eval(w, depth - 1).node);
  NodeId n = f_.make(g.root, kids);
  gen_memo_[index][static_cast<std::size_t>(depth)] = n;
  return {n, depth};
}

Element Evaluator::generator(const std::string& name, int depth) {
  auto i = sys_.index_of(name);
  if (!i) throw Error(Errc::UndefinedName, "undefined generator " + name);
  return generator(*i, depth);
}

Element Evaluator::eval(const AutExpr& e, int depth) {
  using K = AutExpr::Kind;
  if (e.is_identity() || depth <= 0) return identity(std::max(depth, 0));
  if (e.kind() == K::Gen) return generator(e.name(), depth);
  const Key key{e.identity_key(), depth};
  if (auto it = memo_.find(key); it != memo_.end()) return {it->second.second, depth};
  Element r;
  switch (e.kind()) {
    case K::Mul: r = mul(f_, eval(e.lhs(), depth), eval(e.rhs(), depth)); break;
    case K::Inv: r = inverse(f_, eval(e.lhs(), depth)); break;
    case K::Pow: r = pow_series(f_, eval(e.lhs(), depth), e.exponent()); break;
    case K::Diag:
      r = e.shift() >= depth ? identity(depth) : diagonal(f_, eval(e.lhs(), depth - e.shift()), e.shift());
      break;
    default: break;
  }
  memo_.emplace(key, std::make_pair(e, r.node));
  return r;
}

}  // namespace selfsim::tree
