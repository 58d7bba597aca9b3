#pragma once

// Symbolic tree automorphisms.
//
// An AutExpr is an immutable expression DAG over named generators; sharing a
// subexpression shares the node.  Generators are wreath recursions
// a = (w_1, ..., w_m) sigma whose entries are again AutExprs.  An Evaluator
// expands expressions into Forest elements at a requested depth.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "selfsim/adic.hpp"
#include "selfsim/forest.hpp"
#include "selfsim/permutation.hpp"

namespace selfsim::tree {

class AutExpr {
 public:
  enum class Kind { Identity, Gen, Mul, Inv, Pow, Diag };

  AutExpr();  // e
  static AutExpr gen(std::string name);

  Kind kind() const;
  bool is_identity() const { return kind() == Kind::Identity; }
  const std::string& name() const;
  const AutExpr& lhs() const;  // Mul; also the operand of Inv, Pow, Diag
  const AutExpr& rhs() const;
  const adic::PowerSeries& exponent() const;
  int shift() const;

  AutExpr inverse() const;
  AutExpr pow(const adic::PowerSeries& q) const;
  /// this^{x^s}; s = 0 returns *this.
  AutExpr diagonal(int s) const;

  /// Generator names referenced anywhere below.
  void collect_names(std::vector<std::string>& out) const;

  /// DSL text; parses back to an equal expression.
  std::string to_string() const;

  const void* identity_key() const { return node_.get(); }

  friend AutExpr operator*(const AutExpr& a, const AutExpr& b);
  friend bool operator==(const AutExpr& a, const AutExpr& b);

 private:
  struct Node;
  explicit AutExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

AutExpr commutator(const AutExpr& a, const AutExpr& b);

struct WreathGenerator {
  std::string name;
  Permutation root;
  std::vector<AutExpr> entries;

  /// "gen a = (e, a) (1 2)"
  std::string to_string() const;
  friend bool operator==(const WreathGenerator&, const WreathGenerator&) = default;
};

/// (e, ..., e, a^{x^{j-1}}) sigma with sigma = (1 2 ... m).
WreathGenerator adding_machine(int m, int j, const std::string& name = "a");
/// (a^{q_1}, ..., a^{q_m}) sigma with sigma = (1 2 ... m).
WreathGenerator power_generator(const std::string& name, const std::vector<adic::PowerSeries>& q);
/// Rooted automorphism: trivial entries, root sigma.
WreathGenerator rooted(const std::string& name, const Permutation& sigma);

class GeneratorSystem {
 public:
  explicit GeneratorSystem(int m) : m_(m) {}

  int degree() const { return m_; }
  /// Rejects arity mismatches and duplicate names.  Names referenced in the
  /// entries may be defined later; check() verifies them.
  void add(WreathGenerator g);
  void check() const;

  const std::vector<WreathGenerator>& generators() const { return gens_; }
  std::optional<std::size_t> index_of(const std::string& name) const;
  const WreathGenerator& at(const std::string& name) const;
  std::size_t size() const { return gens_.size(); }

 private:
  int m_;
  std::vector<WreathGenerator> gens_;
  std::map<std::string, std::size_t> index_;
};

class Evaluator {
 public:
  Evaluator(Forest& forest, const GeneratorSystem& system);

  Forest& forest() { return f_; }
  const GeneratorSystem& system() const { return sys_; }

  Element eval(const AutExpr& e, int depth);
  Element generator(std::size_t index, int depth);
  Element generator(const std::string& name, int depth);

 private:
  struct Key {
    const void* node;
    int depth;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      return std::hash<const void*>()(k.node) * 31u + static_cast<std::size_t>(k.depth);
    }
  };

  Forest& f_;
  const GeneratorSystem& sys_;
  std::vector<std::vector<std::optional<NodeId>>> gen_memo_;
  // holds the expression alongside its value so the key pointer stays valid
  std::unordered_map<Key, std::pair<AutExpr, NodeId>, KeyHash> memo_;
};

}  // namespace selfsim::tree
