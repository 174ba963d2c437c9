#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "arcalg/arcdiagram.hpp"
#include "arcalg/weight.hpp"

namespace arcalg {

// Either the parity of the ∧-count or an exact ∧-count. The ◇ never counts.
// Parity is the default: it is the class closed under dotted Bruhat moves.
struct WedgeClass {
  bool exact = false;
  int value = 0;  // parity in {0,1}, or the exact count

  static WedgeClass parity(int p) { return {false, ((p % 2) + 2) % 2}; }
  static WedgeClass count(int n) { return {true, n}; }
  bool admits(int wedge_count) const {
    return exact ? wedge_count == value : (wedge_count % 2) == value;
  }
  bool operator==(const WedgeClass& o) const { return exact == o.exact && value == o.value; }
  std::string str() const;
};

struct BlockSpec {
  NumberLine line;
  std::vector<int> circles;  // doubled positions labeled ○
  std::vector<int> crosses;  // doubled positions labeled ×
  WedgeClass wedge;

  void validate() const;  // throws DomainError

  bool operator==(const BlockSpec& o) const {
    return line == o.line && circles == o.circles && crosses == o.crosses && wedge == o.wedge;
  }

  // Convenience: a plain window block without rings and crosses.
  static BlockSpec window(int delta, int count, WedgeClass wc, Calculus calc = Calculus::TypeB);

  std::string key() const;  // stable identification string (used for memo keys)
};

// Total predicate: does w satisfy all weight invariants and lie in b?
bool validate_weight(const Weight& w, const BlockSpec& b);

// All valid weights in the window, ordered lexicographically by symbol
// sequence (∧ < ∨ < ○ < × < ◇).
std::vector<Weight> enumerate_block(const BlockSpec& b);

// Elementary Bruhat moves at positions i<j: (∨,∧) -> (∧,∨) always, and the
// dotted move (∧,∧) -> (∨,∨) in type-B parity blocks. Results are > w.
std::vector<Weight> bruhat_moves(const Weight& w, const BlockSpec& b);

// Runtime context for one block: enumerated weights, cached cup/cap
// diagrams, and the reflexive-transitive closure of the Bruhat moves.
// Immutable after construction.
class Block {
 public:
  explicit Block(const BlockSpec& spec);

  const BlockSpec& spec() const { return spec_; }
  const std::vector<Weight>& weights() const { return weights_; }
  std::size_t size() const { return weights_.size(); }
  const Weight& weight(std::size_t i) const { return weights_[i]; }
  std::optional<std::size_t> find(const Weight& w) const;
  std::size_t index_of(const Weight& w) const;  // throws if absent

  const ArcDiagram& cup(std::size_t i) const { return cups_[i]; }
  const ArcDiagram& cap(std::size_t i) const { return caps_[i]; }

  bool leq(std::size_t x, std::size_t y) const { return leq_[x][y]; }  // x <= y
  bool leq(const Weight& x, const Weight& y) const { return leq(index_of(x), index_of(y)); }

  // The non-○/× doubled positions (the vertices diagrams may use).
  const std::vector<int>& free_positions() const { return free_pos_; }
  const std::vector<int>& ring_cross_positions() const { return ring_cross_; }

 private:
  BlockSpec spec_;
  std::vector<Weight> weights_;
  std::vector<ArcDiagram> cups_, caps_;
  std::vector<std::vector<bool>> leq_;
  std::vector<int> free_pos_, ring_cross_;
  std::map<std::vector<Sym>, std::size_t> index_;
};

// x <= y in the Bruhat order of b (reflexive-transitive closure of moves).
bool bruhat_leq(const Weight& x, const Weight& y, const BlockSpec& b);

}  // namespace arcalg
