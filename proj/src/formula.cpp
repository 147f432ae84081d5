/* Copyright 2026 The ipc1 Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/


#include "ipc1/formula.hpp"

#include <cctype>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>
#include <utility>

#include "ipc1/error.hpp"
#include "ipc1/rng.hpp"

namespace ipc1 {

namespace {

std::uint64_t saturating_length(std::uint64_t l, std::uint64_t r) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  if (l > kMax - 1 || r > kMax - 1 - l) return kMax;
  return l + r + 1;
}

}  // namespace

// Long chains would otherwise be torn down recursively, one stack frame per
// node. Children that are uniquely owned are detached and released here.
Formula::Node::~Node() {
  std::vector<std::shared_ptr<Node>> pending;
  auto detach = [&pending](Formula& f) {
    if (f.node_ && f.node_.use_count() == 1) pending.push_back(std::move(f.node_));
  };
  detach(left);
  detach(right);
  while (!pending.empty()) {
    std::shared_ptr<Node> n = std::move(pending.back());
    pending.pop_back();
    detach(n->left);
    detach(n->right);
  }
}

Formula::Formula() : Formula(var()) {}

Formula Formula::var() {
  static const auto node = std::make_shared<Node>(NodeKind::Var);
  return Formula(node);
}

Formula Formula::bot() {
  static const auto node = std::make_shared<Node>(NodeKind::Bot);
  return Formula(node);
}

Formula Formula::top() { return impl(bot(), bot()); }

Formula Formula::neg(Formula f) { return impl(std::move(f), bot()); }

Formula Formula::conj(Formula l, Formula r) {
  return binary(NodeKind::And, std::move(l), std::move(r));
}

Formula Formula::disj(Formula l, Formula r) {
  return binary(NodeKind::Or, std::move(l), std::move(r));
}

Formula Formula::impl(Formula l, Formula r) {
  return binary(NodeKind::Impl, std::move(l), std::move(r));
}

Formula Formula::binary(NodeKind kind, Formula l, Formula r) {
  if (!is_binary(kind)) throw std::invalid_argument("Formula::binary: leaf kind");
  const std::uint64_t len = saturating_length(l.length(), r.length());
  return Formula(std::make_shared<Node>(kind, std::move(l), std::move(r), len));
}

bool operator==(const Formula& x, const Formula& y) {
  // Trees are equal iff no reachable pair of positions differs locally, so
  // each pair of shared nodes needs to be looked at only once.
  std::vector<std::pair<const Formula*, const Formula*>> todo{{&x, &y}};
  std::set<std::pair<const void*, const void*>> seen;
  while (!todo.empty()) {
    auto [p, q] = todo.back();
    todo.pop_back();
    if (p->id() == q->id()) continue;
    if (p->kind() != q->kind() || p->length() != q->length()) return false;
    if (is_binary(p->kind()) && seen.emplace(p->id(), q->id()).second) {
      todo.emplace_back(&p->right(), &q->right());
      todo.emplace_back(&p->left(), &q->left());
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Parsing: operator-precedence (shunting-yard) with explicit stacks, so that
// arbitrarily deep nesting does not consume the call stack.

namespace {

enum class Tok { Atom, Not, And, Or, Impl, LParen, RParen, End };

struct Token {
  Tok tok;
  std::size_t pos;
  Formula atom;  // for Tok::Atom
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::size_t at = pos_;
    if (pos_ >= text_.size()) return {Tok::End, at, {}};
    const char c = text_[pos_];
    switch (c) {
      case '~': ++pos_; return {Tok::Not, at, {}};
      case '&': ++pos_; return {Tok::And, at, {}};
      case '|': ++pos_; return {Tok::Or, at, {}};
      case '(': ++pos_; return {Tok::LParen, at, {}};
      case ')': ++pos_; return {Tok::RParen, at, {}};
      case '-':
        if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
          pos_ += 2;
          return {Tok::Impl, at, {}};
        }
        throw SyntaxError("expected '->'", at);
      default: break;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t end = pos_;
      while (end < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_')) {
        ++end;
      }
      const std::string_view word = text_.substr(pos_, end - pos_);
      pos_ = end;
      if (word == "a") return {Tok::Atom, at, Formula::var()};
      if (word == "bot") return {Tok::Atom, at, Formula::bot()};
      if (word == "top") return {Tok::Atom, at, Formula::top()};
      throw UnknownVariable(std::string(word), at);
    }
    throw SyntaxError(std::string("unexpected character '") + c + "'", at);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

int precedence(Tok t) {
  switch (t) {
    case Tok::Impl: return 1;
    case Tok::Or: return 2;
    case Tok::And: return 3;
    case Tok::Not: return 4;
    default: return 0;
  }
}

NodeKind kind_of(Tok t) {
  switch (t) {
    case Tok::And: return NodeKind::And;
    case Tok::Or: return NodeKind::Or;
    default: return NodeKind::Impl;
  }
}

}  // namespace

Formula parse(std::string_view text) {
  Lexer lexer(text);
  std::vector<Formula> operands;
  std::vector<Token> ops;

  auto reduce_top = [&] {
    Token op = std::move(ops.back());
    ops.pop_back();
    if (op.tok == Tok::Not) {
      Formula f = std::move(operands.back());
      operands.back() = Formula::neg(std::move(f));
      return;
    }
    Formula r = std::move(operands.back());
    operands.pop_back();
    Formula l = std::move(operands.back());
    operands.back() = Formula::binary(kind_of(op.tok), std::move(l), std::move(r));
  };

  bool want_operand = true;
  for (;;) {
    Token t = lexer.next();
    if (want_operand) {
      switch (t.tok) {
        case Tok::Atom:
          operands.push_back(std::move(t.atom));
          want_operand = false;
          break;
        case Tok::Not:
        case Tok::LParen:
          ops.push_back(std::move(t));
          break;
        case Tok::End: throw SyntaxError("unexpected end of input", t.pos);
        default: throw SyntaxError("expected a formula", t.pos);
      }
      continue;
    }
    switch (t.tok) {
      case Tok::And:
      case Tok::Or:
      case Tok::Impl: {
        const int p = precedence(t.tok);
        const bool right_assoc = t.tok == Tok::Impl;
        while (!ops.empty() && ops.back().tok != Tok::LParen) {
          const int q = precedence(ops.back().tok);
          if (q > p || (q == p && !right_assoc)) {
            reduce_top();
          } else {
            break;
          }
        }
        ops.push_back(std::move(t));
        want_operand = true;
        break;
      }
      case Tok::RParen:
        while (!ops.empty() && ops.back().tok != Tok::LParen) reduce_top();
        if (ops.empty()) throw SyntaxError("unbalanced ')'", t.pos);
        ops.pop_back();
        break;
      case Tok::End:
        while (!ops.empty()) {
          if (ops.back().tok == Tok::LParen) throw SyntaxError("unclosed '('", ops.back().pos);
          reduce_top();
        }
        return std::move(operands.back());
      default: throw SyntaxError("expected an operator or ')'", t.pos);
    }
  }
}

// ---------------------------------------------------------------------------
// Rendering

namespace {

int precedence(NodeKind k) {
  switch (k) {
    case NodeKind::Impl: return 1;
    case NodeKind::Or: return 2;
    case NodeKind::And: return 3;
    default: return 4;
  }
}

const char* symbol(NodeKind k) {
  switch (k) {
    case NodeKind::And: return " & ";
    case NodeKind::Or: return " | ";
    default: return " -> ";
  }
}

}  // namespace

std::string render(const Formula& f) {
  // Frames are either a subformula to print or a literal to emit.
  struct Frame {
    const Formula* f;
    const char* text;
  };
  std::string out;
  std::vector<Frame> todo{{&f, nullptr}};
  while (!todo.empty()) {
    Frame fr = todo.back();
    todo.pop_back();
    if (fr.text) {
      out += fr.text;
      continue;
    }
    const Formula& g = *fr.f;
    switch (g.kind()) {
      case NodeKind::Var: out += 'a'; continue;
      case NodeKind::Bot: out += "bot"; continue;
      default: break;
    }
    const int p = precedence(g.kind());
    const bool right_assoc = g.kind() == NodeKind::Impl;
    const int pl = precedence(g.left().kind());
    const int pr = precedence(g.right().kind());
    const bool paren_l = pl < p || (pl == p && right_assoc);
    const bool paren_r = pr < p || (pr == p && !right_assoc);
    // Pushed in reverse order of emission.
    if (paren_r) todo.push_back({nullptr, ")"});
    todo.push_back({&g.right(), nullptr});
    if (paren_r) todo.push_back({nullptr, "("});
    todo.push_back({nullptr, symbol(g.kind())});
    if (paren_l) todo.push_back({nullptr, ")"});
    todo.push_back({&g.left(), nullptr});
    if (paren_l) todo.push_back({nullptr, "("});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Ladder formulas and random generation

Formula rn_formula(RNIndex idx, std::uint32_t rank_cap) {
  if (idx.is_bot()) return Formula::bot();
  if (idx.is_top()) return Formula::top();
  if (idx.rank > rank_cap) {
    throw SizeLimitExceeded("rank " + std::to_string(idx.rank) + " exceeds cap " +
                            std::to_string(rank_cap));
  }
  Formula phi = Formula::neg(Formula::var());
  Formula psi = Formula::var();
  for (std::uint32_t n = 1; n < idx.rank; ++n) {
    Formula next_phi = Formula::impl(phi, psi);
    Formula next_psi = Formula::disj(std::move(phi), std::move(psi));
    phi = std::move(next_phi);
    psi = std::move(next_psi);
  }
  return idx.is_phi() ? phi : psi;
}

Formula random_formula(std::uint64_t size, std::uint64_t seed) {
  if (size == 0) throw BadParameters("random_formula: size must be at least 1");
  detail::Rng rng(seed);

  // Expand budgets into a prefix-order list of node kinds, then assemble it
  // bottom-up from the end.
  std::vector<NodeKind> prefix;
  std::vector<std::uint64_t> budgets{size};
  while (!budgets.empty()) {
    const std::uint64_t b = budgets.back();
    budgets.pop_back();
    // Leaves become likelier as the budget shrinks.
    if (b < 3 || rng.chance(1.0 / static_cast<double>(b))) {
      prefix.push_back(rng.below(4) == 0 ? NodeKind::Bot : NodeKind::Var);
      continue;
    }
    static constexpr NodeKind kOps[] = {NodeKind::And, NodeKind::Or, NodeKind::Impl};
    prefix.push_back(kOps[rng.below(3)]);
    const std::uint64_t left = 1 + rng.below(b - 2);
    budgets.push_back(b - 1 - left);
    budgets.push_back(left);
  }

  std::vector<Formula> stack;
  for (auto it = prefix.rbegin(); it != prefix.rend(); ++it) {
    switch (*it) {
      case NodeKind::Var: stack.push_back(Formula::var()); break;
      case NodeKind::Bot: stack.push_back(Formula::bot()); break;
      default: {
        Formula l = std::move(stack.back());
        stack.pop_back();
        Formula r = std::move(stack.back());
        stack.back() = Formula::binary(*it, std::move(l), std::move(r));
      }
    }
  }
  return std::move(stack.back());
}

// ---------------------------------------------------------------------------
// Shared-subterm graphs

FormulaDag::Id FormulaDag::add_var() {
  nodes_.push_back({NodeKind::Var, 0, 0});
  return static_cast<Id>(nodes_.size() - 1);
}

FormulaDag::Id FormulaDag::add_bot() {
  nodes_.push_back({NodeKind::Bot, 0, 0});
  return static_cast<Id>(nodes_.size() - 1);
}

FormulaDag::Id FormulaDag::add(NodeKind kind, Id left, Id right) {
  if (!is_binary(kind)) {
    return kind == NodeKind::Var ? add_var() : add_bot();
  }
  if (left >= nodes_.size() || right >= nodes_.size()) {
    throw std::out_of_range("FormulaDag::add: child id not yet defined");
  }
  nodes_.push_back({kind, left, right});
  return static_cast<Id>(nodes_.size() - 1);
}

void FormulaDag::set_root(Id id) {
  if (id >= nodes_.size()) throw std::out_of_range("FormulaDag::set_root");
  root_ = id;
  has_root_ = true;
}

FormulaDag::Id FormulaDag::root() const {
  if (has_root_) return root_;
  if (nodes_.empty()) throw std::logic_error("FormulaDag::root: empty graph");
  return static_cast<Id>(nodes_.size() - 1);
}

FormulaDag rn_formula_dag(RNIndex idx) {
  FormulaDag g;
  if (idx.is_bot()) {
    g.set_root(g.add_bot());
    return g;
  }
  if (idx.is_top()) {
    const auto b = g.add_bot();
    g.set_root(g.add(NodeKind::Impl, b, b));
    return g;
  }
  auto psi = g.add_var();
  if (idx == RNIndex::psi(1)) {
    g.set_root(psi);
    return g;
  }
  const auto b = g.add_bot();
  auto phi = g.add(NodeKind::Impl, psi, b);
  if (idx == RNIndex::phi(1)) {
    g.set_root(phi);
    return g;
  }
  for (std::uint32_t n = 1; n + 1 < idx.rank; ++n) {
    const auto next_phi = g.add(NodeKind::Impl, phi, psi);
    const auto next_psi = g.add(NodeKind::Or, phi, psi);
    phi = next_phi;
    psi = next_psi;
  }
  // Only the root is built at the last level, so every node is reachable.
  g.set_root(g.add(idx.is_phi() ? NodeKind::Impl : NodeKind::Or, phi, psi));
  return g;
}

namespace {

struct KeyHash {
  std::size_t operator()(const DagNode& n) const {
    std::size_t h = static_cast<std::size_t>(n.kind);
    h = h * 0x9e3779b97f4a7c15ULL + n.left;
    h = h * 0x9e3779b97f4a7c15ULL + n.right;
    return h;
  }
};

struct KeyEq {
  bool operator()(const DagNode& x, const DagNode& y) const {
    return x.kind == y.kind && x.left == y.left && x.right == y.right;
  }
};

}  // namespace

FormulaDag share(const Formula& f) {
  FormulaDag g;
  std::unordered_map<DagNode, FormulaDag::Id, KeyHash, KeyEq> interned;
  std::unordered_map<const void*, FormulaDag::Id> done;

  auto intern = [&](DagNode key) {
    auto [it, fresh] = interned.try_emplace(key, 0);
    if (fresh) it->second = g.add(key.kind, key.left, key.right);
    return it->second;
  };

  // Post-order over distinct physical nodes.
  std::vector<std::pair<const Formula*, bool>> todo{{&f, false}};
  while (!todo.empty()) {
    auto [p, expanded] = todo.back();
    todo.pop_back();
    if (done.count(p->id())) continue;
    if (!is_binary(p->kind())) {
      done[p->id()] = intern({p->kind(), 0, 0});
      continue;
    }
    if (!expanded) {
      todo.push_back({p, true});
      todo.push_back({&p->right(), false});
      todo.push_back({&p->left(), false});
      continue;
    }
    done[p->id()] = intern({p->kind(), done.at(p->left().id()), done.at(p->right().id())});
  }
  g.set_root(done.at(f.id()));
  return g;
}

Formula unfold(const FormulaDag& g) {
  std::vector<Formula> built;
  built.reserve(g.size());
  for (const DagNode& n : g.nodes()) {
    switch (n.kind) {
      case NodeKind::Var: built.push_back(Formula::var()); break;
      case NodeKind::Bot: built.push_back(Formula::bot()); break;
      default: built.push_back(Formula::binary(n.kind, built[n.left], built[n.right]));
    }
  }
  return built.at(g.root());
}

std::string write_dag(const FormulaDag& g) {
  std::ostringstream os;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const DagNode& n = g.nodes()[i];
    os << i << " := ";
    switch (n.kind) {
      case NodeKind::Var: os << "a"; break;
      case NodeKind::Bot: os << "bot"; break;
      case NodeKind::And: os << "and " << n.left << ' ' << n.right; break;
      case NodeKind::Or: os << "or " << n.left << ' ' << n.right; break;
      case NodeKind::Impl: os << "impl " << n.left << ' ' << n.right; break;
    }
    os << '\n';
  }
  os << "root " << g.root() << '\n';
  return os.str();
}

FormulaDag read_dag(std::string_view text) {
  struct Entry {
    NodeKind kind;
    std::string left, right;
    std::size_t line;
  };
  std::map<std::string, Entry> entries;
  std::vector<std::string> order;
  std::string root;
  bool have_root = false;

  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::vector<std::string> words;
    for (std::string w; ls >> w;) words.push_back(w);
    if (words.empty() || words[0][0] == '#') continue;
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (have_root) throw FormatError(where + "content after the root line");
    if (words[0] == "root") {
      if (words.size() != 2) throw FormatError(where + "expected 'root <id>'");
      root = words[1];
      have_root = true;
      continue;
    }
    if (words.size() < 3 || words[1] != ":=") throw FormatError(where + "expected '<id> := ...'");
    Entry e{NodeKind::Var, {}, {}, line_no};
    const std::string& op = words[2];
    std::size_t arity = 0;
    if (op == "a") {
      e.kind = NodeKind::Var;
    } else if (op == "bot") {
      e.kind = NodeKind::Bot;
    } else if (op == "and" || op == "or" || op == "impl") {
      e.kind = op == "and" ? NodeKind::And : op == "or" ? NodeKind::Or : NodeKind::Impl;
      arity = 2;
    } else {
      throw FormatError(where + "unknown node kind '" + op + "'");
    }
    if (words.size() != 3 + arity) throw FormatError(where + "wrong number of operands");
    if (arity == 2) {
      e.left = words[3];
      e.right = words[4];
    }
    if (!entries.emplace(words[0], e).second) {
      throw FormatError(where + "duplicate id '" + words[0] + "'");
    }
    order.push_back(words[0]);
  }
  if (!have_root) throw FormatError("missing 'root <id>' line");
  if (!entries.count(root)) throw FormatError("root refers to undefined id '" + root + "'");

  // Depth-first renumbering in topological order; grey marks detect cycles.
  enum class Mark { White, Grey, Black };
  std::map<std::string, Mark> mark;
  std::map<std::string, FormulaDag::Id> id_of;
  FormulaDag g;
  for (const std::string& start : order) {
    if (mark[start] == Mark::Black) continue;
    std::vector<std::pair<std::string, bool>> todo{{start, false}};
    while (!todo.empty()) {
      auto [name, expanded] = todo.back();
      todo.pop_back();
      const Entry& e = entries.at(name);
      if (expanded) {
        id_of[name] = is_binary(e.kind) ? g.add(e.kind, id_of.at(e.left), id_of.at(e.right))
                                        : g.add(e.kind, 0, 0);
        mark[name] = Mark::Black;
        continue;
      }
      if (mark[name] == Mark::Black) continue;
      if (mark[name] == Mark::Grey) throw FormatError("cycle through id '" + name + "'");
      mark[name] = Mark::Grey;
      todo.push_back({name, true});
      if (is_binary(e.kind)) {
        for (const std::string* child : {&e.right, &e.left}) {
          if (!entries.count(*child)) {
            throw FormatError("line " + std::to_string(e.line) + ": undefined id '" + *child + "'");
          }
          if (mark[*child] == Mark::Grey) throw FormatError("cycle through id '" + *child + "'");
          if (mark[*child] == Mark::White) todo.push_back({*child, false});
        }
      }
    }
  }
  g.set_root(id_of.at(root));
  return g;
}

}  // namespace ipc1
