#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "cluster_crystal/errors.hpp"

namespace cluster_crystal {

/// Subtraction-free expression DAG.  There is deliberately no node type for
/// subtraction or for constants below 1, so every value of this type is a
/// positive rational function of its variables by construction.  Nodes are
/// immutable and shared, which makes concurrent evaluation safe.
class Expr {
 public:
  enum class Kind : std::uint8_t { Variable, Constant, Sum, Product, Quotient, Power };
  struct Node;

  static Expr variable(int index);
  static Expr constant(std::uint64_t n);
  static Expr one() { return constant(1); }
  static Expr sum(std::vector<Expr> terms);
  static Expr product(std::vector<Expr> factors);
  static Expr quotient(Expr numerator, Expr denominator);
  static Expr power(Expr base, long exponent);

  Kind kind() const;
  /// Variable index, constant value or exponent, depending on kind().
  long payload() const;
  const std::vector<Expr>& operands() const;
  const Node* id() const { return node_.get(); }
  bool is_one() const;

 private:
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct Expr::Node {
  Kind kind;
  long payload;
  std::vector<Expr> operands;
};

inline Expr operator+(Expr a, Expr b) { return Expr::sum({std::move(a), std::move(b)}); }
inline Expr operator*(Expr a, Expr b) { return Expr::product({std::move(a), std::move(b)}); }
inline Expr operator/(Expr a, Expr b) { return Expr::quotient(std::move(a), std::move(b)); }
inline Expr pow(Expr base, long exponent) { return Expr::power(std::move(base), exponent); }

/// Calls `fn` once per distinct node reachable from `roots`, children first.
void visit_nodes(const std::vector<Expr>& roots, const std::function<void(const Expr&)>& fn);

std::set<int> variables_of(const std::vector<Expr>& roots);

/// Replaces variable i by bindings[i], sharing rebuilt nodes.
Expr substitute(const Expr& e, const std::vector<Expr>& bindings);
std::vector<Expr> substitute(const std::vector<Expr>& es, const std::vector<Expr>& bindings);

std::string to_string(const Expr& e);

namespace detail {
template <class SF>
typename SF::value_type apply_node(Expr::Kind kind, long payload, const typename SF::value_type* args,
                                   std::size_t count) {
  using V = typename SF::value_type;
  switch (kind) {
    case Expr::Kind::Constant:
      return SF::constant(static_cast<std::uint64_t>(payload));
    case Expr::Kind::Sum: {
      V acc = args[0];
      for (std::size_t i = 1; i < count; ++i) acc = SF::add(acc, args[i]);
      return acc;
    }
    case Expr::Kind::Product: {
      V acc = args[0];
      for (std::size_t i = 1; i < count; ++i) acc = SF::mul(acc, args[i]);
      return acc;
    }
    case Expr::Kind::Quotient:
      return SF::div(args[0], args[1]);
    case Expr::Kind::Power:
      return SF::pow(args[0], payload);
    case Expr::Kind::Variable:
      break;
  }
  throw DomainError("internal", "variable node reached apply_node");
}

template <class SF>
const typename SF::value_type& eval_memo(const Expr& e, const std::map<int, typename SF::value_type>& env,
                                         std::unordered_map<const Expr::Node*, typename SF::value_type>& memo) {
  if (auto it = memo.find(e.id()); it != memo.end()) return it->second;
  typename SF::value_type value;
  if (e.kind() == Expr::Kind::Variable) {
    auto it = env.find(static_cast<int>(e.payload()));
    if (it == env.end()) {
      throw DomainError("missing_binding", "no value bound to variable " + std::to_string(e.payload()));
    }
    value = it->second;
  } else {
    std::vector<typename SF::value_type> args;
    args.reserve(e.operands().size());
    for (const Expr& op : e.operands()) args.push_back(eval_memo<SF>(op, env, memo));
    value = apply_node<SF>(e.kind(), e.payload(), args.data(), args.size());
  }
  return memo.emplace(e.id(), std::move(value)).first->second;
}
}  // namespace detail

/// Evaluates `e` over the semifield SF.  Every variable of `e` must be bound.
template <class SF>
typename SF::value_type expr_eval(const Expr& e, const std::map<int, typename SF::value_type>& assignment) {
  std::unordered_map<const Expr::Node*, typename SF::value_type> memo;
  return detail::eval_memo<SF>(e, assignment, memo);
}

/// A set of expressions flattened into a straight-line program over
/// variable slots 0..arity()-1.  Shared subexpressions are evaluated once.
class Program {
 public:
  Program() = default;
  explicit Program(const std::vector<Expr>& outputs);

  std::size_t arity() const { return arity_; }
  std::size_t size() const { return code_.size(); }
  std::size_t output_count() const { return outputs_.size(); }

  template <class SF>
  std::vector<typename SF::value_type> run(const std::vector<typename SF::value_type>& inputs) const {
    using V = typename SF::value_type;
    if (inputs.size() < arity_) {
      throw DomainError("missing_binding", "program needs " + std::to_string(arity_) + " inputs, got " +
                                               std::to_string(inputs.size()));
    }
    std::vector<V> regs(code_.size());
    std::vector<V> scratch;
    for (std::size_t pc = 0; pc < code_.size(); ++pc) {
      const Instr& in = code_[pc];
      if (in.kind == Expr::Kind::Variable) {
        regs[pc] = inputs[static_cast<std::size_t>(in.payload)];
        continue;
      }
      scratch.clear();
      for (std::uint32_t a = 0; a < in.count; ++a) scratch.push_back(regs[args_[in.first + a]]);
      regs[pc] = detail::apply_node<SF>(in.kind, in.payload, scratch.data(), scratch.size());
    }
    std::vector<V> out;
    out.reserve(outputs_.size());
    for (std::uint32_t o : outputs_) out.push_back(regs[o]);
    return out;
  }

 private:
  struct Instr {
    Expr::Kind kind;
    long payload;
    std::uint32_t first;
    std::uint32_t count;
  };
  std::vector<Instr> code_;
  std::vector<std::uint32_t> args_;
  std::vector<std::uint32_t> outputs_;
  std::size_t arity_ = 0;
};

}  // namespace cluster_crystal
