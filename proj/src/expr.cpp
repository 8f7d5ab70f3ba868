#include "cluster_crystal/expr.hpp"

#include <sstream>
#include <unordered_set>

namespace cluster_crystal {

Expr Expr::variable(int index) {
  if (index < 0) throw DomainError("invalid_argument", "variable indices must be non-negative");
  return Expr(std::make_shared<const Node>(Node{Kind::Variable, index, {}}));
}

Expr Expr::constant(std::uint64_t n) {
  if (n == 0) throw DomainError("invalid_argument", "positive expressions admit only constants >= 1");
  return Expr(std::make_shared<const Node>(Node{Kind::Constant, static_cast<long>(n), {}}));
}

Expr Expr::sum(std::vector<Expr> terms) {
  if (terms.empty()) throw DomainError("invalid_argument", "empty sum is not a positive expression");
  if (terms.size() == 1) return terms.front();
  return Expr(std::make_shared<const Node>(Node{Kind::Sum, 0, std::move(terms)}));
}

Expr Expr::product(std::vector<Expr> factors) {
  std::vector<Expr> kept;
  kept.reserve(factors.size());
  for (Expr& f : factors) {
    if (!f.is_one()) kept.push_back(std::move(f));
  }
  if (kept.empty()) return one();
  if (kept.size() == 1) return kept.front();
  return Expr(std::make_shared<const Node>(Node{Kind::Product, 0, std::move(kept)}));
}

Expr Expr::quotient(Expr numerator, Expr denominator) {
  if (denominator.is_one()) return numerator;
  return Expr(std::make_shared<const Node>(Node{Kind::Quotient, 0, {std::move(numerator), std::move(denominator)}}));
}

Expr Expr::power(Expr base, long exponent) {
  if (exponent == 0 || base.is_one()) return one();
  if (exponent == 1) return base;
  return Expr(std::make_shared<const Node>(Node{Kind::Power, exponent, {std::move(base)}}));
}

Expr::Kind Expr::kind() const { return node_->kind; }
long Expr::payload() const { return node_->payload; }
const std::vector<Expr>& Expr::operands() const { return node_->operands; }
bool Expr::is_one() const { return node_->kind == Kind::Constant && node_->payload == 1; }

namespace {

void visit_rec(const Expr& e, std::unordered_set<const Expr::Node*>& seen, const std::function<void(const Expr&)>& fn) {
  if (!seen.insert(e.id()).second) return;
  for (const Expr& op : e.operands()) visit_rec(op, seen, fn);
  fn(e);
}

Expr substitute_rec(const Expr& e, const std::vector<Expr>& bindings,
                    std::unordered_map<const Expr::Node*, Expr>& memo) {
  if (auto it = memo.find(e.id()); it != memo.end()) return it->second;
  Expr out = e;
  switch (e.kind()) {
    case Expr::Kind::Variable: {
      const auto idx = static_cast<std::size_t>(e.payload());
      if (idx >= bindings.size()) {
        throw DomainError("missing_binding", "substitution has no binding for variable " + std::to_string(idx));
      }
      out = bindings[idx];
      break;
    }
    case Expr::Kind::Constant:
      break;
    case Expr::Kind::Sum:
    case Expr::Kind::Product: {
      std::vector<Expr> ops;
      ops.reserve(e.operands().size());
      for (const Expr& op : e.operands()) ops.push_back(substitute_rec(op, bindings, memo));
      out = e.kind() == Expr::Kind::Sum ? Expr::sum(std::move(ops)) : Expr::product(std::move(ops));
      break;
    }
    case Expr::Kind::Quotient:
      out = Expr::quotient(substitute_rec(e.operands()[0], bindings, memo),
                           substitute_rec(e.operands()[1], bindings, memo));
      break;
    case Expr::Kind::Power:
      out = Expr::power(substitute_rec(e.operands()[0], bindings, memo), e.payload());
      break;
  }
  memo.emplace(e.id(), out);
  return out;
}

void print_rec(const Expr& e, std::ostream& os) {
  switch (e.kind()) {
    case Expr::Kind::Variable:
      os << 'v' << e.payload();
      return;
    case Expr::Kind::Constant:
      os << e.payload();
      return;
    case Expr::Kind::Sum:
    case Expr::Kind::Product: {
      const char* sep = e.kind() == Expr::Kind::Sum ? " + " : "*";
      os << '(';
      for (std::size_t i = 0; i < e.operands().size(); ++i) {
        if (i) os << sep;
        print_rec(e.operands()[i], os);
      }
      os << ')';
      return;
    }
    case Expr::Kind::Quotient:
      os << '(';
      print_rec(e.operands()[0], os);
      os << ")/(";
      print_rec(e.operands()[1], os);
      os << ')';
      return;
    case Expr::Kind::Power:
      print_rec(e.operands()[0], os);
      os << '^' << e.payload();
      return;
  }
}

}  // namespace

void visit_nodes(const std::vector<Expr>& roots, const std::function<void(const Expr&)>& fn) {
  std::unordered_set<const Expr::Node*> seen;
  for (const Expr& r : roots) visit_rec(r, seen, fn);
}

std::set<int> variables_of(const std::vector<Expr>& roots) {
  std::set<int> vars;
  visit_nodes(roots, [&](const Expr& e) {
    if (e.kind() == Expr::Kind::Variable) vars.insert(static_cast<int>(e.payload()));
  });
  return vars;
}

Expr substitute(const Expr& e, const std::vector<Expr>& bindings) {
  std::unordered_map<const Expr::Node*, Expr> memo;
  return substitute_rec(e, bindings, memo);
}

std::vector<Expr> substitute(const std::vector<Expr>& es, const std::vector<Expr>& bindings) {
  std::unordered_map<const Expr::Node*, Expr> memo;
  std::vector<Expr> out;
  out.reserve(es.size());
  for (const Expr& e : es) out.push_back(substitute_rec(e, bindings, memo));
  return out;
}

std::string to_string(const Expr& e) {
  std::ostringstream os;
  print_rec(e, os);
  return os.str();
}

Program::Program(const std::vector<Expr>& outputs) {
  std::unordered_map<const Expr::Node*, std::uint32_t> slot;
  visit_nodes(outputs, [&](const Expr& e) {
    Instr in{e.kind(), e.payload(), static_cast<std::uint32_t>(args_.size()),
             static_cast<std::uint32_t>(e.operands().size())};
    for (const Expr& op : e.operands()) args_.push_back(slot.at(op.id()));
    if (e.kind() == Expr::Kind::Variable) arity_ = std::max(arity_, static_cast<std::size_t>(e.payload()) + 1);
    slot.emplace(e.id(), static_cast<std::uint32_t>(code_.size()));
    code_.push_back(in);
  });
  outputs_.reserve(outputs.size());
  for (const Expr& e : outputs) outputs_.push_back(slot.at(e.id()));
}

}  // namespace cluster_crystal
