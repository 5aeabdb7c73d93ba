#include "crtube/expr.hpp"

#include <sstream>
#include <stdexcept>

namespace crtube {

Expr Expr::constant(cplx c) {
  auto n = std::make_shared<Node>();
  n->op = Op::Const;
  n->value = c;
  return Expr(n);
}

Expr Expr::var(int k) {
  auto n = std::make_shared<Node>();
  n->op = Op::Var;
  n->index = k;
  return Expr(n);
}

Expr Expr::make(Op op, const Expr& a, const Expr& b) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->lhs = a.node_;
  n->rhs = b.node_;
  return Expr(n);
}

Expr operator+(const Expr& a, const Expr& b) { return Expr::make(Expr::Op::Add, a, b); }
Expr operator-(const Expr& a, const Expr& b) { return Expr::make(Expr::Op::Sub, a, b); }
Expr operator*(const Expr& a, const Expr& b) { return Expr::make(Expr::Op::Mul, a, b); }
Expr operator/(const Expr& a, const Expr& b) { return Expr::make(Expr::Op::Div, a, b); }
Expr operator-(const Expr& a) { return Expr::make(Expr::Op::Neg, a); }
Expr exp(const Expr& a) { return Expr::make(Expr::Op::Exp, a); }
Expr sin(const Expr& a) { return Expr::make(Expr::Op::Sin, a); }
Expr cos(const Expr& a) { return Expr::make(Expr::Op::Cos, a); }

Dual Expr::eval_node(const Node& n, const std::vector<cplx>& z, const std::vector<cplx>& dz) {
  switch (n.op) {
  case Op::Const:
    return {n.value, 0.0};
  case Op::Var:
    if (n.index < 0 || n.index >= static_cast<int>(z.size())) throw std::out_of_range("Expr: variable out of range");
    return {z[n.index], dz.empty() ? cplx(0.0) : dz[n.index]};
  default:
    break;
  }
  Dual a = eval_node(*n.lhs, z, dz);
  switch (n.op) {
  case Op::Neg:
    return {-a.val, -a.der};
  case Op::Exp: {
    cplx e = std::exp(a.val);
    return {e, e * a.der};
  }
  case Op::Sin:
    return {std::sin(a.val), std::cos(a.val) * a.der};
  case Op::Cos:
    return {std::cos(a.val), -std::sin(a.val) * a.der};
  default:
    break;
  }
  Dual b = eval_node(*n.rhs, z, dz);
  switch (n.op) {
  case Op::Add:
    return {a.val + b.val, a.der + b.der};
  case Op::Sub:
    return {a.val - b.val, a.der - b.der};
  case Op::Mul:
    return {a.val * b.val, a.der * b.val + a.val * b.der};
  case Op::Div:
    return {a.val / b.val, (a.der * b.val - a.val * b.der) / (b.val * b.val)};
  default:
    throw std::logic_error("Expr: unknown operation");
  }
}

cplx Expr::eval(const std::vector<cplx>& z) const { return eval_node(*node_, z, {}).val; }

Dual Expr::eval_dual(const std::vector<cplx>& z, const std::vector<cplx>& dz) const {
  if (dz.size() != z.size()) throw std::invalid_argument("Expr::eval_dual: direction size mismatch");
  return eval_node(*node_, z, dz);
}

std::string Expr::str_node(const Node& n) {
  std::ostringstream os;
  switch (n.op) {
  case Op::Const:
    if (n.value.imag() == 0.0) os << n.value.real();
    else os << "(" << n.value.real() << (n.value.imag() < 0 ? "" : "+") << n.value.imag() << "i)";
    return os.str();
  case Op::Var:
    os << "z" << n.index + 1;
    return os.str();
  case Op::Neg:
    return "-(" + str_node(*n.lhs) + ")";
  case Op::Exp:
    return "exp(" + str_node(*n.lhs) + ")";
  case Op::Sin:
    return "sin(" + str_node(*n.lhs) + ")";
  case Op::Cos:
    return "cos(" + str_node(*n.lhs) + ")";
  case Op::Add:
    return "(" + str_node(*n.lhs) + " + " + str_node(*n.rhs) + ")";
  case Op::Sub:
    return "(" + str_node(*n.lhs) + " - " + str_node(*n.rhs) + ")";
  case Op::Mul:
    return str_node(*n.lhs) + "*" + str_node(*n.rhs);
  case Op::Div:
    return str_node(*n.lhs) + "/" + str_node(*n.rhs);
  }
  return "?";
}

std::string Expr::str() const { return str_node(*node_); }

std::vector<cplx> CoveringMap::eval(const std::vector<cplx>& z) const {
  cplx h0 = homogeneous[0].eval(z);
  std::vector<cplx> w;
  for (size_t k = 1; k < homogeneous.size(); ++k) w.push_back(homogeneous[k].eval(z) / h0);
  return w;
}

std::pair<std::vector<cplx>, std::vector<cplx>> CoveringMap::eval_with_derivative(const std::vector<cplx>& z,
                                                                                  const std::vector<cplx>& v) const {
  Dual h0 = homogeneous[0].eval_dual(z, v);
  std::vector<cplx> w, dw;
  for (size_t k = 1; k < homogeneous.size(); ++k) {
    Dual h = homogeneous[k].eval_dual(z, v);
    w.push_back(h.val / h0.val);
    dw.push_back((h.der * h0.val - h.val * h0.der) / (h0.val * h0.val));
  }
  return {w, dw};
}

std::string CoveringMap::str() const {
  std::string s = "[";
  for (size_t k = 0; k < homogeneous.size(); ++k) s += (k ? ", " : "") + homogeneous[k].str();
  return s + "]";
}

} // namespace crtube
