#pragma once

#include <complex>
#include <memory>
#include <string>
#include <vector>

namespace crtube {

using cplx = std::complex<double>;

/// Value together with a directional derivative (forward mode).
struct Dual {
  cplx val;
  cplx der;
};

/// Immutable expression tree over complex variables z_0..z_{n-1}.
class Expr {
public:
  enum class Op { Const, Var, Add, Sub, Mul, Div, Neg, Exp, Sin, Cos };

  Expr() : Expr(constant(0.0)) {}
  static Expr constant(cplx c);
  static Expr var(int k);

  Op op() const { return node_->op; }
  cplx eval(const std::vector<cplx>& z) const;
  /// Value and derivative along direction dz.
  Dual eval_dual(const std::vector<cplx>& z, const std::vector<cplx>& dz) const;
  std::string str() const;

  friend Expr operator+(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a, const Expr& b);
  friend Expr operator*(const Expr& a, const Expr& b);
  friend Expr operator/(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a);
  friend Expr exp(const Expr& a);
  friend Expr sin(const Expr& a);
  friend Expr cos(const Expr& a);

private:
  struct Node {
    Op op;
    cplx value{};
    int index = -1;
    std::shared_ptr<const Node> lhs, rhs;
  };
  explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Expr make(Op op, const Expr& a, const Expr& b = Expr(std::shared_ptr<const Node>()));
  static Dual eval_node(const Node& n, const std::vector<cplx>& z, const std::vector<cplx>& dz);
  static std::string str_node(const Node& n);
  std::shared_ptr<const Node> node_;
};

Expr exp(const Expr& a);
Expr sin(const Expr& a);
Expr cos(const Expr& a);

/// Map C^r -> chart of P_r given by homogeneous components; chart coordinates are h_k / h_0.
struct CoveringMap {
  std::vector<Expr> homogeneous;

  int r() const { return static_cast<int>(homogeneous.size()) - 1; }
  std::vector<cplx> eval(const std::vector<cplx>& z) const;
  /// Chart value and its derivative along v.
  std::pair<std::vector<cplx>, std::vector<cplx>> eval_with_derivative(const std::vector<cplx>& z, const std::vector<cplx>& v) const;
  std::string str() const;
};

} // namespace crtube
