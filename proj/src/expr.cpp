#include "anacont/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <optional>
#include <utility>

#include "anacont/branches.hpp"
#include "anacont/errors.hpp"
#include "anacont/special.hpp"

namespace anacont {

bool CutRay::contains(Cx z, double eps) const {
  const Cx w = (z - anchor) * std::exp(Cx(0.0, -angle));
  return std::abs(w.imag()) <= eps * (1.0 + std::abs(w)) &&
         w.real() >= -eps * (1.0 + std::abs(w));
}

std::string format_double(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  (void)ec;
  return std::string(buf, ptr);
}

namespace detail {

enum class Op {
  Const,
  Var,
  Add,
  Sub,
  Mul,
  Div,
  Neg,
  PowInt,
  Exp,
  Log,
  Li2,
  PowBranch
};

struct Node {
  Op op = Op::Const;
  Cx value{0.0, 0.0};   // Const
  int exponent = 0;     // PowInt
  Cx pb_exponent;       // PowBranch: s
  double pb_cut = 0.0;  // PowBranch: cut angle theta
  std::shared_ptr<const Node> a, b;
};

using NodePtr = std::shared_ptr<const Node>;

NodePtr make_const(Cx v) {
  auto n = std::make_shared<Node>();
  n->op = Op::Const;
  n->value = v;
  return n;
}

NodePtr make_unary(Op op, NodePtr a) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->a = std::move(a);
  return n;
}

NodePtr make_binary(Op op, NodePtr a, NodePtr b) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->a = std::move(a);
  n->b = std::move(b);
  return n;
}

bool is_const(const NodePtr& n) { return n->op == Op::Const; }

// Build an arithmetic node, folding when all operands are constants.
NodePtr fold_binary(Op op, NodePtr a, NodePtr b) {
  if (is_const(a) && is_const(b)) {
    switch (op) {
      case Op::Add:
        return make_const(a->value + b->value);
      case Op::Sub:
        return make_const(a->value - b->value);
      case Op::Mul:
        return make_const(a->value * b->value);
      case Op::Div:
        if (b->value != Cx(0.0, 0.0)) {
          return make_const(a->value / b->value);
        }
        break;
      default:
        break;
    }
  }
  return make_binary(op, std::move(a), std::move(b));
}

NodePtr fold_neg(NodePtr a) {
  if (is_const(a)) return make_const(-a->value);
  return make_unary(Op::Neg, std::move(a));
}

Cx ipow(Cx u, int n) {
  if (n < 0) return Cx(1.0, 0.0) / ipow(u, -n);
  Cx r{1.0, 0.0};
  Cx base = u;
  unsigned e = static_cast<unsigned>(n);
  while (e != 0) {
    if (e & 1u) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

NodePtr fold_powint(NodePtr a, int k) {
  if (k == 0) return make_const(Cx(1.0, 0.0));
  if (k == 1) return a;
  if (is_const(a) && !(k < 0 && a->value == Cx(0.0, 0.0))) {
    return make_const(ipow(a->value, k));
  }
  auto n = std::make_shared<Node>();
  n->op = Op::PowInt;
  n->exponent = k;
  n->a = std::move(a);
  return n;
}

bool is_integer_exponent(Cx s) {
  return s.imag() == 0.0 && std::nearbyint(s.real()) == s.real() &&
         std::abs(s.real()) < 1e9;
}

Cx eval_node(const Node* n, Cx z) {
  switch (n->op) {
    case Op::Const:
      return n->value;
    case Op::Var:
      return z;
    case Op::Add:
      return eval_node(n->a.get(), z) + eval_node(n->b.get(), z);
    case Op::Sub:
      return eval_node(n->a.get(), z) - eval_node(n->b.get(), z);
    case Op::Mul:
      return eval_node(n->a.get(), z) * eval_node(n->b.get(), z);
    case Op::Div: {
      const Cx num = eval_node(n->a.get(), z);
      const Cx den = eval_node(n->b.get(), z);
      if (den == Cx(0.0, 0.0)) {
        throw EvaluationError("division by zero during evaluation");
      }
      return num / den;
    }
    case Op::Neg:
      return -eval_node(n->a.get(), z);
    case Op::PowInt: {
      const Cx u = eval_node(n->a.get(), z);
      if (n->exponent < 0 && u == Cx(0.0, 0.0)) {
        throw EvaluationError("negative power of zero during evaluation");
      }
      return ipow(u, n->exponent);
    }
    case Op::Exp:
      return std::exp(eval_node(n->a.get(), z));
    case Op::Log: {
      const Cx u = eval_node(n->a.get(), z);
      if (u.imag() == 0.0 && u.real() <= 0.0) {
        throw EvaluationError("log: point lies on the branch cut (-inf, 0]");
      }
      return std::log(u);
    }
    case Op::Li2:
      return li2(eval_node(n->a.get(), z));
    case Op::PowBranch: {
      const Cx u = eval_node(n->a.get(), z);
      const Cx s = n->pb_exponent;
      if (u == Cx(0.0, 0.0)) {
        if (s == Cx(0.0, 0.0)) return Cx(1.0, 0.0);
        if (s.imag() == 0.0 && s.real() > 0.0) return Cx(0.0, 0.0);
        throw EvaluationError("pow: zero base with non-positive exponent");
      }
      if (is_integer_exponent(s)) {
        return ipow(u, static_cast<int>(s.real()));
      }
      const double a = arg_branch(u, BranchCut{n->pb_cut});
      if (a == n->pb_cut) {
        throw EvaluationError("pow: point lies on the branch cut");
      }
      return std::exp(s * Cx(std::log(std::abs(u)), a));
    }
  }
  throw EvaluationError("corrupt expression node");
}

// ---------------------------------------------------------------------------
// Singularity analysis. Affine subexpressions alpha*z + beta are tracked
// exactly; cuts of branch operations are only computable for affine
// arguments, otherwise the expression is flagged `known = false`.

struct Analysis {
  bool known = true;
  std::vector<CutRay> cuts;
  std::vector<Cx> poles;
  bool affine = false;
  Cx alpha{0.0, 0.0}, beta{0.0, 0.0};
  bool zeros_known = false;
  std::vector<Cx> zeros;
};

void merge_into(Analysis& dst, const Analysis& src) {
  dst.known = dst.known && src.known;
  dst.cuts.insert(dst.cuts.end(), src.cuts.begin(), src.cuts.end());
  dst.poles.insert(dst.poles.end(), src.poles.begin(), src.poles.end());
}

bool contains_point(const std::vector<Cx>& pts, Cx p) {
  for (const Cx& q : pts) {
    if (std::abs(q - p) <= 1e-12 * (1.0 + std::abs(p))) return true;
  }
  return false;
}

// Zero set of the affine map alpha*z + beta.
void affine_zeros(Analysis& a) {
  if (a.alpha != Cx(0.0, 0.0)) {
    a.zeros_known = true;
    a.zeros = {-a.beta / a.alpha};
  } else {
    a.zeros_known = (a.beta != Cx(0.0, 0.0));
    a.zeros.clear();
  }
}

// Cut ray, in the z-plane, of a branch operation whose u-space cut is the
// ray of angle theta_u anchored at u = anchor_u, applied to u = alpha*z+beta.
CutRay pull_back_cut(Cx alpha, Cx beta, Cx anchor_u, double theta_u) {
  const Cx dir = std::exp(Cx(0.0, theta_u)) / alpha;
  return CutRay{(anchor_u - beta) / alpha, std::arg(dir)};
}

Analysis analyze(const Node* n) {
  Analysis r;
  switch (n->op) {
    case Op::Const: {
      r.affine = true;
      r.alpha = Cx(0.0, 0.0);
      r.beta = n->value;
      affine_zeros(r);
      return r;
    }
    case Op::Var: {
      r.affine = true;
      r.alpha = Cx(1.0, 0.0);
      r.beta = Cx(0.0, 0.0);
      affine_zeros(r);
      return r;
    }
    case Op::Neg: {
      Analysis a = analyze(n->a.get());
      r = a;
      r.alpha = -a.alpha;
      r.beta = -a.beta;
      return r;
    }
    case Op::Add:
    case Op::Sub: {
      Analysis a = analyze(n->a.get());
      Analysis b = analyze(n->b.get());
      merge_into(r, a);
      merge_into(r, b);
      const double sgn = n->op == Op::Add ? 1.0 : -1.0;
      if (a.affine && b.affine) {
        r.affine = true;
        r.alpha = a.alpha + sgn * b.alpha;
        r.beta = a.beta + sgn * b.beta;
        affine_zeros(r);
      }
      return r;
    }
    case Op::Mul: {
      Analysis a = analyze(n->a.get());
      Analysis b = analyze(n->b.get());
      merge_into(r, a);
      merge_into(r, b);
      if (a.affine && b.affine) {
        if (b.alpha == Cx(0.0, 0.0)) {
          r.affine = true;
          r.alpha = a.alpha * b.beta;
          r.beta = a.beta * b.beta;
        } else if (a.alpha == Cx(0.0, 0.0)) {
          r.affine = true;
          r.alpha = b.alpha * a.beta;
          r.beta = b.beta * a.beta;
        }
        if (r.affine) affine_zeros(r);
      }
      if (!r.affine && a.zeros_known && b.zeros_known) {
        r.zeros_known = true;
        r.zeros = a.zeros;
        r.zeros.insert(r.zeros.end(), b.zeros.begin(), b.zeros.end());
      }
      return r;
    }
    case Op::Div: {
      Analysis a = analyze(n->a.get());
      Analysis b = analyze(n->b.get());
      merge_into(r, a);
      merge_into(r, b);
      if (!b.zeros_known) {
        r.known = false;
      } else {
        for (const Cx& p : b.zeros) {
          // A shared zero would be removable; flag rather than fake a pole.
          if (!a.zeros_known || contains_point(a.zeros, p)) {
            if (!a.zeros_known) {
              r.poles.push_back(p);  // conservative: keep the candidate pole
              r.known = r.known && true;
            } else {
              r.known = false;
            }
          } else {
            r.poles.push_back(p);
          }
        }
      }
      if (a.affine && b.affine && b.alpha == Cx(0.0, 0.0) &&
          b.beta != Cx(0.0, 0.0)) {
        r.affine = true;
        r.alpha = a.alpha / b.beta;
        r.beta = a.beta / b.beta;
        affine_zeros(r);
      } else if (a.zeros_known && b.zeros_known) {
        bool overlap = false;
        for (const Cx& p : a.zeros) {
          if (contains_point(b.zeros, p)) overlap = true;
        }
        if (!overlap) {
          r.zeros_known = true;
          r.zeros = a.zeros;
        }
      }
      return r;
    }
    case Op::PowInt: {
      Analysis a = analyze(n->a.get());
      merge_into(r, a);
      if (n->exponent >= 1) {
        r.zeros_known = a.zeros_known;
        r.zeros = a.zeros;
        if (n->exponent == 1) {
          r.affine = a.affine;
          r.alpha = a.alpha;
          r.beta = a.beta;
        }
      } else {
        if (a.zeros_known) {
          r.poles.insert(r.poles.end(), a.zeros.begin(), a.zeros.end());
        } else {
          r.known = false;
        }
      }
      return r;
    }
    case Op::Exp: {
      Analysis a = analyze(n->a.get());
      merge_into(r, a);
      r.zeros_known = true;  // exp never vanishes
      return r;
    }
    case Op::Log: {
      Analysis a = analyze(n->a.get());
      merge_into(r, a);
      if (a.affine) {
        if (a.alpha != Cx(0.0, 0.0)) {
          r.cuts.push_back(pull_back_cut(a.alpha, a.beta, Cx(0.0, 0.0), kPi));
          r.zeros_known = true;
          r.zeros = {(Cx(1.0, 0.0) - a.beta) / a.alpha};
        }
        // log of a constant: no cut in z; evaluation handles bad constants.
      } else {
        r.known = false;
      }
      return r;
    }
    case Op::Li2: {
      Analysis a = analyze(n->a.get());
      merge_into(r, a);
      if (a.affine) {
        if (a.alpha != Cx(0.0, 0.0)) {
          r.cuts.push_back(pull_back_cut(a.alpha, a.beta, Cx(1.0, 0.0), 0.0));
        }
      } else {
        r.known = false;
      }
      return r;
    }
    case Op::PowBranch: {
      Analysis a = analyze(n->a.get());
      merge_into(r, a);
      const Cx s = n->pb_exponent;
      if (is_integer_exponent(s)) {
        const int k = static_cast<int>(s.real());
        if (k >= 0) {
          r.zeros_known = a.zeros_known;
          r.zeros = a.zeros;
        } else if (a.zeros_known) {
          r.poles.insert(r.poles.end(), a.zeros.begin(), a.zeros.end());
        } else {
          r.known = false;
        }
        return r;
      }
      if (a.affine && a.alpha != Cx(0.0, 0.0)) {
        r.cuts.push_back(pull_back_cut(a.alpha, a.beta, Cx(0.0, 0.0),
                                       n->pb_cut));
        if (s.imag() == 0.0 && s.real() > 0.0) {
          r.zeros_known = a.zeros_known;
          r.zeros = a.zeros;
        }
      } else if (a.affine) {
        // Branch power of a constant: no cut in z.
        r.zeros_known = (a.beta != Cx(0.0, 0.0));
      } else {
        r.known = false;
      }
      return r;
    }
  }
  r.known = false;
  return r;
}

// ---------------------------------------------------------------------------
// Parser: recursive descent over the grammar documented in expr.hpp.

class Parser {
 public:
  explicit Parser(const std::string& src) : src_(src) {}

  NodePtr parse() {
    NodePtr e = parse_expr();
    skip_ws();
    if (pos_ != src_.size()) {
      throw SyntaxError("unexpected trailing input", pos_);
    }
    return e;
  }

 private:
  const std::string& src_;
  std::size_t pos_ = 0;

  void skip_ws() {
    while (pos_ < src_.size() &&
           std::isspace(static_cast<unsigned char>(src_[pos_]))) {
      ++pos_;
    }
  }

  bool peek_char(char c) {
    skip_ws();
    return pos_ < src_.size() && src_[pos_] == c;
  }

  bool accept_char(char c) {
    if (peek_char(c)) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect_char(char c, const char* what) {
    if (!accept_char(c)) {
      throw SyntaxError(std::string("expected '") + c + "' " + what, pos_);
    }
  }

  NodePtr parse_expr() {
    NodePtr lhs = parse_term();
    for (;;) {
      if (accept_char('+')) {
        lhs = fold_binary(Op::Add, lhs, parse_term());
      } else if (accept_char('-')) {
        lhs = fold_binary(Op::Sub, lhs, parse_term());
      } else {
        return lhs;
      }
    }
  }

  NodePtr parse_term() {
    NodePtr lhs = parse_factor();
    for (;;) {
      if (accept_char('*')) {
        lhs = fold_binary(Op::Mul, lhs, parse_factor());
      } else if (accept_char('/')) {
        lhs = fold_binary(Op::Div, lhs, parse_factor());
      } else {
        return lhs;
      }
    }
  }

  NodePtr parse_factor() {
    // Unary minus binds more loosely than '^': -z^2 is -(z^2).
    if (accept_char('-')) {
      return fold_neg(parse_factor());
    }
    NodePtr base = parse_primary();
    if (accept_char('^')) {
      skip_ws();
      const std::size_t at = pos_;
      bool neg = false;
      if (accept_char('-')) neg = true;
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < src_.size() &&
             std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        ++pos_;
      }
      if (pos_ == start) {
        throw SyntaxError("expected integer exponent after '^'", at);
      }
      int k = 0;
      auto [ptr, ec] =
          std::from_chars(src_.data() + start, src_.data() + pos_, k);
      (void)ptr;
      if (ec != std::errc()) {
        throw SyntaxError("integer exponent out of range", start);
      }
      base = fold_powint(base, neg ? -k : k);
    }
    return base;
  }

  NodePtr parse_primary() {
    skip_ws();
    if (pos_ >= src_.size()) {
      throw SyntaxError("unexpected end of input", pos_);
    }
    const char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      NodePtr e = parse_expr();
      expect_char(')', "to close parenthesis");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      return parse_number();
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      return parse_identifier();
    }
    throw SyntaxError("unexpected character", pos_);
  }

  NodePtr parse_number() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() &&
           (std::isdigit(static_cast<unsigned char>(src_[pos_])) ||
            src_[pos_] == '.')) {
      ++pos_;
    }
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      std::size_t p = pos_ + 1;
      if (p < src_.size() && (src_[p] == '+' || src_[p] == '-')) ++p;
      if (p < src_.size() && std::isdigit(static_cast<unsigned char>(src_[p]))) {
        pos_ = p;
        while (pos_ < src_.size() &&
               std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
          ++pos_;
        }
      }
    }
    const std::string text = src_.substr(start, pos_ - start);
    char* endp = nullptr;
    const double v = std::strtod(text.c_str(), &endp);
    if (endp == text.c_str() || *endp != '\0') {
      throw SyntaxError("malformed number", start);
    }
    if (pos_ < src_.size() && src_[pos_] == 'i') {
      ++pos_;
      return make_const(Cx(0.0, v));
    }
    return make_const(Cx(v, 0.0));
  }

  NodePtr parse_identifier() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
            src_[pos_] == '_')) {
      ++pos_;
    }
    const std::string name = src_.substr(start, pos_ - start);
    if (name == "z") {
      auto n = std::make_shared<Node>();
      n->op = Op::Var;
      return n;
    }
    if (name == "i") return make_const(Cx(0.0, 1.0));
    if (name == "pi") return make_const(Cx(kPi, 0.0));
    if (name == "exp" || name == "log" || name == "li2" || name == "recip") {
      expect_char('(', "after function name");
      NodePtr arg = parse_expr();
      expect_char(')', "to close function call");
      if (name == "exp") return make_unary(Op::Exp, arg);
      if (name == "log") return make_unary(Op::Log, arg);
      if (name == "li2") return make_unary(Op::Li2, arg);
      return fold_binary(Op::Div, make_const(Cx(1.0, 0.0)), arg);
    }
    if (name == "pow") {
      expect_char('(', "after function name");
      NodePtr base = parse_expr();
      expect_char(',', "between pow arguments");
      const std::size_t s_at = pos_;
      NodePtr s = parse_expr();
      if (s->op != Op::Const) {
        throw SyntaxError("pow exponent must be a constant", s_at);
      }
      expect_char(',', "between pow arguments");
      const std::size_t t_at = pos_;
      NodePtr t = parse_expr();
      if (t->op != Op::Const || t->value.imag() != 0.0) {
        throw SyntaxError("pow cut angle must be a real constant", t_at);
      }
      expect_char(')', "to close function call");
      auto n = std::make_shared<Node>();
      n->op = Op::PowBranch;
      n->a = base;
      n->pb_exponent = s->value;
      n->pb_cut = t->value.real();
      return n;
    }
    throw SyntaxError("unknown identifier '" + name + "'", start);
  }
};

// ---------------------------------------------------------------------------
// Rendering. Precedence: Add/Sub = 1, Mul/Div = 2, Neg = 3, PowInt = 4.

std::string render_const(Cx v) {
  if (v.imag() == 0.0) return format_double(v.real());
  if (v.real() == 0.0) return format_double(v.imag()) + "i";
  const std::string re = format_double(v.real());
  const double im = v.imag();
  if (im >= 0.0) return "(" + re + " + " + format_double(im) + "i)";
  return "(" + re + " - " + format_double(-im) + "i)";
}

std::string render_angle(double t) {
  if (t == kPi) return "pi";
  if (t == -kPi) return "-pi";
  return format_double(t);
}

std::string render_node(const Node* n, int parent_prec) {
  std::string out;
  int prec = 5;
  switch (n->op) {
    case Op::Const:
      out = render_const(n->value);
      // A bare negative literal binds like a negation.
      if (!out.empty() && out[0] == '-') prec = 3;
      break;
    case Op::Var:
      out = "z";
      break;
    case Op::Add:
      out = render_node(n->a.get(), 1) + " + " + render_node(n->b.get(), 2);
      prec = 1;
      break;
    case Op::Sub:
      out = render_node(n->a.get(), 1) + " - " + render_node(n->b.get(), 2);
      prec = 1;
      break;
    case Op::Mul:
      out = render_node(n->a.get(), 2) + "*" + render_node(n->b.get(), 3);
      prec = 2;
      break;
    case Op::Div:
      out = render_node(n->a.get(), 2) + "/" + render_node(n->b.get(), 3);
      prec = 2;
      break;
    case Op::Neg:
      out = "-" + render_node(n->a.get(), 3);
      prec = 3;
      break;
    case Op::PowInt:
      out = render_node(n->a.get(), 5) + "^" +
            (n->exponent < 0 ? "-" + std::to_string(-n->exponent)
                             : std::to_string(n->exponent));
      prec = 4;
      break;
    case Op::Exp:
      out = "exp(" + render_node(n->a.get(), 0) + ")";
      break;
    case Op::Log:
      out = "log(" + render_node(n->a.get(), 0) + ")";
      break;
    case Op::Li2:
      out = "li2(" + render_node(n->a.get(), 0) + ")";
      break;
    case Op::PowBranch:
      out = "pow(" + render_node(n->a.get(), 0) + ", " +
            render_const(n->pb_exponent) + ", " + render_angle(n->pb_cut) +
            ")";
      break;
  }
  if (prec < parent_prec) return "(" + out + ")";
  return out;
}

bool nodes_equal(const Node* x, const Node* y) {
  if (x == y) return true;
  if (x->op != y->op) return false;
  switch (x->op) {
    case Op::Const:
      return x->value == y->value;
    case Op::Var:
      return true;
    case Op::PowInt:
      if (x->exponent != y->exponent) return false;
      break;
    case Op::PowBranch:
      if (x->pb_exponent != y->pb_exponent || x->pb_cut != y->pb_cut) {
        return false;
      }
      break;
    default:
      break;
  }
  if ((x->a == nullptr) != (y->a == nullptr)) return false;
  if ((x->b == nullptr) != (y->b == nullptr)) return false;
  if (x->a && !nodes_equal(x->a.get(), y->a.get())) return false;
  if (x->b && !nodes_equal(x->b.get(), y->b.get())) return false;
  return true;
}

}  // namespace detail

FunctionExpr::FunctionExpr() : FunctionExpr(detail::make_const(Cx(0.0, 0.0))) {}

FunctionExpr::FunctionExpr(std::shared_ptr<const detail::Node> root)
    : root_(std::move(root)) {
  detail::Analysis a = detail::analyze(root_.get());
  known_ = a.known;
  cuts_ = std::move(a.cuts);
  poles_ = std::move(a.poles);
}

FunctionExpr FunctionExpr::parse(const std::string& src) {
  detail::Parser p(src);
  return FunctionExpr(p.parse());
}

std::string FunctionExpr::render() const {
  return detail::render_node(root_.get(), 0);
}

Cx FunctionExpr::eval(Cx z) const { return detail::eval_node(root_.get(), z); }

AnalyticFn FunctionExpr::fn() const {
  auto root = root_;
  return [root](Cx z) { return detail::eval_node(root.get(), z); };
}

bool FunctionExpr::singularities_known() const { return known_; }

bool FunctionExpr::is_entire() const {
  return known_ && cuts_.empty() && poles_.empty();
}

const std::vector<CutRay>& FunctionExpr::cuts() const { return cuts_; }

const std::vector<Cx>& FunctionExpr::poles() const { return poles_; }

bool FunctionExpr::on_cut(Cx z, double eps) const {
  for (const CutRay& c : cuts_) {
    if (c.contains(z, eps)) return true;
  }
  return false;
}

bool tree_equal(const FunctionExpr& a, const FunctionExpr& b) {
  return detail::nodes_equal(a.root_.get(), b.root_.get());
}

}  // namespace anacont
