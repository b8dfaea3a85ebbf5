#pragma once

#include <memory>
#include <string>
#include <vector>

#include "anacont/common.hpp"

namespace anacont {

// A branch cut along {anchor + t*exp(i*angle) : t >= 0}.
struct CutRay {
  Cx anchor;
  double angle = 0.0;

  // True if z lies on the ray within a relative slack eps.
  bool contains(Cx z, double eps = 1e-12) const;
};

namespace detail {
struct Node;
}

// Immutable symbolic function of one complex variable z.
//
// Grammar (round-trippable through parse/render):
//   expr    := term (('+'|'-') term)*
//   term    := factor (('*'|'/') factor)*
//   factor  := '-' factor | primary ('^' ['-'] INT)?
//   primary := NUMBER['i'] | 'i' | 'pi' | 'z' | '(' expr ')'
//            | 'exp' '(' expr ')' | 'log' '(' expr ')' | 'li2' '(' expr ')'
//            | 'recip' '(' expr ')'                    (sugar for 1/u)
//            | 'pow' '(' expr ',' const-expr ',' const-expr ')'
// pow(u, s, theta) is the branch power exp(s * Log_theta u) whose cut runs
// along the ray of angle theta; log uses the principal cut (-inf, 0] and
// li2 the cut [1, inf). Evaluation on a cut throws EvaluationError.
class FunctionExpr {
 public:
  FunctionExpr();  // the constant 0

  static FunctionExpr parse(const std::string& src);  // throws SyntaxError

  std::string render() const;
  Cx eval(Cx z) const;
  AnalyticFn fn() const;  // pointwise evaluator sharing this tree

  // Singularity metadata, tracked through affine arguments. When an
  // argument of a branch operation is too complicated to analyze, the
  // metadata is flagged unknown rather than silently wrong.
  bool singularities_known() const;
  bool is_entire() const;  // known, with no cuts and no poles
  const std::vector<CutRay>& cuts() const;
  const std::vector<Cx>& poles() const;

  // True if z lies on any recorded cut ray.
  bool on_cut(Cx z, double eps = 1e-12) const;

  friend bool tree_equal(const FunctionExpr& a, const FunctionExpr& b);

 private:
  explicit FunctionExpr(std::shared_ptr<const detail::Node> root);
  std::shared_ptr<const detail::Node> root_;
  bool known_ = true;
  std::vector<CutRay> cuts_;
  std::vector<Cx> poles_;
};

bool tree_equal(const FunctionExpr& a, const FunctionExpr& b);

// Shortest round-trip decimal form of x (via std::to_chars).
std::string format_double(double x);

}  // namespace anacont
