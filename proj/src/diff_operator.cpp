#include "srsphere/diff_operator.hpp"

#include <stdexcept>

namespace srsphere {

DiffOperator DiffOperator::sum_of_squares(std::span<const PolyVectorField> fields) {
  if (fields.empty()) throw std::invalid_argument("sum_of_squares: no fields");
  DiffOperator d(fields.front().vars());
  for (const auto& x : fields) d.add_term(Rational(1), {x, x});
  return d;
}

int DiffOperator::order() const {
  int k = 0;
  for (const auto& t : terms_) k = std::max(k, static_cast<int>(t.factors.size()));
  return k;
}

void DiffOperator::add_term(const Rational& c, std::vector<PolyVectorField> factors) {
  add_term(Poly::constant(vars_, c), std::move(factors));
}

void DiffOperator::add_term(Poly weight, std::vector<PolyVectorField> factors) {
  if (weight.vars() != vars_)
    throw std::invalid_argument("DiffOperator::add_term: weight variable mismatch");
  for (const auto& f : factors)
    if (f.vars() != vars_)
      throw std::invalid_argument("DiffOperator::add_term: factor variable mismatch");
  if (weight.is_zero()) return;
  terms_.push_back(Term{std::move(weight), std::move(factors)});
}

Poly DiffOperator::apply(const Poly& f) const {
  if (f.vars() != vars_) throw std::invalid_argument("operator_apply: variable list mismatch");
  Poly out(vars_);
  for (const auto& t : terms_) {
    Poly g = f;
    for (auto it = t.factors.rbegin(); it != t.factors.rend(); ++it) g = it->apply(g);
    out += t.weight * g;
  }
  return out;
}

DiffOperator& DiffOperator::operator+=(const DiffOperator& o) {
  if (terms_.empty() && vars_ != o.vars_ && vars_.size() == 0) vars_ = o.vars_;
  if (vars_ != o.vars_) throw std::invalid_argument("DiffOperator: variable list mismatch");
  terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
  return *this;
}

DiffOperator& DiffOperator::operator-=(const DiffOperator& o) {
  if (vars_ != o.vars_) throw std::invalid_argument("DiffOperator: variable list mismatch");
  for (const auto& t : o.terms_) terms_.push_back(Term{Rational(-1) * t.weight, t.factors});
  return *this;
}

}  // namespace srsphere
