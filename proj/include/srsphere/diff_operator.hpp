#pragma once

#include <span>
#include <vector>

#include "srsphere/vector_field.hpp"

namespace srsphere {

/// Linear differential operator: a sum of terms, each a polynomial weight times
/// an ordered composition of derivations. A term with factors (F0, F1, ..., Fk)
/// acts as weight * F0(F1(...Fk(f)...)), i.e. the rightmost factor is applied
/// first, matching the written composition F0 F1 ... Fk.
class DiffOperator {
public:
  struct Term {
    Poly weight;
    std::vector<PolyVectorField> factors;
  };

  DiffOperator() = default;
  explicit DiffOperator(Vars vars) : vars_(std::move(vars)) {}

  static DiffOperator zero(const Vars& v) { return DiffOperator(v); }

  /// sum_a X_a^2 over the given fields.
  static DiffOperator sum_of_squares(std::span<const PolyVectorField> fields);

  const Vars& vars() const { return vars_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  /// Max composition length over terms.
  int order() const;

  void add_term(const Rational& c, std::vector<PolyVectorField> factors);
  void add_term(Poly weight, std::vector<PolyVectorField> factors);

  Poly apply(const Poly& f) const;

  DiffOperator& operator+=(const DiffOperator& o);
  DiffOperator& operator-=(const DiffOperator& o);
  friend DiffOperator operator+(DiffOperator a, const DiffOperator& b) { return a += b; }
  friend DiffOperator operator-(DiffOperator a, const DiffOperator& b) { return a -= b; }

private:
  Vars vars_;
  std::vector<Term> terms_;
};

inline Poly operator_apply(const DiffOperator& d, const Poly& f) { return d.apply(f); }

}  // namespace srsphere
