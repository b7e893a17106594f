#include "srsphere/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace srsphere {

Vars Vars::ambient(int dim) {
  std::vector<std::string> names;
  names.reserve(static_cast<size_t>(dim));
  for (int i = 0; i < dim; ++i) names.push_back("x" + std::to_string(i));
  return Vars(std::move(names));
}

Poly Poly::constant(const Vars& v, const Rational& c) {
  Poly p(v);
  p.add_term(Exponents(static_cast<size_t>(v.size()), 0), c);
  return p;
}

Poly Poly::var(const Vars& v, int i) {
  if (i < 0 || i >= v.size()) throw std::out_of_range("Poly::var: index out of range");
  Exponents e(static_cast<size_t>(v.size()), 0);
  e[static_cast<size_t>(i)] = 1;
  return monomial(v, std::move(e), Rational(1));
}

Poly Poly::monomial(const Vars& v, Exponents e, const Rational& c) {
  if (static_cast<int>(e.size()) != v.size())
    throw std::invalid_argument("Poly::monomial: exponent size mismatch");
  Poly p(v);
  p.add_term(e, c);
  return p;
}

int Poly::total_degree() const {
  if (terms_.empty()) return -1;
  return srsphere::total_degree(terms_.rbegin()->first);
}

int Poly::degree_in(int var) const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<size_t>(var)]);
  return d;
}

void Poly::add_term(const Exponents& e, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Poly::check_same_vars(const Poly& o) const {
  if (vars_ != o.vars_) throw std::invalid_argument("Poly: variable lists differ");
}

Poly Poly::operator-() const {
  Poly r(vars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  check_same_vars(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_same_vars(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_same_vars(b);
  Poly r(a.vars_);
  Exponents e(static_cast<size_t>(a.vars_.size()), 0);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

Poly operator*(const Rational& c, const Poly& p) {
  Poly r(p.vars_);
  if (c.is_zero()) return r;
  for (const auto& [e, pc] : p.terms_) r.terms_.emplace(e, c * pc);
  return r;
}

Poly Poly::derivative(int var) const {
  Poly r(vars_);
  const auto v = static_cast<size_t>(var);
  for (const auto& [e, c] : terms_) {
    if (e[v] == 0) continue;
    Exponents de = e;
    de[v] -= 1;
    r.add_term(de, Rational(e[v]) * c);
  }
  return r;
}

Poly Poly::substitute(const std::vector<Poly>& images) const {
  if (static_cast<int>(images.size()) != vars_.size())
    throw std::invalid_argument("Poly::substitute: wrong number of images");
  const Vars target = images.empty() ? Vars() : images.front().vars();
  for (const auto& im : images)
    if (im.vars() != target) throw std::invalid_argument("Poly::substitute: mixed image variables");

  // Memoize powers per variable; degrees here are tiny.
  std::vector<std::vector<Poly>> pow(images.size());
  auto power = [&](size_t i, int k) -> const Poly& {
    auto& cache = pow[i];
    if (cache.empty()) cache.push_back(Poly::constant(target, Rational(1)));
    while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * images[i]);
    return cache[static_cast<size_t>(k)];
  };

  Poly r(target);
  for (const auto& [e, c] : terms_) {
    Poly term = Poly::constant(target, c);
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) term = term * power(i, e[i]);
    r += term;
  }
  return r;
}

double Poly::eval(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != vars_.size())
    throw std::invalid_argument("Poly::eval: point dimension mismatch");
  double acc = 0;
  for (const auto& [e, c] : terms_) {
    double m = c.to_double();
    for (size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) m *= x[i];
    acc += m;
  }
  return acc;
}

Rational Poly::eval_exact(std::span<const Rational> x) const {
  if (static_cast<int>(x.size()) != vars_.size())
    throw std::invalid_argument("Poly::eval_exact: point dimension mismatch");
  Rational acc(0);
  for (const auto& [e, c] : terms_) {
    Rational m = c;
    for (size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) m *= x[i];
    acc += m;
  }
  return acc;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Print leading (grlex-largest) terms first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) os << (c.sign() >= 0 ? " + " : " - ");
    else if (c.sign() < 0) os << "-";
    first = false;
    const Rational ac = c.sign() < 0 ? -c : c;
    const bool is_const_term = srsphere::total_degree(e) == 0;
    if (ac != Rational(1) || is_const_term) os << ac.str();
    bool printed_var = false;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (printed_var || ac != Rational(1)) os << "*";
      os << vars_.name(static_cast<int>(i));
      if (e[i] > 1) os << "^" << e[i];
      printed_var = true;
    }
  }
  return os.str();
}

Poly radius_squared(const Vars& v) {
  Poly r(v);
  for (int i = 0; i < v.size(); ++i) {
    Exponents e(static_cast<size_t>(v.size()), 0);
    e[static_cast<size_t>(i)] = 2;
    r.add_term(e, Rational(1));
  }
  return r;
}

Poly reduce_mod_sphere(const Poly& f) {
  const Vars& vars = f.vars();
  const int n = vars.size();

  // 1 - sum_{i>=1} x_i^2, the replacement for x0^2.
  Poly rep = Poly::constant(vars, Rational(1));
  for (int i = 1; i < n; ++i) {
    Exponents e(static_cast<size_t>(n), 0);
    e[static_cast<size_t>(i)] = 2;
    rep.add_term(e, Rational(-1));
  }

  Poly work = f;
  for (;;) {
    Poly done(vars), pending(vars);
    for (const auto& [e, c] : work.terms()) {
      if (e[0] >= 2) {
        Exponents q = e;
        q[0] -= 2;
        pending += Poly::monomial(vars, std::move(q), c) * rep;
      } else {
        done.add_term(e, c);
      }
    }
    if (pending.is_zero()) return done;
    work = done + pending;
  }
}

}  // namespace srsphere
