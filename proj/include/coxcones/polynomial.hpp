/*
 * Copyright 2026 the coxcones authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "coxcones/context.hpp"
#include "coxcones/monomial.hpp"
#include "coxcones/scalar.hpp"

namespace coxcones {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A sparse multivariate polynomial with exact coefficients over Q (field
/// tag 0) or F_p, in a fixed variable context.  Terms are kept in descending
/// grevlex order and never store a zero coefficient, so iteration order and
/// printed output are reproducible.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Scalar, GrevlexGreater>;

  Polynomial() = default;
  explicit Polynomial(Ctx ctx, std::uint32_t field = 0) : ctx_(std::move(ctx)), field_(field) {}

  static Polynomial zero(Ctx ctx, std::uint32_t field = 0) { return Polynomial(std::move(ctx), field); }

  static Polynomial constant(Ctx ctx, const Scalar& c) {
    Polynomial p(std::move(ctx), c.modulus());
    p.add_term(Monomial::one(p.ctx_->var_count()), c);
    return p;
  }

  static Polynomial variable(const Ctx& ctx, int var, std::uint32_t field = 0) {
    Polynomial p(ctx, field);
    Monomial m = Monomial::one(ctx->var_count());
    m.exp.at(var) = 1;
    p.add_term(m, Scalar::in_field(1, field));
    return p;
  }

  static Polynomial variable(const Ctx& ctx, const std::string& name, std::uint32_t field = 0) {
    int v = ctx->index_of(name);
    if (v < 0) throw ContextMismatch("unknown variable " + name);
    return variable(ctx, v, field);
  }

  const Ctx& ctx() const { return ctx_; }
  std::uint32_t field() const { return field_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }

  void add_term(const Monomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    if (static_cast<int>(m.exp.size()) != ctx_->var_count())
      throw ContextMismatch("monomial length does not match context");
    if (c.modulus() != field_) throw FieldError("coefficient field does not match polynomial field");
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  const Monomial& leading_monomial() const {
    if (is_zero()) throw std::logic_error("leading term of the zero polynomial");
    return terms_.begin()->first;
  }
  const Scalar& leading_coeff() const {
    if (is_zero()) throw std::logic_error("leading term of the zero polynomial");
    return terms_.begin()->second;
  }

  int total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total());
    return d;
  }

  Polynomial operator-() const {
    Polynomial r(ctx_, field_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }

  Polynomial operator+(const Polynomial& o) const {
    check_compat(o);
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
  }
  Polynomial operator-(const Polynomial& o) const {
    check_compat(o);
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
  }
  Polynomial operator*(const Polynomial& o) const {
    check_compat(o);
    Polynomial r(ctx_, field_);
    for (const auto& [ma, ca] : terms_)
      for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
    return r;
  }
  Polynomial operator*(const Scalar& s) const {
    Polynomial r(ctx_, field_);
    if (s.is_zero()) return r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * s);
    return r;
  }
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }

  /// Product of a single term with *this.
  Polynomial times_term(const Monomial& m, const Scalar& c) const {
    Polynomial r(ctx_, field_);
    if (c.is_zero()) return r;
    for (const auto& [mm, cc] : terms_) r.terms_.emplace(mm * m, cc * c);
    return r;
  }

  bool operator==(const Polynomial& o) const {
    if (field_ != o.field_) return false;
    if (terms_.size() != o.terms_.size()) return false;
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    for (; a != terms_.end(); ++a, ++b)
      if (a->first != b->first || a->second != b->second) return false;
    return true;
  }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  /// Common degree vector of all terms under the context grading, or nullopt
  /// when the terms disagree (inhomogeneous).  The zero polynomial is
  /// homogeneous of every degree; it reports the zero vector.
  std::optional<std::vector<long long>> multidegree() const {
    std::vector<long long> deg(ctx_->rank(), 0);
    bool first = true;
    for (const auto& [m, c] : terms_) {
      std::vector<long long> d(ctx_->rank(), 0);
      for (int v = 0; v < ctx_->var_count(); ++v) {
        if (!m.exp[v]) continue;
        const auto& vd = ctx_->degree(v);
        for (int i = 0; i < ctx_->rank(); ++i) d[i] += static_cast<long long>(m.exp[v]) * vd[i];
      }
      if (first) {
        deg = d;
        first = false;
      } else if (d != deg) {
        return std::nullopt;
      }
    }
    return deg;
  }

  Scalar evaluate(std::span<const Scalar> point) const {
    if (static_cast<int>(point.size()) != ctx_->var_count())
      throw ContextMismatch("evaluation point length does not match variable count");
    Scalar acc = Scalar::in_field(0, field_);
    for (const auto& [m, c] : terms_) {
      Scalar t = c;
      for (int v = 0; v < ctx_->var_count(); ++v)
        if (m.exp[v]) t *= point[v].pow(m.exp[v]);
      acc += t;
    }
    return acc;
  }

  /// Re-express this polynomial in another context, matching variables by
  /// name.  Throws when a used variable is absent from the target.
  Polynomial transplanted(const Ctx& target) const {
    Polynomial r(target, field_);
    std::vector<int> remap(ctx_->var_count(), -1);
    for (int v = 0; v < ctx_->var_count(); ++v) remap[v] = target->index_of(ctx_->name(v));
    for (const auto& [m, c] : terms_) {
      Monomial mm = Monomial::one(target->var_count());
      for (int v = 0; v < ctx_->var_count(); ++v) {
        if (!m.exp[v]) continue;
        if (remap[v] < 0) throw ContextMismatch("variable " + ctx_->name(v) + " absent from target context");
        mm.exp[remap[v]] = m.exp[v];
      }
      r.add_term(mm, c);
    }
    return r;
  }

  std::string str() const;
  static Polynomial parse(const Ctx& ctx, const std::string& text, std::uint32_t field = 0);

 private:
  void check_compat(const Polynomial& o) const {
    require_same_ctx(ctx_, o.ctx_);
    if (field_ != o.field_) throw FieldError("mixed ground fields in polynomial arithmetic");
  }

  Ctx ctx_;
  std::uint32_t field_ = 0;
  TermMap terms_;
};

inline Polynomial poly_mul(const Polynomial& p, const Polynomial& q) { return p * q; }

}  // namespace coxcones
