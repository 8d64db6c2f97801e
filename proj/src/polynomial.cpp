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

#include "coxcones/polynomial.hpp"

#include <cctype>
#include <sstream>

namespace coxcones {

namespace {

std::string monomial_str(const VarContext& ctx, const Monomial& m) {
  std::string s;
  for (int v = 0; v < ctx.var_count(); ++v) {
    if (!m.exp[v]) continue;
    if (!s.empty()) s += "*";
    s += ctx.name(v);
    if (m.exp[v] != 1) s += "^" + std::to_string(m.exp[v]);
  }
  return s;
}

}  // namespace

std::string Polynomial::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    bool negative = false;
    std::string coeff = c.str();
    if (!coeff.empty() && coeff[0] == '-') {  // only happens over Q
      negative = true;
      coeff = coeff.substr(1);
    }
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string mono = monomial_str(*ctx_, m);
    if (mono.empty()) {
      out += coeff;
    } else if (coeff == "1") {
      out += mono;
    } else {
      out += coeff + "*" + mono;
    }
  }
  return out;
}

namespace {

struct Lexer {
  const std::string& s;
  size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  bool accept(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  std::string integer() {
    skip_ws();
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) throw ParseError("expected an integer at position " + std::to_string(start));
    return s.substr(start, i - start);
  }
  std::string identifier() {
    skip_ws();
    size_t start = i;
    while (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) ++i;
    size_t alpha_end = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (alpha_end == start) throw ParseError("expected a variable at position " + std::to_string(start));
    return s.substr(start, i - start);
  }
};

}  // namespace

Polynomial Polynomial::parse(const Ctx& ctx, const std::string& text, std::uint32_t field) {
  Lexer lx{text};
  Polynomial out(ctx, field);

  auto scalar_from = [&](const std::string& num, const std::string& den) {
    if (!den.empty() && den.find_first_not_of('0') == std::string::npos)
      throw ParseError("zero denominator in coefficient");
    if (field) {
      Scalar n = Scalar::residue(std::stoll(num), field);
      if (den.empty()) return n;
      return n / Scalar::residue(std::stoll(den), field);
    }
    mpq_class q(num + (den.empty() ? "" : "/" + den));
    q.canonicalize();
    return Scalar(q);
  };

  bool expect_term = true;
  int term_sign = 1;
  while (!lx.done()) {
    if (!expect_term) {
      if (lx.accept('+')) {
        term_sign = 1;
      } else if (lx.accept('-')) {
        term_sign = -1;
      } else {
        throw ParseError("expected '+' or '-' at position " + std::to_string(lx.i));
      }
      expect_term = true;
      continue;
    }
    while (lx.accept('-')) term_sign = -term_sign;
    while (lx.accept('+')) {
    }

    Scalar coeff = Scalar::in_field(1, field);
    Monomial mono = Monomial::one(ctx->var_count());
    bool saw_factor = false;
    for (;;) {
      char c = lx.peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::string num = lx.integer();
        std::string den;
        if (lx.accept('/')) den = lx.integer();
        coeff *= scalar_from(num, den);
        saw_factor = true;
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        std::string name = lx.identifier();
        int v = ctx->index_of(name);
        if (v < 0) throw ParseError("unknown variable '" + name + "'");
        int e = 1;
        if (lx.accept('^')) e = std::stoi(lx.integer());
        if (e < 0) throw ParseError("negative exponent");
        mono.exp[v] += e;
        saw_factor = true;
      } else {
        break;
      }
      lx.accept('*');
    }
    if (!saw_factor) throw ParseError("empty term at position " + std::to_string(lx.i));
    if (term_sign < 0) coeff = -coeff;
    out.add_term(mono, coeff);
    term_sign = 1;
    expect_term = false;
  }
  if (expect_term) throw ParseError("trailing operator or empty input");
  return out;
}

}  // namespace coxcones
