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

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace coxcones {

class FieldError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An element of the ground field: an exact rational when modulus() == 0,
/// otherwise a residue in F_p for a prime p < 2^31.  Mixing the two fields in
/// one operation throws FieldError.  Rationals are kept canonical (lowest
/// terms, positive denominator); residues are kept in [0, p).
class Scalar {
 public:
  Scalar() : mod_(0), rat_(0) {}
  Scalar(long v) : mod_(0), rat_(v) {}  // NOLINT: implicit by design
  explicit Scalar(mpq_class v) : mod_(0), rat_(std::move(v)) { rat_.canonicalize(); }

  static Scalar residue(long long v, std::uint32_t p) {
    if (p < 2) throw FieldError("modulus must be at least 2");
    Scalar s;
    s.mod_ = p;
    long long r = v % static_cast<long long>(p);
    if (r < 0) r += p;
    s.res_ = r;
    return s;
  }

  /// Zero or one in the same field as `like`.
  static Scalar zero_like(const Scalar& like) {
    return like.mod_ ? residue(0, like.mod_) : Scalar(0L);
  }
  static Scalar one_like(const Scalar& like) {
    return like.mod_ ? residue(1, like.mod_) : Scalar(1L);
  }
  static Scalar in_field(long long v, std::uint32_t mod) {
    return mod ? residue(v, mod) : Scalar(mpq_class(static_cast<long>(v)));
  }

  std::uint32_t modulus() const { return mod_; }
  bool is_zero() const { return mod_ ? res_ == 0 : rat_ == 0; }
  bool is_one() const { return mod_ ? res_ == 1 : rat_ == 1; }
  const mpq_class& rational() const {
    require_rational();
    return rat_;
  }
  long long residue_value() const {
    if (!mod_) throw FieldError("residue_value: not a prime-field element");
    return res_;
  }

  Scalar operator-() const {
    if (mod_) return residue(mod_ - res_, mod_);
    return Scalar(mpq_class(-rat_));
  }

  Scalar operator+(const Scalar& o) const {
    check(o);
    if (mod_) return residue(res_ + o.res_, mod_);
    return Scalar(mpq_class(rat_ + o.rat_));
  }
  Scalar operator-(const Scalar& o) const {
    check(o);
    if (mod_) return residue(res_ - o.res_, mod_);
    return Scalar(mpq_class(rat_ - o.rat_));
  }
  Scalar operator*(const Scalar& o) const {
    check(o);
    if (mod_) return residue(res_ * o.res_ % mod_, mod_);
    return Scalar(mpq_class(rat_ * o.rat_));
  }
  Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  Scalar inverse() const {
    if (is_zero()) throw FieldError("division by zero");
    if (!mod_) return Scalar(mpq_class(1 / rat_));
    // extended Euclid; mod_ prime
    long long t = 0, nt = 1, r = mod_, nr = res_;
    while (nr != 0) {
      long long q = r / nr;
      long long tmp = t - q * nt;
      t = nt;
      nt = tmp;
      tmp = r - q * nr;
      r = nr;
      nr = tmp;
    }
    if (r != 1) throw FieldError("inverse: modulus not prime or zero divisor");
    return residue(t, mod_);
  }

  Scalar pow(unsigned long k) const {
    Scalar acc = one_like(*this), base = *this;
    while (k) {
      if (k & 1) acc *= base;
      base *= base;
      k >>= 1;
    }
    return acc;
  }

  bool operator==(const Scalar& o) const {
    if (mod_ != o.mod_) return false;
    return mod_ ? res_ == o.res_ : rat_ == o.rat_;
  }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::string str() const {
    if (mod_) return std::to_string(res_);
    return rat_.get_str();
  }

 private:
  void require_rational() const {
    if (mod_) throw FieldError("expected a rational, got a prime-field residue");
  }
  void check(const Scalar& o) const {
    if (mod_ != o.mod_) throw FieldError("mixed ground fields in scalar arithmetic");
  }

  std::uint32_t mod_;      // 0 = rationals
  long long res_ = 0;      // residue when mod_ != 0
  mpq_class rat_;          // value when mod_ == 0
};

}  // namespace coxcones
