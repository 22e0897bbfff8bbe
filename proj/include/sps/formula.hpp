/*
 * Copyright 2026 The sps-games authors
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
#include <memory>
#include <string>
#include <vector>

#include "sps/core.hpp"

namespace sps {

/**
 * A Boolean formula over variables indexed 0..m-1. Variable i stands for
 * "vertex set i is visited infinitely often" when used as an Emerson-Lei
 * objective.
 */
class BooleanFormula {
 public:
  enum class Kind : uint8_t { constant, var, neg, conj, disj };

  static BooleanFormula constant(bool v) {
    BooleanFormula f;
    f.kind_ = Kind::constant;
    f.value_ = v;
    return f;
  }
  static BooleanFormula var(int index) {
    BooleanFormula f;
    f.kind_ = Kind::var;
    f.index_ = index;
    return f;
  }
  static BooleanFormula neg(BooleanFormula a) {
    if (a.kind_ == Kind::constant)
      return constant(!a.value_);
    BooleanFormula f;
    f.kind_ = Kind::neg;
    f.parts_.push_back(std::move(a));
    return f;
  }
  static BooleanFormula conj(std::vector<BooleanFormula> parts) {
    return nary(Kind::conj, std::move(parts));
  }
  static BooleanFormula disj(std::vector<BooleanFormula> parts) {
    return nary(Kind::disj, std::move(parts));
  }

  BooleanFormula operator&&(const BooleanFormula& o) const {
    return conj({*this, o});
  }
  BooleanFormula operator||(const BooleanFormula& o) const {
    return disj({*this, o});
  }
  BooleanFormula operator!() const { return neg(*this); }

  Kind kind() const { return kind_; }
  int var_index() const { return index_; }
  const std::vector<BooleanFormula>& parts() const { return parts_; }

  bool eval(uint64_t valuation) const {
    switch (kind_) {
      case Kind::constant:
        return value_;
      case Kind::var:
        return (valuation >> index_) & 1u;
      case Kind::neg:
        return !parts_[0].eval(valuation);
      case Kind::conj:
        for (const auto& p : parts_)
          if (!p.eval(valuation))
            return false;
        return true;
      case Kind::disj:
        for (const auto& p : parts_)
          if (p.eval(valuation))
            return true;
        return false;
    }
    return false;
  }

  int max_var() const {
    int m = -1;
    visit_vars([&](int i) { m = std::max(m, i); });
    return m;
  }

  template <typename F>
  void visit_vars(F&& f) const {
    if (kind_ == Kind::var)
      f(index_);
    for (const auto& p : parts_)
      p.visit_vars(f);
  }

  /**
   * Substitutes variables: `subst[i]` is the new index of variable i, or -1
   * to fix it to false. Constant-folds on the way.
   */
  BooleanFormula remap(const std::vector<int>& subst) const {
    switch (kind_) {
      case Kind::constant:
        return *this;
      case Kind::var:
        if (index_ >= static_cast<int>(subst.size()) || subst[index_] < 0)
          return constant(false);
        return var(subst[index_]);
      case Kind::neg: {
        return neg(parts_[0].remap(subst));
      }
      case Kind::conj:
      case Kind::disj: {
        const bool is_and = kind_ == Kind::conj;
        std::vector<BooleanFormula> ps;
        for (const auto& p : parts_) {
          BooleanFormula q = p.remap(subst);
          if (q.kind_ == Kind::constant) {
            if (q.value_ == is_and)
              continue;  // neutral element
            return constant(!is_and);
          }
          ps.push_back(std::move(q));
        }
        if (ps.empty())
          return constant(is_and);
        if (ps.size() == 1)
          return ps[0];
        return nary(kind_, std::move(ps));
      }
    }
    return constant(false);
  }

  /** Size as the number of conjunctions and disjunctions. */
  int connective_count() const {
    int c = 0;
    if (kind_ == Kind::conj || kind_ == Kind::disj)
      c += static_cast<int>(parts_.size()) - 1;
    for (const auto& p : parts_)
      c += p.connective_count();
    return c;
  }

  std::string to_string(
      const std::vector<std::string>& var_names = {}) const {
    auto vname = [&](int i) {
      if (i < static_cast<int>(var_names.size()))
        return var_names[i];
      return "x" + std::to_string(i);
    };
    switch (kind_) {
      case Kind::constant:
        return value_ ? "true" : "false";
      case Kind::var:
        return vname(index_);
      case Kind::neg:
        return "!" + parts_[0].to_string(var_names);
      case Kind::conj:
      case Kind::disj: {
        std::string sep = kind_ == Kind::conj ? " & " : " | ";
        std::string s = "(";
        for (size_t i = 0; i < parts_.size(); ++i) {
          if (i)
            s += sep;
          s += parts_[i].to_string(var_names);
        }
        return s + ")";
      }
    }
    return "?";
  }

 private:
  static BooleanFormula nary(Kind k, std::vector<BooleanFormula> parts) {
    if (parts.empty())
      return constant(k == Kind::conj);
    if (parts.size() == 1)
      return parts[0];
    BooleanFormula f;
    f.kind_ = k;
    f.parts_ = std::move(parts);
    return f;
  }

  Kind kind_ = Kind::constant;
  bool value_ = false;
  int index_ = -1;
  std::vector<BooleanFormula> parts_;
};

}  // namespace sps
