#pragma once

// Exact rational functions of one variable with a factored denominator.
//
// A RationalGF is N(t) / prod_k (1 - q_k t)^{e_k} with N a polynomial over Q
// and distinct poles q_k > 0 kept in ascending order. Every instance is stored
// reduced: N(1/q_k) != 0 for every listed pole. Reduced forms are canonical, so
// equality is structural.

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace simconj {

using Rational = mpq_class;
using Integer = mpz_class;
using Polynomial = std::vector<Rational>;  // coefficient of t^k at index k

struct Pole {
  Rational q;
  int exponent = 1;

  friend bool operator==(const Pole& a, const Pole& b) { return a.q == b.q && a.exponent == b.exponent; }
};

class RationalGF {
 public:
  // The zero function.
  RationalGF() = default;
  // Reduces numerator / prod (1 - q t)^e. Poles must be positive; repeated
  // poles are merged.
  RationalGF(Polynomial numerator, std::vector<Pole> denominator);

  static RationalGF constant(const Rational& c);
  static RationalGF polynomial(Polynomial p);
  // c / (1 - q t)
  static RationalGF geometric(const Rational& q, const Rational& c = 1);
  // (1 - q t)^e for any integer e
  static RationalGF factor(const Rational& q, int e);
  static RationalGF t_power(int k);

  const Polynomial& numerator() const { return num_; }
  const std::vector<Pole>& denominator() const { return den_; }
  bool is_zero() const { return num_.empty(); }
  // False once normalization has introduced a non-integral pole.
  bool has_integer_poles() const;
  Polynomial expanded_denominator() const;

  RationalGF operator+(const RationalGF& o) const;
  RationalGF operator-(const RationalGF& o) const;
  RationalGF operator*(const RationalGF& o) const;
  RationalGF operator-() const;
  RationalGF scaled(const Rational& c) const;
  RationalGF times_t() const;
  // this / (1 - q t)^e
  RationalGF divided_by_factor(const Rational& q, int e = 1) const;

  // First `terms` Taylor coefficients at t = 0.
  std::vector<Rational> series(std::size_t terms) const;
  Rational coefficient(std::size_t n) const;

  // t -> t / scale: coefficients a_k -> a_k / scale^k, poles q -> q / scale.
  RationalGF normalized(const Rational& scale) const;

  friend bool operator==(const RationalGF& a, const RationalGF& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  // Machine form: "num=[c0,c1,...];den=[(q,e),...]" with c_i and q exact fractions.
  std::string serialize() const;
  static RationalGF parse(std::string_view text);
  nlohmann::json to_json() const;
  // Human form, e.g. "(1 - t)/((1 - 2t)(1 - 4t))".
  std::string display() const;

 private:
  void reduce();

  Polynomial num_;
  std::vector<Pole> den_;
};

struct PartialFractionTerm {
  Rational coefficient;
  Rational pole;
  int exponent = 1;
};

// f = polynomial_part(t) + sum coefficient / (1 - pole t)^exponent
struct PartialFractions {
  Polynomial polynomial_part;
  std::vector<PartialFractionTerm> terms;  // poles ascending, then exponent ascending

  RationalGF recombine() const;
  nlohmann::json to_json() const;
  std::string display() const;
};

PartialFractions partial_fractions(const RationalGF& f);

bool gf_equal(const RationalGF& a, const RationalGF& b);

// Polynomial helpers shared with the closed-form evaluators.
Polynomial poly_mul(const Polynomial& a, const Polynomial& b);
Polynomial poly_add(const Polynomial& a, const Polynomial& b);
void poly_trim(Polynomial& p);
Rational poly_eval(const Polynomial& p, const Rational& t);

std::string rational_to_string(const Rational& r);

}  // namespace simconj
