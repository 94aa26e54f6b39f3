#pragma once

// Closed-form A and B functions for the group classes with known formulas.
//
// Each formula is stored as a FormulaTemplate: a prefactor times a product of
// linear factors times a sum of terms, where every coefficient and pole is a
// sum of c * p^(a m + b). Evaluating a template at (p, m) gives a RationalGF.

#include <string>
#include <string_view>
#include <vector>

#include "simconj/family_id.hpp"
#include "simconj/rational_gf.hpp"

namespace simconj {

enum class FormulaId {
  central_quotient_p2,
  central_quotient_p3_no_abelian_max,
  central_quotient_p3_abelian_max,
  maximal_class_abelian_max,
  maximal_class_P1P3,
  extraspecial_p5,
  dihedral_even,
  maximal_class_2group,
  table_row,
};

std::string_view formula_name(FormulaId id);

// c * p^(a m + b)
struct PowerTerm {
  Rational c = 1;
  int a = 0;
  int b = 0;
};
using PowerSum = std::vector<PowerTerm>;

// (1 - pole t)^exponent
struct LinearFactor {
  PowerSum pole;
  int exponent = -1;
};

// coefficient * t^t_degree * prod factors
struct TemplateTerm {
  PowerSum coefficient;
  int t_degree = 0;
  std::vector<LinearFactor> factors;
};

struct FormulaTemplate {
  PowerSum prefactor{PowerTerm{}};
  std::vector<LinearFactor> outer;
  std::vector<TemplateTerm> terms;

  RationalGF evaluate(const Rational& p, int m = 0) const;
};

enum class MaximalClassCase { abelian_max, p1p3_no_abelian_max };

struct GfPair {
  RationalGF a;
  RationalGF b;
};

// |G| = p^m, |G/Z(G)| = p^2. Requires p prime, m >= 3.
RationalGF a_central_quotient_p2(int p, int m);
RationalGF b_central_quotient_p2(int p, int m);

// |G| = p^m, |G/Z(G)| = p^3. Requires p prime, m >= 4.
RationalGF a_central_quotient_p3(int p, int m, bool has_abelian_max);
RationalGF b_central_quotient_p3(int p, int m, bool has_abelian_max);

// Maximal class of order p^m with positive degree of commutativity. Requires m >= 4.
RationalGF a_maximal_class(int p, int m, MaximalClassCase c);
RationalGF b_maximal_class(int p, int m, MaximalClassCase c);

// Dihedral group of order 2n. Requires n even, n >= 4.
RationalGF a_dihedral(int n);
RationalGF b_dihedral(int n);

// Maximal-class 2-groups of order 2^n (dihedral, semidihedral, quaternion). Requires n >= 3.
RationalGF a_maximal_class_2group(int n);
RationalGF b_maximal_class_2group(int n);

// Extraspecial groups of order p^5.
RationalGF a_extraspecial_p5(int p);
RationalGF b_extraspecial_p5(int p);
// The uncorrected B display (1 - t)/((1 - pt)(1 - p^4 t)). It does
// not match the centralizer recursion; kept so tests can demonstrate that.
RationalGF b_extraspecial_p5_uncorrected(int p);

// Normalized (A, B) row for an isoclinism family. Gamma families need p = 2,
// Phi families an odd prime, the abelian row any prime.
GfPair table_row(Family family, int p);

const FormulaTemplate& formula_template(FormulaId id, char which, MaximalClassCase c = MaximalClassCase::abelian_max);

bool is_prime(int n);

}  // namespace simconj
