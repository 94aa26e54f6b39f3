#include "simconj/closed_forms.hpp"

#include <array>

#include "simconj/error.hpp"

namespace simconj {

namespace {

// Shorthands for writing formulas as data.
PowerTerm P(int a, int b, Rational c = 1) { return PowerTerm{std::move(c), a, b}; }
PowerTerm K(Rational c) { return PowerTerm{std::move(c), 0, 0}; }
LinearFactor pole(PowerSum q, int exponent = -1) { return LinearFactor{std::move(q), exponent}; }
LinearFactor pole_m(int a, int b, int exponent = -1) { return pole({P(a, b)}, exponent); }
TemplateTerm term(PowerSum coef, std::vector<LinearFactor> factors, int t_degree = 0) {
  return TemplateTerm{std::move(coef), t_degree, std::move(factors)};
}

Rational power(const Rational& p, int e) {
  Rational out = 1;
  const Rational base = e >= 0 ? p : 1 / p;
  for (int i = 0; i < (e >= 0 ? e : -e); ++i) out *= base;
  return out;
}

Rational eval_sum(const PowerSum& s, const Rational& p, int m) {
  Rational out = 0;
  for (const auto& t : s) out += t.c * power(p, t.a * m + t.b);
  return out;
}

RationalGF eval_factors(const std::vector<LinearFactor>& fs, const Rational& p, int m) {
  RationalGF out = RationalGF::constant(1);
  for (const auto& f : fs) out = out * RationalGF::factor(eval_sum(f.pole, p, m), f.exponent);
  return out;
}

// 1/p^m [ p^{m-2}/(1-p^m t) + (p^m - p^{m-2})/(1-p^{m-1} t) ]
const FormulaTemplate kCq2A{{P(-1, 0)}, {}, {
    term({P(1, -2)}, {pole_m(1, 0)}),
    term({P(1, 0), P(1, -2, -1)}, {pole_m(1, -1)}),
}};
// (1 - p^{m-3} t) / ((1 - p^{m-2} t)(1 - p^{m-1} t))
const FormulaTemplate kCq2B{{K(1)}, {}, {
    term({K(1)}, {pole_m(1, -3, 1), pole_m(1, -2), pole_m(1, -1)}),
}};

// no abelian maximal subgroup
const FormulaTemplate kCq3NoA{{P(-1, 0)}, {}, {
    term({P(1, -3)}, {pole_m(1, 0)}),
    term({P(1, 0), P(1, -3, -1)}, {pole_m(1, -2)}),
}};
const FormulaTemplate kCq3NoB{{K(1)}, {}, {
    term({K(1)}, {pole_m(1, -5, 1), pole_m(1, -2), pole_m(1, -3)}),
}};

// abelian maximal subgroup
const FormulaTemplate kCq3AbA{{P(-1, 0)}, {}, {
    term({P(1, -3)}, {pole_m(1, 0)}),
    term({P(1, -1), P(1, -3, -1)}, {pole_m(1, -1)}),
    term({P(1, 0), P(1, -1, -1)}, {pole_m(1, -2)}),
}};
const FormulaTemplate kCq3AbB{{K(1)}, {pole_m(1, -3)}, {
    term({K(1)}, {}),
    term({P(1, -2), P(1, -4, -1)}, {pole_m(1, -1)}, 1),
    term({P(1, -2), P(1, -3, -1)}, {pole_m(1, -2)}, 1),
}};

const FormulaTemplate kMcAbA{{P(-1, 0)}, {}, {
    term({P(0, 1)}, {pole_m(1, 0)}),
    term({P(1, 0), P(1, -1, -1)}, {pole_m(0, 2)}),
    term({P(1, -1), P(0, 1, -1)}, {pole_m(1, -1)}),
}};
const FormulaTemplate kMcAbB{{K(1)}, {pole_m(0, 1)}, {
    term({K(1)}, {}),
    term({P(1, -2), K(-1)}, {pole_m(1, -1)}, 1),
    term({P(0, 2), P(0, 1, -1)}, {pole_m(0, 2)}, 1),
}};

const FormulaTemplate kMcP13A{{P(-1, 0)}, {}, {
    term({P(0, 1)}, {pole_m(1, 0)}),
    term({P(1, 0), P(1, -1, -1)}, {pole_m(0, 2)}),
    term({P(1, -1), P(1, -3, -1)}, {pole_m(1, -2)}),
    term({P(1, -3), P(0, 1, -1)}, {pole_m(1, -1)}),
}};
const FormulaTemplate kMcP13B{{K(1)}, {pole_m(0, 1)}, {
    term({K(1)}, {}),
    term({P(1, -4), K(-1)}, {pole_m(1, -4, 1), pole_m(1, -2), pole_m(1, -3)}, 1),
    term({P(1, -3), P(1, -5, -1)}, {pole_m(1, -2)}, 1),
    term({P(0, 2), P(0, 1, -1)}, {pole_m(0, 2)}, 1),
}};

// Dihedral of order 2n, evaluated with p := n.
const FormulaTemplate kDihA{{P(0, -1, Rational(1, 2))}, {}, {
    term({K(2)}, {pole({P(0, 1, 2)})}),
    term({P(0, 1)}, {pole({K(4)})}),
    term({P(0, 1), K(-2)}, {pole({P(0, 1)})}),
}};
const FormulaTemplate kDihB{{K(1)}, {pole({K(2)})}, {
    term({K(1)}, {}),
    term({P(0, 1, Rational(1, 2)), K(-1)}, {pole({P(0, 1)})}, 1),
    term({K(2)}, {pole({K(4)})}, 1),
}};

const FormulaTemplate kEx5A{{P(0, -5)}, {}, {
    term({P(0, 1)}, {pole_m(0, 5)}),
    term({P(0, 5), P(0, 1, -1)}, {pole_m(0, 4)}),
}};
// (1/(1-pt)) [1 + (p^4 - 1) t (1 - pt) / ((1 - p^2 t)(1 - p^3 t))]
const FormulaTemplate kEx5B{{K(1)}, {pole_m(0, 1)}, {
    term({K(1)}, {}),
    term({P(0, 4), K(-1)}, {pole_m(0, 1, 1), pole_m(0, 2), pole_m(0, 3)}, 1),
}};
const FormulaTemplate kEx5BUncorrected{{K(1)}, {}, {
    term({K(1)}, {pole({K(1)}, 1), pole_m(0, 1), pole_m(0, 4)}),
}};

void require_prime(int p) {
  if (!is_prime(p)) throw Error(ErrorKind::invalid_parameters, "p = " + std::to_string(p) + " is not prime");
}

void require_m(int m, int lo, std::string_view what) {
  if (m < lo) throw Error(ErrorKind::invalid_parameters, std::string(what) + " needs m >= " + std::to_string(lo));
}

// Table rows: all poles are p^b with b <= 0.
LinearFactor q(int b) { return pole_m(0, b); }

struct Row {
  FormulaTemplate a;
  FormulaTemplate b;
};

const Row kRowAbelian{{{K(1)}, {}, {term({K(1)}, {q(0)})}}, {{K(1)}, {}, {term({K(1)}, {q(0)})}}};
const Row kRowPhi2{
    {{K(1)}, {}, {term({K(1), P(0, -2, -1)}, {q(-1)}), term({P(0, -2)}, {q(0)})}},
    {{K(1)}, {}, {term({P(0, -1, -1)}, {q(-2)}), term({K(1), P(0, -1)}, {q(-1)})}},
};
const Row kRowPhi3{
    {{K(1)}, {}, {term({K(1), P(0, -1, -1)}, {q(-2)}), term({P(0, -1), P(0, -3, -1)}, {q(-1)}), term({P(0, -3)}, {q(0)})}},
    {{K(1)}, {}, {term({P(0, -1, -1)}, {q(-3)}), term({K(1)}, {q(-2)}), term({P(0, -1)}, {q(-1)})}},
};
const Row kRowPhi5{
    {{K(1)}, {}, {term({K(1), P(0, -4, -1)}, {q(-1)}), term({P(0, -4)}, {q(0)})}},
    {{K(1)}, {}, {
        term({K(1)}, {q(-4)}),
        term({P(0, 1, -1), K(-1), P(0, -1, -1), P(0, -2, -1)}, {q(-3)}),
        term({P(0, 1), K(1), P(0, -1), P(0, -2)}, {q(-2)}),
    }},
};
const FormulaTemplate kRowBPhi6{{K(1)}, {}, {
    term({P(0, -1, -1), P(0, -2, -1)}, {q(-3)}),
    term({K(1), P(0, -1), P(0, -2)}, {q(-2)}),
}};
const Row kRowPhi6{
    {{K(1)}, {}, {term({K(1), P(0, -3, -1)}, {q(-2)}), term({P(0, -3)}, {q(0)})}},
    kRowBPhi6,
};
const Row kRowPhi7{
    {{K(1)}, {}, {term({K(1), P(0, -2, -1)}, {q(-2)}), term({P(0, -2), P(0, -4, -1)}, {q(-1)}), term({P(0, -4)}, {q(0)})}},
    kRowBPhi6,
};
const Row kRowPhi9{
    {{K(1)}, {}, {term({K(1), P(0, -1, -1)}, {q(-3)}), term({P(0, -1), P(0, -4, -1)}, {q(-1)}), term({P(0, -4)}, {q(0)})}},
    {{K(1)}, {}, {term({P(0, -1, -1)}, {q(-4)}), term({K(1)}, {q(-3)}), term({P(0, -1)}, {q(-1)})}},
};
const Row kRowPhi10{
    {{K(1)}, {}, {
        term({K(1), P(0, -1, -1)}, {q(-3)}),
        term({P(0, -1), P(0, -3, -1)}, {q(-2)}),
        term({P(0, -3), P(0, -4, -1)}, {q(-1)}),
        term({P(0, -4)}, {q(0)}),
    }},
    {{K(1)}, {}, {
        term({P(0, -1, -1)}, {q(-4)}),
        term({K(1), P(0, -2, -1)}, {q(-3)}),
        term({P(0, -1), P(0, -2)}, {q(-2)}),
    }},
};

const Row& row_for(Family f) {
  switch (f) {
    case Family::abelian: return kRowAbelian;
    case Family::phi2: case Family::gamma2: return kRowPhi2;
    case Family::phi3: case Family::phi4: case Family::gamma3: case Family::gamma4: return kRowPhi3;
    case Family::phi5: case Family::gamma5: return kRowPhi5;
    case Family::phi6: return kRowPhi6;
    case Family::phi7: case Family::phi8: case Family::gamma6: case Family::gamma7: return kRowPhi7;
    case Family::phi9: case Family::gamma8: return kRowPhi9;
    case Family::phi10: return kRowPhi10;
  }
  throw Error(ErrorKind::invalid_parameters, "unknown family");
}

}  // namespace

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::string_view formula_name(FormulaId id) {
  static constexpr std::array<std::string_view, 9> names = {
      "central_quotient_p2", "central_quotient_p3_no_abelian_max", "central_quotient_p3_abelian_max",
      "maximal_class_abelian_max", "maximal_class_P1P3", "extraspecial_p5",
      "dihedral_even", "maximal_class_2group", "table_row",
  };
  return names[static_cast<std::size_t>(id)];
}

RationalGF FormulaTemplate::evaluate(const Rational& p, int m) const {
  RationalGF sum;
  for (const auto& t : terms) {
    RationalGF piece = RationalGF::constant(eval_sum(t.coefficient, p, m)) * eval_factors(t.factors, p, m);
    for (int k = 0; k < t.t_degree; ++k) piece = piece.times_t();
    sum = sum + piece;
  }
  return (sum * eval_factors(outer, p, m)).scaled(eval_sum(prefactor, p, m));
}

const FormulaTemplate& formula_template(FormulaId id, char which, MaximalClassCase c) {
  const bool a = which == 'A' || which == 'a';
  switch (id) {
    case FormulaId::central_quotient_p2: return a ? kCq2A : kCq2B;
    case FormulaId::central_quotient_p3_no_abelian_max: return a ? kCq3NoA : kCq3NoB;
    case FormulaId::central_quotient_p3_abelian_max: return a ? kCq3AbA : kCq3AbB;
    case FormulaId::maximal_class_abelian_max: return a ? kMcAbA : kMcAbB;
    case FormulaId::maximal_class_P1P3: return a ? kMcP13A : kMcP13B;
    case FormulaId::extraspecial_p5: return a ? kEx5A : kEx5B;
    case FormulaId::dihedral_even: case FormulaId::maximal_class_2group: return a ? kDihA : kDihB;
    case FormulaId::table_row: break;
  }
  (void)c;
  throw Error(ErrorKind::invalid_parameters, "table rows are selected with table_row()");
}

RationalGF a_central_quotient_p2(int p, int m) {
  require_prime(p);
  require_m(m, 3, "central_quotient_p2");
  return kCq2A.evaluate(p, m);
}

RationalGF b_central_quotient_p2(int p, int m) {
  require_prime(p);
  require_m(m, 3, "central_quotient_p2");
  return kCq2B.evaluate(p, m);
}

RationalGF a_central_quotient_p3(int p, int m, bool has_abelian_max) {
  require_prime(p);
  require_m(m, 4, "central_quotient_p3");
  return (has_abelian_max ? kCq3AbA : kCq3NoA).evaluate(p, m);
}

RationalGF b_central_quotient_p3(int p, int m, bool has_abelian_max) {
  require_prime(p);
  require_m(m, 4, "central_quotient_p3");
  return (has_abelian_max ? kCq3AbB : kCq3NoB).evaluate(p, m);
}

RationalGF a_maximal_class(int p, int m, MaximalClassCase c) {
  require_prime(p);
  require_m(m, 4, "maximal_class");
  return (c == MaximalClassCase::abelian_max ? kMcAbA : kMcP13A).evaluate(p, m);
}

RationalGF b_maximal_class(int p, int m, MaximalClassCase c) {
  require_prime(p);
  require_m(m, 4, "maximal_class");
  return (c == MaximalClassCase::abelian_max ? kMcAbB : kMcP13B).evaluate(p, m);
}

RationalGF a_dihedral(int n) {
  if (n < 4 || n % 2) throw Error(ErrorKind::invalid_parameters, "dihedral formula needs even n >= 4");
  return kDihA.evaluate(n);
}

RationalGF b_dihedral(int n) {
  if (n < 4 || n % 2) throw Error(ErrorKind::invalid_parameters, "dihedral formula needs even n >= 4");
  return kDihB.evaluate(n);
}

RationalGF a_maximal_class_2group(int n) {
  if (n < 3 || n > 30) throw Error(ErrorKind::invalid_parameters, "maximal-class 2-group formula needs 3 <= n <= 30");
  return a_dihedral(1 << (n - 1));
}

RationalGF b_maximal_class_2group(int n) {
  if (n < 3 || n > 30) throw Error(ErrorKind::invalid_parameters, "maximal-class 2-group formula needs 3 <= n <= 30");
  return b_dihedral(1 << (n - 1));
}

RationalGF a_extraspecial_p5(int p) {
  require_prime(p);
  return kEx5A.evaluate(p);
}

RationalGF b_extraspecial_p5(int p) {
  require_prime(p);
  return kEx5B.evaluate(p);
}

RationalGF b_extraspecial_p5_uncorrected(int p) {
  require_prime(p);
  return kEx5BUncorrected.evaluate(p);
}

GfPair table_row(Family family, int p) {
  require_prime(p);
  if (is_gamma(family) && p != 2) throw Error(ErrorKind::invalid_parameters, "Gamma families are 2-groups; p must be 2");
  if (is_phi(family) && p == 2) throw Error(ErrorKind::invalid_parameters, "Phi families need an odd prime");
  const Row& row = row_for(family);
  return GfPair{row.a.evaluate(p), row.b.evaluate(p)};
}

}  // namespace simconj
