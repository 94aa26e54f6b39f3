#include "simconj/rational_gf.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "simconj/error.hpp"

namespace simconj {

namespace {

// s with (1 - q t) s = p, assuming 1/q is a root of p.
Polynomial divide_linear(const Polynomial& p, const Rational& q) {
  Polynomial s(p.size() - 1);
  Rational carry = 0;
  for (std::size_t k = 0; k + 1 < p.size(); ++k) {
    carry = p[k] + q * carry;
    s[k] = carry;
  }
  return s;
}

Polynomial linear_power(const Rational& q, int e) {
  Polynomial out{Rational(1)};
  const Polynomial lin{Rational(1), Rational(-q)};
  for (int i = 0; i < e; ++i) out = poly_mul(out, lin);
  return out;
}

std::string term_text(const Rational& magnitude, std::size_t k) {
  std::string var = k == 0 ? "" : (k == 1 ? "t" : "t^" + std::to_string(k));
  if (k == 0) return rational_to_string(magnitude);
  if (magnitude == 1) return var;
  if (magnitude.get_den() == 1) return rational_to_string(magnitude) + var;
  return "(" + rational_to_string(magnitude) + ")" + var;
}

std::string poly_text(const Polynomial& p) {
  if (p.empty()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p[k] == 0) continue;
    const bool neg = p[k] < 0;
    const Rational mag = abs(p[k]);
    if (first) {
      out += (neg ? "-" : "") + term_text(mag, k);
    } else {
      out += (neg ? " - " : " + ") + term_text(mag, k);
    }
    first = false;
  }
  return out;
}

std::size_t poly_terms(const Polynomial& p) {
  return static_cast<std::size_t>(std::count_if(p.begin(), p.end(), [](const Rational& c) { return c != 0; }));
}

std::string factor_text(const Rational& q, int e) {
  std::string s = "(1 - " + term_text(q, 1) + ")";
  if (e != 1) s += "^" + std::to_string(e);
  return s;
}

Rational parse_rational(std::string_view s) {
  Rational r;
  if (s.empty() || r.set_str(std::string(s), 10) != 0) {
    throw Error(ErrorKind::parse_error, "bad rational '" + std::string(s) + "'");
  }
  if (r.get_den() == 0) throw Error(ErrorKind::parse_error, "zero denominator in '" + std::string(s) + "'");
  r.canonicalize();
  return r;
}

}  // namespace

std::string rational_to_string(const Rational& r) { return r.get_str(); }

void poly_trim(Polynomial& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Polynomial poly_mul(const Polynomial& a, const Polynomial& b) {
  if (a.empty() || b.empty()) return {};
  Polynomial out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  poly_trim(out);
  return out;
}

Polynomial poly_add(const Polynomial& a, const Polynomial& b) {
  Polynomial out(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  poly_trim(out);
  return out;
}

Rational poly_eval(const Polynomial& p, const Rational& t) {
  Rational acc = 0;
  for (std::size_t k = p.size(); k-- > 0;) acc = acc * t + p[k];
  return acc;
}

RationalGF::RationalGF(Polynomial numerator, std::vector<Pole> denominator) : num_(std::move(numerator)) {
  for (auto& c : num_) c.canonicalize();
  std::sort(denominator.begin(), denominator.end(), [](const Pole& a, const Pole& b) { return a.q < b.q; });
  for (auto& pole : denominator) {
    pole.q.canonicalize();
    if (pole.q <= 0) throw Error(ErrorKind::invalid_parameters, "poles must be positive");
    if (!den_.empty() && den_.back().q == pole.q) {
      den_.back().exponent += pole.exponent;
    } else {
      den_.push_back(pole);
    }
  }
  // Negative exponents are numerator factors.
  std::vector<Pole> kept;
  for (const auto& pole : den_) {
    if (pole.exponent < 0) {
      num_ = poly_mul(num_, linear_power(pole.q, -pole.exponent));
    } else if (pole.exponent > 0) {
      kept.push_back(pole);
    }
  }
  den_ = std::move(kept);
  reduce();
}

void RationalGF::reduce() {
  poly_trim(num_);
  if (num_.empty()) {
    den_.clear();
    return;
  }
  std::vector<Pole> kept;
  for (auto pole : den_) {
    const Rational root = 1 / pole.q;
    while (pole.exponent > 0 && num_.size() > 1 && poly_eval(num_, root) == 0) {
      num_ = divide_linear(num_, pole.q);
      --pole.exponent;
    }
    if (pole.exponent > 0) kept.push_back(pole);
  }
  den_ = std::move(kept);
}

RationalGF RationalGF::constant(const Rational& c) { return RationalGF(Polynomial{c}, {}); }

RationalGF RationalGF::polynomial(Polynomial p) { return RationalGF(std::move(p), {}); }

RationalGF RationalGF::geometric(const Rational& q, const Rational& c) { return RationalGF(Polynomial{c}, {Pole{q, 1}}); }

RationalGF RationalGF::factor(const Rational& q, int e) { return RationalGF(Polynomial{Rational(1)}, {Pole{q, -e}}); }

RationalGF RationalGF::t_power(int k) {
  Polynomial p(static_cast<std::size_t>(k) + 1, Rational(0));
  p.back() = 1;
  return RationalGF(std::move(p), {});
}

bool RationalGF::has_integer_poles() const {
  return std::all_of(den_.begin(), den_.end(), [](const Pole& p) { return p.q.get_den() == 1; });
}

Polynomial RationalGF::expanded_denominator() const {
  Polynomial d{Rational(1)};
  for (const auto& pole : den_) d = poly_mul(d, linear_power(pole.q, pole.exponent));
  return d;
}

RationalGF RationalGF::operator+(const RationalGF& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  std::vector<Pole> common;
  std::size_t i = 0, j = 0;
  while (i < den_.size() || j < o.den_.size()) {
    if (j == o.den_.size() || (i < den_.size() && den_[i].q < o.den_[j].q)) {
      common.push_back(den_[i++]);
    } else if (i == den_.size() || o.den_[j].q < den_[i].q) {
      common.push_back(o.den_[j++]);
    } else {
      common.push_back(Pole{den_[i].q, std::max(den_[i].exponent, o.den_[j].exponent)});
      ++i;
      ++j;
    }
  }
  auto lift = [&](const RationalGF& f) {
    Polynomial n = f.num_;
    for (const auto& pole : common) {
      int have = 0;
      for (const auto& fp : f.den_) {
        if (fp.q == pole.q) have = fp.exponent;
      }
      n = poly_mul(n, linear_power(pole.q, pole.exponent - have));
    }
    return n;
  };
  Polynomial num = poly_add(lift(*this), lift(o));
  return RationalGF(std::move(num), std::move(common));
}

RationalGF RationalGF::operator-() const { return scaled(-1); }

RationalGF RationalGF::operator-(const RationalGF& o) const { return *this + (-o); }

RationalGF RationalGF::operator*(const RationalGF& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Pole> den = den_;
  den.insert(den.end(), o.den_.begin(), o.den_.end());
  return RationalGF(poly_mul(num_, o.num_), std::move(den));
}

RationalGF RationalGF::scaled(const Rational& c) const {
  if (c == 0) return {};
  RationalGF out = *this;
  for (auto& a : out.num_) a *= c;
  return out;
}

RationalGF RationalGF::times_t() const {
  if (is_zero()) return {};
  RationalGF out = *this;
  out.num_.insert(out.num_.begin(), Rational(0));
  // 1/q is never a root of t * N(t) unless it was one of N, so no reduction needed.
  return out;
}

RationalGF RationalGF::divided_by_factor(const Rational& q, int e) const {
  std::vector<Pole> den = den_;
  den.push_back(Pole{q, e});
  return RationalGF(num_, std::move(den));
}

std::vector<Rational> RationalGF::series(std::size_t terms) const {
  std::vector<Rational> s(terms, Rational(0));
  const Polynomial d = expanded_denominator();
  for (std::size_t n = 0; n < terms; ++n) {
    Rational v = n < num_.size() ? num_[n] : Rational(0);
    for (std::size_t k = 1; k < d.size() && k <= n; ++k) v -= d[k] * s[n - k];
    s[n] = v;
  }
  return s;
}

Rational RationalGF::coefficient(std::size_t n) const { return series(n + 1)[n]; }

RationalGF RationalGF::normalized(const Rational& scale) const {
  if (scale <= 0) throw Error(ErrorKind::invalid_parameters, "normalization scale must be positive");
  Polynomial n = num_;
  Rational power = 1;
  for (auto& c : n) {
    c /= power;
    power *= scale;
  }
  std::vector<Pole> den = den_;
  for (auto& pole : den) pole.q /= scale;
  return RationalGF(std::move(n), std::move(den));
}

std::string RationalGF::serialize() const {
  std::ostringstream os;
  os << "num=[";
  for (std::size_t k = 0; k < num_.size(); ++k) os << (k ? "," : "") << rational_to_string(num_[k]);
  os << "];den=[";
  for (std::size_t k = 0; k < den_.size(); ++k) {
    os << (k ? "," : "") << "(" << rational_to_string(den_[k].q) << "," << den_[k].exponent << ")";
  }
  os << "]";
  return os.str();
}

RationalGF RationalGF::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  const std::string head = "num=[";
  const std::string mid = "];den=[";
  const auto split = s.find(mid);
  if (s.rfind(head, 0) != 0 || split == std::string::npos || s.back() != ']') {
    throw Error(ErrorKind::parse_error, "expected num=[...];den=[...]");
  }
  Polynomial num;
  const std::string nums = s.substr(head.size(), split - head.size());
  std::size_t pos = 0;
  while (pos < nums.size()) {
    const auto comma = std::min(nums.find(',', pos), nums.size());
    num.push_back(parse_rational(std::string_view(nums).substr(pos, comma - pos)));
    pos = comma + 1;
  }
  std::vector<Pole> den;
  const std::string dens = s.substr(split + mid.size(), s.size() - split - mid.size() - 1);
  pos = 0;
  while (pos < dens.size()) {
    if (dens[pos] != '(') throw Error(ErrorKind::parse_error, "expected '(' in denominator");
    const auto close = dens.find(')', pos);
    const auto comma = dens.find(',', pos);
    if (close == std::string::npos || comma == std::string::npos || comma > close) {
      throw Error(ErrorKind::parse_error, "malformed pole in denominator");
    }
    Pole pole;
    pole.q = parse_rational(std::string_view(dens).substr(pos + 1, comma - pos - 1));
    try {
      pole.exponent = std::stoi(dens.substr(comma + 1, close - comma - 1));
    } catch (const std::exception&) {
      throw Error(ErrorKind::parse_error, "bad pole exponent");
    }
    if (pole.exponent < 1 || pole.q <= 0) throw Error(ErrorKind::parse_error, "poles need q > 0 and e >= 1");
    den.push_back(pole);
    pos = close + 1;
    if (pos < dens.size()) {
      if (dens[pos] != ',') throw Error(ErrorKind::parse_error, "expected ',' between poles");
      ++pos;
    }
  }
  return RationalGF(std::move(num), std::move(den));
}

nlohmann::json RationalGF::to_json() const {
  nlohmann::json j;
  j["numerator"] = nlohmann::json::array();
  for (const auto& c : num_) j["numerator"].push_back(rational_to_string(c));
  j["denominator"] = nlohmann::json::array();
  for (const auto& pole : den_) j["denominator"].push_back({rational_to_string(pole.q), pole.exponent});
  return j;
}

std::string RationalGF::display() const {
  if (den_.empty()) return poly_text(num_);
  std::string n = poly_text(num_);
  if (poly_terms(num_) > 1) n = "(" + n + ")";
  std::string d;
  for (const auto& pole : den_) d += factor_text(pole.q, pole.exponent);
  if (den_.size() > 1 || den_.front().exponent > 1) d = "(" + d + ")";
  return n + "/" + d;
}

RationalGF PartialFractions::recombine() const {
  RationalGF out = RationalGF::polynomial(polynomial_part);
  for (const auto& term : terms) {
    out = out + RationalGF(Polynomial{term.coefficient}, {Pole{term.pole, term.exponent}});
  }
  return out;
}

nlohmann::json PartialFractions::to_json() const {
  nlohmann::json j;
  j["polynomial"] = nlohmann::json::array();
  for (const auto& c : polynomial_part) j["polynomial"].push_back(rational_to_string(c));
  j["terms"] = nlohmann::json::array();
  for (const auto& term : terms) {
    j["terms"].push_back({term.coefficient.get_num().get_str(), term.coefficient.get_den().get_str(),
                          rational_to_string(term.pole), term.exponent});
  }
  return j;
}

std::string PartialFractions::display() const {
  std::string out;
  if (!polynomial_part.empty()) out = poly_text(polynomial_part);
  for (const auto& term : terms) {
    const bool neg = term.coefficient < 0;
    const Rational mag = abs(term.coefficient);
    std::string c = mag.get_den() == 1 ? rational_to_string(mag) : "(" + rational_to_string(mag) + ")";
    std::string piece = c + "/" + factor_text(term.pole, term.exponent);
    if (out.empty()) {
      out = (neg ? "-" : "") + piece;
    } else {
      out += (neg ? " - " : " + ") + piece;
    }
  }
  return out.empty() ? "0" : out;
}

PartialFractions partial_fractions(const RationalGF& f) {
  PartialFractions pf;
  if (f.is_zero()) return pf;
  const Polynomial& num = f.numerator();
  const Polynomial den = f.expanded_denominator();
  const std::size_t deg_n = num.size() - 1;
  const std::size_t deg_d = den.size() - 1;

  // Basis polynomials whose combination must equal the numerator.
  std::vector<Polynomial> basis;
  std::vector<std::pair<Rational, int>> labels;
  for (std::size_t k = 0; k < f.denominator().size(); ++k) {
    const auto& pole = f.denominator()[k];
    for (int j = 1; j <= pole.exponent; ++j) {
      Polynomial b{Rational(1)};
      for (std::size_t l = 0; l < f.denominator().size(); ++l) {
        const auto& other = f.denominator()[l];
        b = poly_mul(b, linear_power(other.q, l == k ? other.exponent - j : other.exponent));
      }
      basis.push_back(std::move(b));
      labels.emplace_back(pole.q, j);
    }
  }
  const std::size_t poly_unknowns = deg_n >= deg_d ? deg_n - deg_d + 1 : 0;
  for (std::size_t i = 0; i < poly_unknowns; ++i) {
    Polynomial b(i, Rational(0));
    b.insert(b.end(), den.begin(), den.end());
    basis.push_back(std::move(b));
  }

  const std::size_t m = basis.size();
  std::vector<std::vector<Rational>> a(m, std::vector<Rational>(m + 1, Rational(0)));
  for (std::size_t row = 0; row < m; ++row) {
    for (std::size_t col = 0; col < m; ++col) a[row][col] = row < basis[col].size() ? basis[col][row] : Rational(0);
    a[row][m] = row < num.size() ? num[row] : Rational(0);
  }
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t piv = col;
    while (piv < m && a[piv][col] == 0) ++piv;
    if (piv == m) throw Error(ErrorKind::invalid_parameters, "singular partial-fraction system");
    std::swap(a[piv], a[col]);
    const Rational inv = 1 / a[col][col];
    for (auto& v : a[col]) v *= inv;
    for (std::size_t row = 0; row < m; ++row) {
      if (row == col || a[row][col] == 0) continue;
      const Rational factor = a[row][col];
      for (std::size_t c = col; c <= m; ++c) a[row][c] -= factor * a[col][c];
    }
  }
  for (std::size_t k = 0; k < labels.size(); ++k) {
    if (a[k][m] != 0) pf.terms.push_back(PartialFractionTerm{a[k][m], labels[k].first, labels[k].second});
  }
  for (std::size_t i = 0; i < poly_unknowns; ++i) pf.polynomial_part.push_back(a[labels.size() + i][m]);
  poly_trim(pf.polynomial_part);
  return pf;
}

bool gf_equal(const RationalGF& a, const RationalGF& b) { return a == b; }

}  // namespace simconj
