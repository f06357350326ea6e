#include "binsum/bipoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <tuple>

namespace binsum {

namespace {

using Ring = PolyRing<PrimeField>;
using UPoly = Ring::Poly;

// Canonical order: larger total degree first, then larger X-degree.
bool term_before(const Term& a, const Term& b) {
  const std::uint32_t da = a.i + a.j, db = b.i + b.j;
  if (da != db) return da > db;
  return a.i > b.i;
}

void require_same_modulus(const BivariatePolynomial& a, const BivariatePolynomial& b) {
  if (a.modulus() != b.modulus()) throw Error("mixed moduli in bivariate arithmetic");
}

}  // namespace

void trim_rows(RecursivePoly& rows) {
  while (!rows.empty() && rows.back().empty()) rows.pop_back();
}

BivariatePolynomial BivariatePolynomial::from_terms(std::uint32_t p, std::vector<Term> terms) {
  BivariatePolynomial out(p);
  for (auto& t : terms) t.c %= p;
  std::sort(terms.begin(), terms.end(), term_before);
  for (const auto& t : terms) {
    if (!out.terms_.empty() && out.terms_.back().i == t.i && out.terms_.back().j == t.j) {
      out.terms_.back().c = (out.terms_.back().c + t.c) % p;
    } else {
      out.terms_.push_back(t);
    }
  }
  std::erase_if(out.terms_, [](const Term& t) { return t.c == 0; });
  return out;
}

BivariatePolynomial BivariatePolynomial::constant(std::uint32_t p, std::uint32_t c) {
  return from_terms(p, {Term{0, 0, c}});
}

BivariatePolynomial BivariatePolynomial::monomial(std::uint32_t p, std::uint32_t c,
                                                  std::uint32_t i, std::uint32_t j) {
  return from_terms(p, {Term{i, j, c}});
}

BivariatePolynomial BivariatePolynomial::univariate(std::uint32_t p, const UPoly& u, bool in_y) {
  std::vector<Term> terms;
  for (std::size_t e = 0; e < u.size(); ++e) {
    if (u[e] == 0) continue;
    const auto ee = static_cast<std::uint32_t>(e);
    terms.push_back(in_y ? Term{0, ee, u[e]} : Term{ee, 0, u[e]});
  }
  return from_terms(p, std::move(terms));
}

BivariatePolynomial BivariatePolynomial::from_recursive(std::uint32_t p, const RecursivePoly& rows) {
  std::vector<Term> terms;
  for (std::size_t j = 0; j < rows.size(); ++j)
    for (std::size_t i = 0; i < rows[j].size(); ++i)
      if (rows[j][i] != 0)
        terms.push_back(
            Term{static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j), rows[j][i]});
  return from_terms(p, std::move(terms));
}

std::uint32_t BivariatePolynomial::coeff(std::uint32_t i, std::uint32_t j) const {
  const Term probe{i, j, 0};
  auto it = std::lower_bound(terms_.begin(), terms_.end(), probe, term_before);
  if (it != terms_.end() && it->i == i && it->j == j) return it->c;
  return 0;
}

int BivariatePolynomial::degree_x() const noexcept {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.i));
  return d;
}

int BivariatePolynomial::degree_y() const noexcept {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.j));
  return d;
}

Term BivariatePolynomial::lex_leading() const {
  if (terms_.empty()) throw Error("zero polynomial has no leading term");
  return *std::max_element(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) {
    return std::tie(a.i, a.j) < std::tie(b.i, b.j);
  });
}

BivariatePolynomial BivariatePolynomial::top_form() const {
  BivariatePolynomial out(p_);
  const int d = total_degree();
  for (const auto& t : terms_)
    if (static_cast<int>(t.i + t.j) == d) out.terms_.push_back(t);
  return out;
}

std::uint32_t BivariatePolynomial::eval(std::uint32_t x, std::uint32_t y) const {
  const PrimeField f(p_);
  std::uint32_t acc = 0;
  for (const auto& t : terms_) {
    std::uint32_t v = t.c;
    for (std::uint32_t e = 0; e < t.i; ++e) v = f.mul(v, x);
    for (std::uint32_t e = 0; e < t.j; ++e) v = f.mul(v, y);
    acc = f.add(acc, v);
  }
  return acc;
}

RecursivePoly BivariatePolynomial::to_recursive() const {
  RecursivePoly rows(static_cast<std::size_t>(degree_y() + 1));
  for (const auto& t : terms_) {
    auto& row = rows[t.j];
    if (row.size() <= t.i) row.resize(t.i + 1, 0);
    row[t.i] = t.c;
  }
  return rows;
}

BivariatePolynomial operator+(const BivariatePolynomial& a, const BivariatePolynomial& b) {
  require_same_modulus(a, b);
  std::vector<Term> terms = a.terms();
  terms.insert(terms.end(), b.terms().begin(), b.terms().end());
  return BivariatePolynomial::from_terms(a.modulus(), std::move(terms));
}

BivariatePolynomial operator-(const BivariatePolynomial& a) {
  std::vector<Term> terms = a.terms();
  for (auto& t : terms) t.c = a.modulus() - t.c;
  return BivariatePolynomial::from_terms(a.modulus(), std::move(terms));
}

BivariatePolynomial operator-(const BivariatePolynomial& a, const BivariatePolynomial& b) {
  return a + (-b);
}

BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b) {
  require_same_modulus(a, b);
  const std::uint32_t p = a.modulus();
  if (a.is_zero() || b.is_zero()) return BivariatePolynomial(p);
  const Ring ring{PrimeField(p)};
  const RecursivePoly ra = a.to_recursive(), rb = b.to_recursive();
  RecursivePoly out(ra.size() + rb.size() - 1);
  for (std::size_t i = 0; i < ra.size(); ++i) {
    if (ra[i].empty()) continue;
    for (std::size_t j = 0; j < rb.size(); ++j) {
      if (rb[j].empty()) continue;
      out[i + j] = ring.add(out[i + j], ring.mul(ra[i], rb[j]));
    }
  }
  return BivariatePolynomial::from_recursive(p, out);
}

BivariatePolynomial scale(const BivariatePolynomial& a, std::uint32_t c) {
  const PrimeField f(a.modulus());
  std::vector<Term> terms = a.terms();
  for (auto& t : terms) t.c = f.mul(t.c, c % a.modulus());
  return BivariatePolynomial::from_terms(a.modulus(), std::move(terms));
}

BivariatePolynomial pow(const BivariatePolynomial& a, unsigned e) {
  BivariatePolynomial result = BivariatePolynomial::constant(a.modulus(), 1);
  BivariatePolynomial base = a;
  while (e != 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e != 0) base = base * base;
  }
  return result;
}

std::optional<BivariatePolynomial> divide_exact(const BivariatePolynomial& a,
                                                const BivariatePolynomial& b) {
  require_same_modulus(a, b);
  if (b.is_zero()) throw Error("division by the zero polynomial");
  const std::uint32_t p = a.modulus();
  if (a.is_zero()) return BivariatePolynomial(p);
  if (a.degree_y() < b.degree_y() || a.degree_x() < b.degree_x()) return std::nullopt;
  const Ring ring{PrimeField(p)};
  RecursivePoly ra = a.to_recursive();
  const RecursivePoly rb = b.to_recursive();
  const std::size_t db = rb.size() - 1;
  const UPoly& lead = rb.back();
  RecursivePoly q(ra.size() - db);
  for (std::size_t j = ra.size(); j-- > db;) {
    if (ra[j].empty()) continue;
    auto [qj, rj] = ring.divrem(ra[j], lead);
    if (!rj.empty()) return std::nullopt;
    for (std::size_t t = 0; t < db; ++t)
      if (!rb[t].empty()) ra[j - db + t] = ring.sub(ra[j - db + t], ring.mul(qj, rb[t]));
    ra[j].clear();
    q[j - db] = std::move(qj);
  }
  for (std::size_t t = 0; t < db; ++t)
    if (!ra[t].empty()) return std::nullopt;
  return BivariatePolynomial::from_recursive(p, q);
}

BivariatePolynomial swap_xy(const BivariatePolynomial& a) {
  std::vector<Term> terms = a.terms();
  for (auto& t : terms) std::swap(t.i, t.j);
  return BivariatePolynomial::from_terms(a.modulus(), std::move(terms));
}

BivariatePolynomial derivative_x(const BivariatePolynomial& a) {
  std::vector<Term> terms;
  for (const auto& t : a.terms())
    if (t.i > 0)
      terms.push_back(Term{t.i - 1, t.j,
                           static_cast<std::uint32_t>(std::uint64_t{t.c} * t.i % a.modulus())});
  return BivariatePolynomial::from_terms(a.modulus(), std::move(terms));
}

BivariatePolynomial derivative_y(const BivariatePolynomial& a) {
  return swap_xy(derivative_x(swap_xy(a)));
}

BivariatePolynomial lex_monic(const BivariatePolynomial& a) {
  if (a.is_zero()) return a;
  const PrimeField f(a.modulus());
  return scale(a, f.inv(a.lex_leading().c));
}

bool canonical_less(const BivariatePolynomial& a, const BivariatePolynomial& b) {
  if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  for (std::size_t k = 0; k < ta.size() && k < tb.size(); ++k) {
    if (ta[k].i != tb[k].i || ta[k].j != tb[k].j) return term_before(ta[k], tb[k]);
    if (ta[k].c != tb[k].c) return ta[k].c < tb[k].c;
  }
  return ta.size() < tb.size();
}

std::string to_string(const BivariatePolynomial& a) {
  if (a.is_zero()) return "0";
  const std::uint32_t p = a.modulus();
  std::ostringstream os;
  bool first = true;
  for (const auto& t : a.terms()) {
    const bool negative = t.c > p / 2;
    const std::uint32_t mag = negative ? p - t.c : t.c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    std::string mono;
    auto append = [&mono](char v, std::uint32_t e) {
      if (e == 0) return;
      if (!mono.empty()) mono += '*';
      mono += v;
      if (e > 1) mono += '^' + std::to_string(e);
    };
    append('X', t.i);
    append('Y', t.j);
    if (mono.empty()) {
      os << mag;
    } else if (mag == 1) {
      os << mono;
    } else {
      os << mag << '*' << mono;
    }
  }
  return os.str();
}

std::string canonical_text(const BivariatePolynomial& a) {
  return to_string(a) + " (mod " + std::to_string(a.modulus()) + ")";
}

BivariatePolynomial parse_polynomial(std::string_view text, std::uint32_t p) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  const auto mod_pos = s.find("(mod");
  if (mod_pos != std::string::npos) s.resize(mod_pos);
  if (s.empty()) throw Error("empty polynomial text");

  std::vector<Term> terms;
  std::size_t pos = 0;
  auto read_uint = [&](std::uint64_t& v) {
    const std::size_t start = pos;
    v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      v = v * 10 + static_cast<std::uint64_t>(s[pos++] - '0');
    return pos > start;
  };
  while (pos < s.size()) {
    bool negative = false;
    while (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      if (s[pos] == '-') negative = !negative;
      ++pos;
    }
    std::uint64_t coef = 1;
    std::uint32_t ex = 0, ey = 0;
    bool any = false;
    while (pos < s.size() && s[pos] != '+' && s[pos] != '-') {
      if (s[pos] == '*') {
        ++pos;
        continue;
      }
      std::uint64_t v = 0;
      if (read_uint(v)) {
        coef = coef * (v % p) % p;
        any = true;
        continue;
      }
      const char var = static_cast<char>(std::toupper(static_cast<unsigned char>(s[pos])));
      if (var != 'X' && var != 'Y') throw Error("unexpected character in polynomial: " + s);
      ++pos;
      std::uint64_t e = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        if (!read_uint(e)) throw Error("missing exponent in polynomial: " + s);
      }
      (var == 'X' ? ex : ey) += static_cast<std::uint32_t>(e);
      any = true;
    }
    if (!any) throw Error("malformed polynomial: " + s);
    const auto c = static_cast<std::uint32_t>(negative ? (p - coef % p) % p : coef % p);
    terms.push_back(Term{ex, ey, c});
  }
  return BivariatePolynomial::from_terms(p, std::move(terms));
}

}  // namespace binsum
