#include "lieavg/assoc.hpp"

#include <stdexcept>

namespace lieavg {

AssocSeries::AssocSeries(int n, int max_degree) : n_(n), max_degree_(max_degree) {
  if (n < 1) throw std::invalid_argument("AssocSeries: generator count must be >= 1");
  if (max_degree < 1) throw std::invalid_argument("AssocSeries: truncation degree must be >= 1");
}

AssocSeries AssocSeries::one(int n, int max_degree) {
  AssocSeries s(n, max_degree);
  s.terms_.emplace(Word{}, Rational(1));
  return s;
}

Rational AssocSeries::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

void AssocSeries::add_term(const Word& w, const Rational& c) {
  if (static_cast<int>(w.size()) > max_degree_) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

bool operator==(const AssocSeries& a, const AssocSeries& b) {
  return a.n_ == b.n_ && a.terms_ == b.terms_;
}

AssocSeries add(const AssocSeries& a, const AssocSeries& b) {
  if (a.generators() != b.generators())
    throw std::invalid_argument("assoc add: mismatched generator counts");
  AssocSeries out(a.generators(), std::min(a.max_degree(), b.max_degree()));
  for (const auto& [w, c] : a.terms()) out.add_term(w, c);
  for (const auto& [w, c] : b.terms()) out.add_term(w, c);
  return out;
}

AssocSeries scale(const Rational& c, const AssocSeries& a) {
  AssocSeries out(a.generators(), a.max_degree());
  if (c.is_zero()) return out;
  for (const auto& [w, q] : a.terms()) out.add_term(w, c * q);
  return out;
}

AssocSeries operator+(const AssocSeries& a, const AssocSeries& b) { return add(a, b); }

AssocSeries operator-(const AssocSeries& a, const AssocSeries& b) {
  return add(a, scale(Rational(-1), b));
}

AssocSeries assoc_mul(const AssocSeries& p, const AssocSeries& q) {
  if (p.generators() != q.generators())
    throw std::invalid_argument("assoc_mul: mismatched generator counts");
  const int d = std::min(p.max_degree(), q.max_degree());
  AssocSeries out(p.generators(), d);
  for (const auto& [wp, cp] : p.terms()) {
    for (const auto& [wq, cq] : q.terms()) {
      if (static_cast<int>(wp.size() + wq.size()) > d) break;  // sorted by degree
      Word w = wp;
      w.insert(w.end(), wq.begin(), wq.end());
      out.add_term(w, cp * cq);
    }
  }
  return out;
}

AssocSeries operator*(const AssocSeries& p, const AssocSeries& q) { return assoc_mul(p, q); }

AssocSeries assoc_exp(const AssocSeries& p) {
  if (!p.constant_term().is_zero())
    throw std::invalid_argument("assoc_exp: nonzero constant term");
  AssocSeries out = AssocSeries::one(p.generators(), p.max_degree());
  AssocSeries inc = out;
  for (int k = 1; k <= p.max_degree(); ++k) {
    inc = scale(Rational(1, k), assoc_mul(inc, p));
    if (inc.is_zero()) break;
    out = add(out, inc);
  }
  return out;
}

AssocSeries assoc_log(const AssocSeries& q) {
  if (!(q.constant_term() == Rational(1)))
    throw std::invalid_argument("assoc_log: constant term must be 1");
  AssocSeries u = q - AssocSeries::one(q.generators(), q.max_degree());
  AssocSeries out(q.generators(), q.max_degree());
  AssocSeries pw = AssocSeries::one(q.generators(), q.max_degree());
  for (int k = 1; k <= q.max_degree(); ++k) {
    pw = assoc_mul(pw, u);
    if (pw.is_zero()) break;
    out = add(out, scale(Rational(k % 2 == 1 ? 1 : -1, k), pw));
  }
  return out;
}

AssocSeries to_associative(const LieSeries& a) {
  AssocSeries out(a.generators(), a.max_degree());
  for (const auto& [w, c] : a.terms())
    for (const auto& [aw, q] : commutator_expansion(w)) out.add_term(aw, c * q);
  return out;
}

LieSeries dynkin_project(const AssocSeries& p) {
  if (!p.constant_term().is_zero())
    throw std::invalid_argument("dynkin_project: nonzero constant term");
  LieSeries out(p.generators(), p.max_degree());
  for (const auto& [w, c] : p.terms()) {
    const Rational scaled = c / Rational(static_cast<long long>(w.size()));
    for (const auto& [bw, q] : left_nested_expansion(w)) out.add_term(bw, scaled * q);
  }
  return out;
}

}  // namespace lieavg
