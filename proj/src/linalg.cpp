#include "bicrossed/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace bicrossed {

Vec Vec::basis(std::size_t i, const Scalar& c) {
  Vec v;
  if (!c.is_zero()) v.terms_.push_back({i, c});
  return v;
}

Vec Vec::from_terms(std::vector<Term> terms) {
  std::stable_sort(terms.begin(), terms.end(),
                   [](const Term& a, const Term& b) { return a.index < b.index; });
  Vec v;
  for (auto& t : terms) {
    if (!v.terms_.empty() && v.terms_.back().index == t.index) {
      v.terms_.back().coeff += t.coeff;
      if (v.terms_.back().coeff.is_zero()) v.terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      v.terms_.push_back(std::move(t));
    }
  }
  return v;
}

Scalar Vec::at(std::size_t i) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), i,
      [](const Term& t, std::size_t k) { return t.index < k; });
  if (it != terms_.end() && it->index == i) return it->coeff;
  return Scalar();
}

Vec& Vec::add_scaled(const Vec& o, const Scalar& c) {
  if (o.terms_.empty() || c.is_zero()) return *this;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  const bool unit = c.is_one();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->index < b->index)) {
      out.push_back(std::move(*a));
      ++a;
    } else if (a == terms_.end() || b->index < a->index) {
      out.push_back({b->index, unit ? b->coeff : b->coeff * c});
      ++b;
    } else {
      Scalar s = a->coeff;
      if (unit)
        s += b->coeff;
      else
        s += b->coeff * c;
      if (!s.is_zero()) out.push_back({a->index, std::move(s)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

Vec& Vec::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
  } else if (!c.is_one()) {
    for (auto& t : terms_) t.coeff *= c;
  }
  return *this;
}

Vec Vec::operator-() const {
  Vec r(*this);
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

bool operator==(const Vec& a, const Vec& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].index != b.terms_[i].index ||
        a.terms_[i].coeff != b.terms_[i].coeff)
      return false;
  return true;
}

int compare(const Vec& a, const Vec& b) {
  const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const Term& x = a.terms_[i];
    const Term& y = b.terms_[i];
    if (x.index != y.index) return x.index < y.index ? -1 : 1;
    if (int c = compare(x.coeff, y.coeff); c != 0) return c;
  }
  if (a.terms_.size() == b.terms_.size()) return 0;
  return a.terms_.size() < b.terms_.size() ? -1 : 1;
}

std::string Vec::to_string(const std::vector<std::string>* names) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    std::string name = names && t.index < names->size()
                           ? (*names)[t.index]
                           : "e" + std::to_string(t.index);
    if (!out.empty()) out += " + ";
    if (t.coeff.is_one()) {
      out += name;
    } else if ((-t.coeff).is_one()) {
      out += "-" + name;
    } else if (t.coeff.is_rational()) {
      out += t.coeff.to_string() + "*" + name;
    } else {
      out += "(" + t.coeff.to_string() + ")*" + name;
    }
  }
  return out;
}

void Accumulator::resize(std::size_t dim) {
  slots_.assign(dim, Scalar());
  used_.assign(dim, 0);
  touched_.clear();
}

void Accumulator::add(std::size_t i, const Scalar& c) {
  if (i >= slots_.size()) throw std::out_of_range("accumulator index");
  if (!used_[i]) {
    used_[i] = 1;
    touched_.push_back(i);
    slots_[i] = c;
  } else {
    slots_[i] += c;
  }
}

void Accumulator::add(const Vec& v, const Scalar& c) {
  if (c.is_one()) return add(v);
  for (const auto& t : v.terms()) add(t.index, t.coeff * c);
}

void Accumulator::add(const Vec& v) {
  for (const auto& t : v.terms()) add(t.index, t.coeff);
}

Vec Accumulator::take() {
  std::sort(touched_.begin(), touched_.end());
  Vec v;
  v.terms_.reserve(touched_.size());
  for (std::size_t i : touched_) {
    if (!slots_[i].is_zero()) v.terms_.push_back({i, std::move(slots_[i])});
    slots_[i] = Scalar();
    used_[i] = 0;
  }
  touched_.clear();
  return v;
}

Vec tensor(const Vec& a, const Vec& b, std::size_t dim_b) {
  std::vector<Term> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a.terms())
    for (const auto& y : b.terms())
      out.push_back({x.index * dim_b + y.index, x.coeff * y.coeff});
  // a-major order of a sorted a and sorted b is already sorted
  return Vec::from_terms(std::move(out));
}

// ------------------------------------------------------------ echelon

Vec EchelonBasis::reduce(Vec v) const {
  std::size_t cursor = 0;
  while (true) {
    const Term* hit = nullptr;
    for (const auto& t : v.terms()) {
      if (t.index < cursor) continue;
      if (t.index >= limit_) break;
      if (rows_.count(t.index)) {
        hit = &t;
        break;
      }
    }
    if (!hit) return v;
    std::size_t p = hit->index;
    Scalar c = -hit->coeff;
    v.add_scaled(rows_.at(p), c);
    cursor = p + 1;
  }
}

bool EchelonBasis::insert(Vec v, Vec* rest) {
  v = reduce(std::move(v));
  if (v.is_zero() || v.terms().front().index >= limit_) {
    if (rest) *rest = std::move(v);
    return false;
  }
  const Term& lead = v.terms().front();
  std::size_t p = lead.index;
  Scalar inv = lead.coeff.inverse();
  v *= inv;
  rows_.emplace(p, std::move(v));
  if (rest) *rest = Vec();
  return true;
}

void EchelonBasis::make_reduced() {
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
    const std::size_t p = it->first;
    const Vec& row = it->second;
    for (auto& [q, other] : rows_) {
      if (q >= p) break;
      Scalar c = other.at(p);
      if (!c.is_zero()) other.add_scaled(row, -c);
    }
  }
}

// ------------------------------------------------------------- matrix

Matrix Matrix::identity(std::size_t n) {
  Matrix m;
  m.rows = m.cols = n;
  m.columns.reserve(n);
  for (std::size_t i = 0; i < n; ++i) m.columns.push_back(Vec::basis(i));
  return m;
}

Vec Matrix::apply(const Vec& v) const {
  Accumulator acc(rows);
  for (const auto& t : v.terms()) acc.add(columns.at(t.index), t.coeff);
  return acc.take();
}

Matrix compose(const Matrix& outer, const Matrix& inner) {
  if (outer.cols != inner.rows)
    throw std::invalid_argument("matrix dimensions do not compose");
  Matrix m;
  m.rows = outer.rows;
  m.cols = inner.cols;
  m.columns.reserve(inner.cols);
  for (const auto& c : inner.columns) m.columns.push_back(outer.apply(c));
  return m;
}

std::size_t rank(const Matrix& m) {
  EchelonBasis eb;
  for (const auto& c : m.columns) eb.insert(c);
  return eb.rank();
}

namespace {

Vec tagged(const Vec& col, std::size_t offset, std::size_t j) {
  Vec v = col;
  v += Vec::basis(offset + j);
  return v;
}

Vec untag(const Vec& v, std::size_t offset) {
  std::vector<Term> out;
  for (const auto& t : v.terms())
    if (t.index >= offset) out.push_back({t.index - offset, t.coeff});
  return Vec::from_terms(std::move(out));
}

}  // namespace

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows != m.cols) return std::nullopt;
  const std::size_t n = m.rows;
  EchelonBasis eb(n);
  for (std::size_t j = 0; j < n; ++j)
    if (!eb.insert(tagged(m.columns[j], n, j))) return std::nullopt;
  eb.make_reduced();
  Matrix inv;
  inv.rows = inv.cols = n;
  inv.columns.resize(n);
  for (const auto& [p, row] : eb.rows()) inv.columns[p] = untag(row, n);
  return inv;
}

std::vector<Vec> nullspace(const Matrix& m) {
  const std::size_t n = m.rows;
  EchelonBasis eb(n);
  std::vector<Vec> out;
  for (std::size_t j = 0; j < m.cols; ++j) {
    Vec rest;
    if (!eb.insert(tagged(m.columns[j], n, j), &rest))
      out.push_back(untag(rest, n));
  }
  return out;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
  const std::size_t n = m.rows;
  EchelonBasis eb(n);
  for (std::size_t j = 0; j < m.cols; ++j)
    eb.insert(tagged(m.columns[j], n, j));
  Vec r = eb.reduce(b);
  if (!r.is_zero() && r.terms().front().index < n) return std::nullopt;
  return -untag(r, n);
}

AffineSolution solve_equations(const std::vector<Vec>& equations,
                               std::size_t num_vars) {
  AffineSolution sol;
  EchelonBasis eb(num_vars);
  for (const auto& e : equations) {
    Vec rest;
    if (!eb.insert(e, &rest) && !rest.is_zero()) return sol;  // 0 = c != 0
  }
  eb.make_reduced();
  sol.consistent = true;
  std::vector<char> is_pivot(num_vars, 0);
  for (const auto& [p, row] : eb.rows()) {
    is_pivot[p] = 1;
    sol.pivots.push_back(p);
  }
  for (std::size_t v = 0; v < num_vars; ++v)
    if (!is_pivot[v]) sol.free_vars.push_back(v);

  std::vector<Term> part;
  for (const auto& [p, row] : eb.rows()) {
    Scalar c = row.at(num_vars);
    if (!c.is_zero()) part.push_back({p, -c});
  }
  sol.particular = Vec::from_terms(std::move(part));
  for (std::size_t f : sol.free_vars) {
    std::vector<Term> k{{f, Field().one()}};
    for (const auto& [p, row] : eb.rows()) {
      Scalar c = row.at(f);
      if (!c.is_zero()) k.push_back({p, -c});
    }
    sol.kernel.push_back(Vec::from_terms(std::move(k)));
  }
  return sol;
}

}  // namespace bicrossed
