#include "bicrossed/quadratic.hpp"

#include <algorithm>
#include <random>

namespace bicrossed {

void Poly2::add(std::size_t a, std::size_t b, const Scalar& c) {
  if (c.is_zero()) return;
  if (a > b) std::swap(a, b);
  auto key = std::make_pair(a, b);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

bool Poly2::has_quadratic() const {
  for (const auto& [k, c] : terms_)
    if (k.second != n_) return true;
  return false;
}

Vec Poly2::linear_part() const {
  std::vector<Term> t;
  for (const auto& [k, c] : terms_)
    if (k.second == n_) t.push_back({k.first, c});
  return Vec::from_terms(std::move(t));
}

Scalar Poly2::evaluate(const Vec& point) const {
  Scalar s;
  for (const auto& [k, c] : terms_) {
    Scalar v = c;
    if (k.first != n_) v *= point.at(k.first);
    if (k.second != n_) v *= point.at(k.second);
    s += v;
  }
  return s;
}

Poly2 Poly2::substitute(const std::vector<Vec>& subst, std::size_t m) const {
  Poly2 out(m);
  const Vec unit = Vec::basis(m);
  for (const auto& [k, c] : terms_) {
    const Vec& fa = k.first == n_ ? unit : subst[k.first];
    const Vec& fb = k.second == n_ ? unit : subst[k.second];
    for (const auto& p : fa.terms())
      for (const auto& q : fb.terms()) out.add(p.index, q.index, c * p.coeff * q.coeff);
  }
  return out;
}

namespace {

// t_i as affine forms in the current free variables (constant at index m).
struct Frame {
  std::vector<Vec> param;
  std::size_t m = 0;
};

Frame initial_frame(std::size_t n) {
  Frame f;
  f.m = n;
  for (std::size_t i = 0; i < n; ++i) f.param.push_back(Vec::basis(i));
  return f;
}

// Restricts the frame to the solution set of linear equations in its free
// variables. Returns false when they are inconsistent.
bool restrict(Frame& f, const std::vector<Vec>& eqs) {
  AffineSolution sol = solve_equations(eqs, f.m);
  if (!sol.consistent) return false;
  const std::size_t k = sol.kernel.size();
  for (Vec& p : f.param) {
    std::vector<Term> t;
    for (const auto& term : p.terms()) {
      if (term.index == f.m) {
        t.push_back({k, term.coeff});
        continue;
      }
      Scalar base = sol.particular.at(term.index);
      if (!base.is_zero()) t.push_back({k, term.coeff * base});
      for (std::size_t j = 0; j < k; ++j) {
        Scalar kc = sol.kernel[j].at(term.index);
        if (!kc.is_zero()) t.push_back({j, term.coeff * kc});
      }
    }
    p = Vec::from_terms(std::move(t));
  }
  f.m = k;
  return true;
}

Vec evaluate_frame(const Frame& f, const std::vector<Scalar>& w) {
  std::vector<Term> out;
  for (std::size_t i = 0; i < f.param.size(); ++i) {
    Scalar s;
    for (const auto& t : f.param[i].terms())
      s += t.index == f.m ? t.coeff : t.coeff * w[t.index];
    if (!s.is_zero()) out.push_back({i, s});
  }
  return Vec::from_terms(std::move(out));
}

std::vector<std::vector<Scalar>> sample_points(std::size_t m, Field field,
                                               bool with_grid) {
  std::vector<std::vector<Scalar>> pts;
  pts.emplace_back(m, field.zero());
  if (m == 0) return pts;
  pts.emplace_back(m, field.one());
  std::vector<Scalar> ramp(m);
  for (std::size_t i = 0; i < m; ++i) ramp[i] = field.from_int(static_cast<std::int64_t>(i) + 1);
  pts.push_back(ramp);
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Scalar> e(m, field.zero());
    e[i] = field.one();
    pts.push_back(std::move(e));
  }
  std::mt19937 gen(0x5eed);
  std::uniform_int_distribution<int> dist(-60, 60);
  for (int k = 0; k < 12; ++k) {
    std::vector<Scalar> p(m);
    for (auto& s : p) s = field.from_int(dist(gen));
    pts.push_back(std::move(p));
  }
  if (with_grid && m <= 8) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < m; ++i) total *= 3;
    for (std::size_t code = 0; code < total; ++code) {
      std::vector<Scalar> p(m);
      std::size_t c = code;
      for (std::size_t i = 0; i < m; ++i, c /= 3)
        p[i] = field.from_int(static_cast<std::int64_t>(c % 3) - 1);
      pts.push_back(std::move(p));
    }
  }
  return pts;
}

// A residual without constant term whose monomials all contain a common
// variable a factors as t_a * L(t) with L affine.
std::optional<std::pair<std::size_t, Vec>> common_factor(const Poly2& p) {
  const std::size_t m = p.num_vars();
  bool first = true;
  std::vector<std::size_t> cand;
  for (const auto& [k, c] : p.terms()) {
    if (k.first == m) return std::nullopt;
    std::vector<std::size_t> here{k.first};
    if (k.second != k.first && k.second != m) here.push_back(k.second);
    if (first) {
      cand = here;
      first = false;
    } else {
      std::vector<std::size_t> keep;
      for (std::size_t v : cand)
        if (std::find(here.begin(), here.end(), v) != here.end()) keep.push_back(v);
      cand = keep;
    }
    if (cand.empty()) return std::nullopt;
  }
  if (cand.empty()) return std::nullopt;
  const std::size_t a = cand.front();
  std::vector<Term> rest;
  for (const auto& [k, c] : p.terms())
    rest.push_back({k.first == a ? k.second : k.first, c});
  return std::make_pair(a, Vec::from_terms(std::move(rest)));
}

// Most frequent variable among quadratic monomials.
std::size_t busiest_variable(const std::vector<Poly2>& residual) {
  std::map<std::size_t, std::size_t> freq;
  for (const auto& r : residual)
    for (const auto& [k, c] : r.terms())
      if (k.second != r.num_vars()) {
        ++freq[k.first];
        ++freq[k.second];
      }
  std::size_t best = 0, count = 0;
  for (const auto& [v, n] : freq)
    if (n > count) {
      best = v;
      count = n;
    }
  return best;
}

QuadraticSearch search(const std::vector<Poly2>& eqs, Frame frame, Field field,
                       const std::function<bool(const Vec&)>& accept,
                       int depth, long& budget) {
  QuadraticSearch out;
  for (;;) {
    std::vector<Poly2> residual;
    std::vector<Vec> linear;
    for (const auto& e : eqs) {
      Poly2 s = e.substitute(frame.param, frame.m);
      if (s.is_zero()) continue;
      if (s.has_quadratic())
        residual.push_back(std::move(s));
      else
        linear.push_back(s.linear_part());
    }
    if (!linear.empty()) {
      if (!restrict(frame, linear)) return out;
      continue;
    }
    if (residual.empty()) {
      for (const auto& w : sample_points(frame.m, field, false)) {
        Vec t = evaluate_frame(frame, w);
        if (accept(t)) {
          out.solution = std::move(t);
          return out;
        }
      }
      return out;
    }
    for (const auto& r : residual) {
      auto f = common_factor(r);
      if (!f) continue;
      if (depth > 64) break;
      Vec first = Vec::basis(f->first);
      for (const Vec* branch : {&first, &f->second}) {
        Frame sub = frame;
        if (!restrict(sub, {*branch})) continue;
        QuadraticSearch got = search(eqs, std::move(sub), field, accept, depth + 1, budget);
        if (!got.exhaustive) out.exhaustive = false;
        if (got.solution) {
          out.solution = std::move(got.solution);
          return out;
        }
      }
      return out;
    }
    // Undecided: probe the family directly.
    for (const auto& w : sample_points(frame.m, field, true)) {
      Vec t = evaluate_frame(frame, w);
      bool ok = true;
      for (const auto& e : eqs)
        if (!e.evaluate(t).is_zero()) {
          ok = false;
          break;
        }
      if (ok && accept(t)) {
        out.solution = std::move(t);
        return out;
      }
    }
    // Fix the busiest variable to small values and continue; this can find
    // solutions but never proves their absence.
    out.exhaustive = false;
    const std::size_t v = busiest_variable(residual);
    for (int value : {1, 0, -1, 2, -2}) {
      if (--budget < 0) return out;
      Frame sub = frame;
      Vec eq = Vec::basis(v);
      eq.add_scaled(Vec::basis(sub.m), field.from_int(-value));
      if (!restrict(sub, {eq})) continue;
      QuadraticSearch got = search(eqs, std::move(sub), field, accept, depth + 1, budget);
      if (got.solution) {
        out.solution = std::move(got.solution);
        return out;
      }
    }
    return out;
  }
}

}  // namespace

QuadraticSearch solve_quadratic(const std::vector<Poly2>& eqs,
                                std::size_t num_vars, Field field,
                                const std::function<bool(const Vec&)>& accept) {
  long budget = 4000;
  return search(eqs, initial_frame(num_vars), field, accept, 0, budget);
}

}  // namespace bicrossed
