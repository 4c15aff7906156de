#include "repkit/endo.hpp"

#include "repkit/errors.hpp"

#include <algorithm>

namespace repkit {

std::vector<Rat> EndAlgebra::mul(const std::vector<Rat>& a, const std::vector<Rat>& b) const {
  std::vector<Rat> out(dim(), Rat(0));
  Mat la = left_mult_of(a);
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j)
      if (la.at(i, j) != 0) out[i] += la.at(i, j) * b[j];
  return out;
}

Mat EndAlgebra::left_mult_of(const std::vector<Rat>& a) const {
  Mat la(dim(), dim());
  for (int i = 0; i < dim(); ++i)
    if (a[i] != 0) la = la + left_mult[i].scaled(a[i]);
  return la;
}

EndAlgebra end_algebra(const Rep& m) {
  HomBasis hom(m, m);
  int d = hom.dim();
  std::vector<Mat> lm;
  for (int i = 0; i < d; ++i) {
    Mat li(d, d);
    for (int j = 0; j < d; ++j) {
      auto coords = hom.coordinates(compose(hom[i], hom[j]));
      for (int r = 0; r < d; ++r) li.at(r, j) = coords[r];
    }
    lm.push_back(std::move(li));
  }
  std::vector<Rat> one = d > 0 ? hom.coordinates(Morph::identity(m)) : std::vector<Rat>{};
  // Trace form Gram matrix; its null space is the radical (char 0).
  Mat gram(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) {
      Rat t = (lm[i] * lm[j]).trace();
      gram.at(i, j) = t;
      gram.at(j, i) = t;
    }
  Subspace rad = Subspace::span(kernel_mat(gram));
  return EndAlgebra{std::move(hom), std::move(lm), std::move(one), std::move(rad)};
}

Subspace radical_of_end(const Rep& m) { return end_algebra(m).radical; }

// --- polynomials ---

Poly poly_trim(Poly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

int poly_deg(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
  Poly r = poly_trim(a), q;
  Poly bb = poly_trim(b);
  if (bb.empty()) throw std::invalid_argument("poly_divmod: division by zero");
  if (r.size() < bb.size()) return {{}, r};
  q.assign(r.size() - bb.size() + 1, Rat(0));
  while (r.size() >= bb.size() && !r.empty()) {
    Rat c = r.back() / bb.back();
    std::size_t shift = r.size() - bb.size();
    q[shift] = c;
    for (std::size_t i = 0; i < bb.size(); ++i) r[shift + i] -= c * bb[i];
    r = poly_trim(std::move(r));
    if (r.empty()) break;
  }
  return {poly_trim(std::move(q)), std::move(r)};
}

Poly poly_gcd(Poly a, Poly b) {
  a = poly_trim(std::move(a));
  b = poly_trim(std::move(b));
  while (!b.empty()) {
    auto [q, r] = poly_divmod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Rat lc = a.back();
    for (auto& c : a) c /= lc;
  }
  return a;
}

Poly poly_derivative(const Poly& p) {
  Poly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rat(static_cast<long>(i)));
  return poly_trim(std::move(d));
}

namespace {

Rat poly_eval(const Poly& p, const Rat& x) {
  Rat v(0);
  for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * x + *it;
  return v;
}

std::vector<mpz_class> divisors_of(const mpz_class& n_in, std::size_t cap = 4096) {
  mpz_class n = abs(n_in);
  std::vector<mpz_class> out;
  if (n == 0) return out;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
      if (out.size() > cap) return {}; // too many; give up
    }
    if (d > 2000000) return {}; // too slow to enumerate
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Integer polynomial from rational one (content cleared).
std::vector<mpz_class> to_integer_poly(const Poly& p) {
  mpz_class lcm_den(1);
  for (const auto& c : p) lcm_den = lcm(lcm_den, c.get_den());
  std::vector<mpz_class> out;
  for (const auto& c : p) out.push_back(mpz_class(c.get_num() * (lcm_den / c.get_den())));
  return out;
}

// Kronecker interpolation search for a monic-able factor of degree deg_g.
std::optional<Poly> kronecker_factor(const Poly& f, int deg_g) {
  auto F = to_integer_poly(f);
  std::vector<Rat> pts;
  for (long t = 0; static_cast<int>(pts.size()) <= deg_g; ++t) {
    Rat x = (t % 2 == 0) ? Rat(t / 2) : Rat(-(t / 2 + 1));
    pts.push_back(x);
  }
  std::vector<std::vector<mpz_class>> divs;
  for (const auto& x : pts) {
    Rat v = poly_eval(f, x);
    if (v == 0) return std::nullopt; // rational root; handled elsewhere
    mpz_class num = v.get_num();
    auto d = divisors_of(num);
    if (d.empty()) return std::nullopt;
    std::vector<mpz_class> signed_d;
    for (const auto& q : d) {
      signed_d.push_back(q);
      signed_d.push_back(-q);
    }
    divs.push_back(std::move(signed_d));
  }
  // Enumerate divisor tuples (bounded), interpolate, test divisibility.
  std::vector<std::size_t> idx(pts.size(), 0);
  long budget = 200000;
  while (budget-- > 0) {
    // Lagrange interpolation of candidate values.
    Poly g = {};
    for (std::size_t i = 0; i < pts.size(); ++i) {
      Poly li = {Rat(1)};
      Rat denom(1);
      for (std::size_t j = 0; j < pts.size(); ++j) {
        if (j == i) continue;
        li = poly_mul(li, {-pts[j], Rat(1)});
        denom *= pts[i] - pts[j];
      }
      Rat scale = Rat(divs[i][idx[i]]) / denom;
      if (g.size() < li.size()) g.resize(li.size(), Rat(0));
      for (std::size_t k = 0; k < li.size(); ++k) g[k] += scale * li[k];
    }
    g = poly_trim(std::move(g));
    if (poly_deg(g) == deg_g) {
      auto [q, r] = poly_divmod(f, g);
      if (r.empty() && poly_deg(q) >= 1) {
        Rat lc = g.back();
        for (auto& c : g) c /= lc;
        return g;
      }
    }
    // advance tuple
    std::size_t pos = 0;
    while (pos < idx.size()) {
      if (++idx[pos] < divs[pos].size()) break;
      idx[pos] = 0;
      ++pos;
    }
    if (pos == idx.size()) break;
    (void)F;
  }
  return std::nullopt;
}

} // namespace

std::vector<Rat> rational_roots(const Poly& p_in) {
  Poly p = poly_trim(p_in);
  std::vector<Rat> roots;
  if (poly_deg(p) < 1) return roots;
  auto F = to_integer_poly(p);
  // strip trailing zero coefficients => root 0
  std::size_t low = 0;
  while (low < F.size() && F[low] == 0) ++low;
  if (low > 0) roots.push_back(Rat(0));
  if (low >= F.size()) return roots;
  auto ps = divisors_of(F[low]);
  auto qs = divisors_of(F.back());
  for (const auto& pn : ps)
    for (const auto& qd : qs) {
      for (int sign : {1, -1}) {
        Rat cand = rat(1) * Rat(pn) / Rat(qd) * sign;
        cand.canonicalize();
        if (poly_eval(p, cand) == 0 &&
            std::find(roots.begin(), roots.end(), cand) == roots.end())
          roots.push_back(cand);
      }
    }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::optional<std::pair<Poly, Poly>> coprime_split(const Poly& f_in) {
  Poly f = poly_trim(f_in);
  if (poly_deg(f) < 2) return std::nullopt;
  // 1. Rational root theta: f = (x - theta)^a * h with h(theta) != 0.
  for (const Rat& theta : rational_roots(f)) {
    Poly lin = {-theta, Rat(1)};
    Poly f1 = {Rat(1)};
    Poly rest = f;
    while (true) {
      auto [q, r] = poly_divmod(rest, lin);
      if (!r.empty()) break;
      rest = q;
      f1 = poly_mul(f1, lin);
    }
    if (poly_deg(rest) >= 1) return std::make_pair(f1, rest);
  }
  // 2. Squarefree-based split: w = f / gcd(f, f') is the product of the
  // distinct irreducible factors. If some prime power p^e (e >= 2) is a
  // proper part, gcd chains expose a coprime split.
  Poly g = poly_gcd(f, poly_derivative(f));
  if (poly_deg(g) >= 1) {
    Poly w = poly_divmod(f, g).first; // squarefree part
    // p_high = product of primes with multiplicity >= 2
    Poly p_high = poly_gcd(g, w);
    if (poly_deg(p_high) >= 1 && poly_deg(p_high) < poly_deg(w)) {
      // f = (part divisible by p_high's primes) * (squarefree-only primes)
      Poly f2 = poly_divmod(w, p_high).first; // primes with multiplicity 1
      if (poly_deg(f2) >= 1) {
        Poly f1 = poly_divmod(f, f2).first;
        return std::make_pair(f1, f2);
      }
    }
  }
  // 3. Kronecker fallback on the squarefree part.
  Poly w = poly_deg(g) >= 1 ? poly_divmod(f, g).first : f;
  if (poly_deg(w) >= 2 && poly_deg(w) <= 8) {
    for (int d = 2; d <= poly_deg(w) / 2; ++d) {
      auto fac = kronecker_factor(w, d);
      if (fac) {
        Poly f2 = *fac; // irreducible-or-not part of w, coprime to cofactor? ensure
        Poly rest = f;
        Poly f1 = {Rat(1)};
        while (true) {
          auto [q, r] = poly_divmod(rest, f2);
          if (!r.empty()) break;
          rest = q;
          f1 = poly_mul(f1, f2);
        }
        if (poly_deg(rest) >= 1 && poly_deg(poly_gcd(f1, rest)) == 0)
          return std::make_pair(f1, rest);
      }
    }
  }
  return std::nullopt;
}

} // namespace repkit
