#include "repkit/algebra.hpp"

#include "repkit/errors.hpp"

#include <cassert>
#include <deque>

namespace repkit {

namespace {

void add_scaled(PathPoly& dst, const PathPoly& src, const Rat& c) {
  if (c == 0) return;
  for (const auto& [p, a] : src) {
    Rat& slot = dst[p];
    slot += c * a;
    if (slot == 0) dst.erase(p);
  }
}

PathPoly mul_path(const Path& left, const PathPoly& poly, const Path& right) {
  PathPoly out;
  for (const auto& [p, c] : poly) {
    Path q = concat(concat(left, p), right);
    out[q] += c;
    if (out[q] == 0) out.erase(q);
  }
  return out;
}

Path subpath(const Path& p, const Quiver& q, std::size_t begin, std::size_t len) {
  Path s;
  s.arrows.assign(p.arrows.begin() + begin, p.arrows.begin() + begin + len);
  s.source = len == 0 ? (begin == 0 ? p.source : q.arrow(p.arrows[begin - 1]).target)
                      : q.arrow(s.arrows.front()).source;
  s.target = len == 0 ? s.source : q.arrow(s.arrows.back()).target;
  return s;
}

// First position where `word` contains `lead` as a contiguous subword, or -1.
int find_subword(const std::vector<int>& word, const std::vector<int>& lead) {
  if (lead.size() > word.size()) return -1;
  for (std::size_t i = 0; i + lead.size() <= word.size(); ++i) {
    bool hit = true;
    for (std::size_t j = 0; j < lead.size(); ++j)
      if (word[i + j] != lead[j]) { hit = false; break; }
    if (hit) return static_cast<int>(i);
  }
  return -1;
}

void make_monic(PathPoly& p) {
  if (p.empty()) return;
  Rat lc = p.rbegin()->second;
  for (auto& [_, c] : p) c /= lc;
}

} // namespace

PathPoly Algebra::reduce(PathPoly p) const {
  bool changed = true;
  while (changed && !p.empty()) {
    changed = false;
    for (auto it = p.rbegin(); it != p.rend() && !changed; ++it) {
      const Path& term = it->first;
      const Rat coeff = it->second;
      for (const auto& g : groebner_) {
        const Path& lead = g.rbegin()->first;
        int pos = find_subword(term.arrows, lead.arrows);
        if (pos < 0) continue;
        Path left = subpath(term, quiver_, 0, pos);
        Path right = subpath(term, quiver_, pos + lead.arrows.size(),
                             term.arrows.size() - pos - lead.arrows.size());
        add_scaled(p, mul_path(left, g, right), -coeff);
        changed = true;
        break;
      }
    }
  }
  return p;
}

std::shared_ptr<const Algebra> Algebra::make(Quiver q, std::vector<Relation> rels,
                                             int max_len) {
  auto alg = std::shared_ptr<Algebra>(new Algebra());
  alg->quiver_ = std::move(q);
  alg->relations_ = std::move(rels);
  alg->max_len_ = max_len;
  const Quiver& Q = alg->quiver_;

  for (const auto& r : alg->relations_) validate_relation(Q, r);

  // Seed the rewriting system with the relations, then close under overlaps
  // (degree-truncated Buchberger completion for path algebras).
  for (const auto& r : alg->relations_) {
    PathPoly p;
    for (const auto& [c, path] : r.terms)
      if (c != 0) p[path] += c;
    for (auto it = p.begin(); it != p.end();)
      it = it->second == 0 ? p.erase(it) : std::next(it);
    p = alg->reduce(std::move(p));
    if (!p.empty()) {
      make_monic(p);
      alg->groebner_.push_back(std::move(p));
    }
  }

  std::deque<std::pair<std::size_t, std::size_t>> pending;
  for (std::size_t i = 0; i < alg->groebner_.size(); ++i)
    for (std::size_t j = 0; j < alg->groebner_.size(); ++j)
      pending.emplace_back(i, j);

  while (!pending.empty()) {
    auto [i, j] = pending.front();
    pending.pop_front();
    const Path l1 = alg->groebner_[i].rbegin()->first;
    const Path l2 = alg->groebner_[j].rbegin()->first;
    std::size_t maxo = std::min(l1.arrows.size(), l2.arrows.size());
    for (std::size_t o = 1; o <= maxo; ++o) {
      // suffix of l1 of length o == prefix of l2 of length o
      bool match = true;
      for (std::size_t t = 0; t < o; ++t)
        if (l1.arrows[l1.arrows.size() - o + t] != l2.arrows[t]) { match = false; break; }
      if (!match) continue;
      std::size_t combined = l1.arrows.size() + l2.arrows.size() - o;
      if (combined > static_cast<std::size_t>(max_len)) continue;
      Path w = subpath(l2, Q, o, l2.arrows.size() - o);
      Path u = subpath(l1, Q, 0, l1.arrows.size() - o);
      PathPoly s = mul_path(Path::trivial(l1.source), alg->groebner_[i], w);
      add_scaled(s, mul_path(u, alg->groebner_[j], Path::trivial(l2.target)), Rat(-1));
      s = alg->reduce(std::move(s));
      if (s.empty()) continue;
      make_monic(s);
      alg->groebner_.push_back(std::move(s));
      std::size_t n = alg->groebner_.size() - 1;
      for (std::size_t k = 0; k <= n; ++k) {
        pending.emplace_back(k, n);
        pending.emplace_back(n, k);
      }
    }
  }

  // Normal words per vertex pair, by increasing length, until extinction.
  int nv = Q.num_vertices();
  alg->basis_.assign(nv, std::vector<std::vector<Path>>(nv));
  std::vector<Path> frontier;
  for (int v = 0; v < nv; ++v) frontier.push_back(Path::trivial(v));
  int length = 0;
  while (!frontier.empty()) {
    for (const auto& p : frontier) {
      auto& list = alg->basis_[p.source][p.target];
      alg->basis_pos_[p] = static_cast<int>(list.size());
      list.push_back(p);
      ++alg->total_dim_;
    }
    alg->nilpotency_bound_ = length;
    if (length == max_len) {
      // Check whether anything would survive one step further.
      for (const auto& p : frontier)
        for (int a = 0; a < Q.num_arrows(); ++a) {
          if (Q.arrow(a).source != p.target) continue;
          Path ext = p;
          ext.arrows.push_back(a);
          ext.target = Q.arrow(a).target;
          bool reducible = false;
          for (const auto& g : alg->groebner_) {
            const auto& lead = g.rbegin()->first.arrows;
            if (lead.size() <= ext.arrows.size() &&
                std::equal(lead.begin(), lead.end(), ext.arrows.end() - lead.size())) {
              reducible = true;
              break;
            }
          }
          if (!reducible)
            throw NonAdmissible("path basis still growing at max_len=" +
                                std::to_string(max_len));
        }
      break;
    }
    std::vector<Path> next;
    for (const auto& p : frontier)
      for (int a = 0; a < Q.num_arrows(); ++a) {
        if (Q.arrow(a).source != p.target) continue;
        Path ext = p;
        ext.arrows.push_back(a);
        ext.target = Q.arrow(a).target;
        bool reducible = false;
        for (const auto& g : alg->groebner_) {
          const auto& lead = g.rbegin()->first.arrows;
          if (lead.size() <= ext.arrows.size() &&
              std::equal(lead.begin(), lead.end(), ext.arrows.end() - lead.size())) {
            reducible = true;
            break;
          }
        }
        if (!reducible) next.push_back(std::move(ext));
      }
    std::sort(next.begin(), next.end());
    frontier = std::move(next);
    ++length;
  }

  return alg;
}

int Algebra::basis_index(const Path& p) const {
  auto it = basis_pos_.find(p);
  return it == basis_pos_.end() ? -1 : it->second;
}

std::vector<Rat> Algebra::normal_form(const Path& p) const {
  PathPoly poly;
  poly[p] = 1;
  return normal_form(poly, p.source, p.target);
}

std::vector<Rat> Algebra::normal_form(const PathPoly& poly, int source, int target) const {
  PathPoly r = reduce(poly);
  std::vector<Rat> coords(basis_[source][target].size(), Rat(0));
  for (const auto& [path, c] : r) {
    int idx = basis_index(path);
    assert(idx >= 0 && path.source == source && path.target == target);
    coords[idx] = c;
  }
  return coords;
}

std::shared_ptr<const Algebra> Algebra::opposite() const {
  std::lock_guard<std::mutex> lock(opp_mutex_);
  if (opp_) return opp_;
  std::vector<Relation> rels;
  for (const auto& r : relations_) {
    Relation rr;
    for (const auto& [c, p] : r.terms) rr.terms.emplace_back(c, reversed_path(p));
    rels.push_back(std::move(rr));
  }
  auto opp = Algebra::make(quiver_.reversed(), rels, max_len_);
  {
    std::lock_guard<std::mutex> lock2(opp->opp_mutex_);
    opp->opp_ = shared_from_this();
  }
  opp_ = opp;
  return opp_;
}

} // namespace repkit
