#pragma once

// Buchberger's algorithm for submodules of graded free modules over
// k[x_1..x_n], with Gebauer-Moeller pair management and the normal (sugar)
// selection strategy, plus the derived constructions built on it: normal
// forms, module quotients, intersections, syzygy kernels and Hilbert series.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "siegel/hilbert.hpp"
#include "siegel/module.hpp"

namespace siegel {

enum class ModuleExtension { TermOverPosition, PositionOverTerm };

// Graded reverse lex on monomials, extended to free modules. Shifted degree
// (deg m + shift_i) comes first under term-over-position; ties between equal
// monomials go to the lower generator index.
struct MonomialOrder {
  ModuleExtension extension = ModuleExtension::TermOverPosition;
  bool operator==(const MonomialOrder&) const = default;
  std::string name() const {
    return extension == ModuleExtension::TermOverPosition ? "grevlex/TOP" : "grevlex/POT";
  }
};

template <class F>
struct VTerm {
  Monomial mono;
  int comp;
  F coef;
};
template <class F>
using SVec = std::vector<VTerm<F>>;

class TermOrder {
 public:
  TermOrder() = default;
  TermOrder(std::vector<int> shifts, MonomialOrder order) : shifts_(std::move(shifts)), order_(order) {}

  int compare(const Monomial& a, int ca, const Monomial& b, int cb) const {
    if (order_.extension == ModuleExtension::PositionOverTerm) {
      if (ca != cb) return ca < cb ? 1 : -1;
      return Monomial::grevlex(a, b);
    }
    const int da = a.degree() + shifts_[ca], db = b.degree() + shifts_[cb];
    if (da != db) return da < db ? -1 : 1;
    if (int r = Monomial::revlex(a, b)) return r;
    if (ca != cb) return ca < cb ? 1 : -1;
    return 0;
  }
  int degree(const Monomial& m, int c) const { return m.degree() + shifts_[c]; }
  const std::vector<int>& shifts() const { return shifts_; }
  const MonomialOrder& order() const { return order_; }

 private:
  std::vector<int> shifts_;
  MonomialOrder order_;
};

template <class F>
SVec<F> to_svec(const ModuleElement<F>& e, const TermOrder& ord) {
  SVec<F> v;
  for (int c = 0; c < e.rank(); ++c)
    for (const auto& t : e[c].terms()) v.push_back({t.mono, c, t.coef});
  std::sort(v.begin(), v.end(), [&](const VTerm<F>& a, const VTerm<F>& b) {
    return ord.compare(a.mono, a.comp, b.mono, b.comp) > 0;
  });
  return v;
}

template <class F>
ModuleElement<F> from_svec(const SVec<F>& v, int nvars, const std::vector<int>& shifts) {
  std::vector<std::vector<PolyTerm<F>>> comps(shifts.size());
  for (const auto& t : v) comps[t.comp].push_back({t.mono, t.coef});
  ModuleElement<F> e(nvars, shifts);
  for (std::size_t c = 0; c < shifts.size(); ++c)
    e.set(static_cast<int>(c), Poly<F>(nvars, std::move(comps[c])));
  return e;
}

struct GroebnerOptions {
  // Homogeneous inputs only: ignore pairs above this shifted degree.
  std::optional<int> max_degree;
  // Reduce tails during the run (otherwise only at the final interreduction).
  bool tail_reduce = true;
  // Progress callback: (current degree, basis size, pending pairs).
  std::function<void(int, std::size_t, std::size_t)> progress;
};

struct GroebnerStats {
  std::size_t pairs_considered = 0;
  std::size_t pairs_reduced_to_zero = 0;
  std::size_t basis_insertions = 0;
  double seconds = 0;
};

// A reduced Groebner basis together with the free module it lives in.
template <class F>
class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  GroebnerBasis(int nvars, std::vector<int> shifts, MonomialOrder order, std::vector<SVec<F>> elems,
                bool truncated = false)
      : nvars_(nvars), ord_(std::move(shifts), order), elems_(std::move(elems)), truncated_(truncated) {
    index();
  }

  int nvars() const { return nvars_; }
  int rank() const { return static_cast<int>(ord_.shifts().size()); }
  const std::vector<int>& shifts() const { return ord_.shifts(); }
  const MonomialOrder& order() const { return ord_.order(); }
  const TermOrder& term_order() const { return ord_; }
  const std::vector<SVec<F>>& raw() const { return elems_; }
  std::size_t size() const { return elems_.size(); }
  bool truncated() const { return truncated_; }
  bool reduced() const { return true; }

  std::vector<ModuleElement<F>> elements() const {
    std::vector<ModuleElement<F>> out;
    out.reserve(elems_.size());
    for (const auto& v : elems_) out.push_back(from_svec(v, nvars_, shifts()));
    return out;
  }

  // Index of a basis element whose lead term divides m*e_c, or -1.
  int find_divisor(const Monomial& m, int c) const {
    if (c >= static_cast<int>(by_comp_.size())) return -1;
    const std::uint32_t s = m.support();
    for (const auto& [idx, supp] : by_comp_[c]) {
      if ((supp & ~s) != 0) continue;
      if (elems_[idx].front().mono.divides(m)) return idx;
    }
    return -1;
  }

  std::vector<std::vector<Monomial>> leads_per_comp() const {
    std::vector<std::vector<Monomial>> out(rank());
    for (const auto& v : elems_) out[v.front().comp].push_back(v.front().mono);
    return out;
  }

  bool operator==(const GroebnerBasis& o) const {
    if (nvars_ != o.nvars_ || shifts() != o.shifts() || !(order() == o.order())) return false;
    if (elems_.size() != o.elems_.size()) return false;
    for (std::size_t i = 0; i < elems_.size(); ++i) {
      const auto &a = elems_[i], &b = o.elems_[i];
      if (a.size() != b.size()) return false;
      for (std::size_t k = 0; k < a.size(); ++k)
        if (!(a[k].mono == b[k].mono) || a[k].comp != b[k].comp || !(a[k].coef == b[k].coef))
          return false;
    }
    return true;
  }

 private:
  void index() {
    by_comp_.assign(rank(), {});
    for (std::size_t i = 0; i < elems_.size(); ++i) {
      const auto& lt = elems_[i].front();
      by_comp_[lt.comp].push_back({static_cast<int>(i), lt.mono.support()});
    }
  }

  int nvars_ = 0;
  TermOrder ord_;
  std::vector<SVec<F>> elems_;
  std::vector<std::vector<std::pair<int, std::uint32_t>>> by_comp_;
  bool truncated_ = false;
};

namespace detail {

struct TermKey {
  Monomial mono;
  int comp;
  bool operator==(const TermKey& o) const { return comp == o.comp && mono == o.mono; }
};
struct TermKeyHash {
  std::size_t operator()(const TermKey& k) const {
    return k.mono.hash() ^ (static_cast<std::size_t>(k.comp) * 0x9e3779b97f4a7c15ull);
  }
};

// Reduces f by a set of monic reducers. `find` maps a term to a reducer index
// (or -1); `get` returns the reducer. With `full`, every term is reduced,
// otherwise reduction stops at the first irreducible lead term.
template <class F, class Find, class Get>
SVec<F> reduce(const SVec<F>& f, const TermOrder& ord, Find&& find, Get&& get, bool full) {
  if (f.empty()) return {};
  auto less = [&](const TermKey& a, const TermKey& b) {
    return ord.compare(a.mono, a.comp, b.mono, b.comp) < 0;
  };
  std::priority_queue<TermKey, std::vector<TermKey>, decltype(less)> heap(less);
  std::unordered_map<TermKey, F, TermKeyHash> acc;
  acc.reserve(f.size() * 4);
  for (const auto& t : f) {
    acc.emplace(TermKey{t.mono, t.comp}, t.coef);
    heap.push(TermKey{t.mono, t.comp});
  }
  SVec<F> out;
  while (!heap.empty()) {
    const TermKey k = heap.top();
    heap.pop();
    auto it = acc.find(k);
    F c = std::move(it->second);
    acc.erase(it);
    if (c.is_zero()) continue;
    const int r = find(k.mono, k.comp);
    if (r < 0) {
      out.push_back({k.mono, k.comp, std::move(c)});
      if (!full) {
        // the remaining terms are already below the lead term
        while (!heap.empty()) {
          const TermKey k2 = heap.top();
          heap.pop();
          auto it2 = acc.find(k2);
          if (!it2->second.is_zero()) out.push_back({k2.mono, k2.comp, std::move(it2->second)});
          acc.erase(it2);
        }
        break;
      }
      continue;
    }
    const SVec<F>& g = get(r);
    const Monomial q = k.mono / g.front().mono;
    for (std::size_t i = 1; i < g.size(); ++i) {
      TermKey nk{g[i].mono * q, g[i].comp};
      auto [pos, inserted] = acc.try_emplace(nk, F::zero());
      pos->second -= c * g[i].coef;
      if (inserted) heap.push(nk);
    }
  }
  return out;
}

template <class F>
void make_monic(SVec<F>& v) {
  if (v.empty() || v.front().coef.is_one()) return;
  const F inv = v.front().coef.inv();
  for (auto& t : v) t.coef = t.coef * inv;
}

template <class F>
SVec<F> spoly(const SVec<F>& a, const SVec<F>& b, const Monomial& lcm, const TermOrder& ord) {
  const Monomial qa = lcm / a.front().mono, qb = lcm / b.front().mono;
  SVec<F> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 1, j = 1;
  while (i < a.size() || j < b.size()) {
    int c;
    Monomial ma, mb;
    if (i < a.size()) ma = a[i].mono * qa;
    if (j < b.size()) mb = b[j].mono * qb;
    if (i == a.size())
      c = -1;
    else if (j == b.size())
      c = 1;
    else
      c = ord.compare(ma, a[i].comp, mb, b[j].comp);
    if (c > 0) {
      out.push_back({ma, a[i].comp, a[i].coef});
      ++i;
    } else if (c < 0) {
      out.push_back({mb, b[j].comp, -b[j].coef});
      ++j;
    } else {
      F s = a[i].coef - b[j].coef;
      if (!s.is_zero()) out.push_back({ma, a[i].comp, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace detail

template <class F>
class Buchberger {
 public:
  Buchberger(int nvars, std::vector<int> shifts, MonomialOrder order, GroebnerOptions opts = {})
      : nvars_(nvars), ord_(std::move(shifts), order), opts_(std::move(opts)) {
    by_comp_.resize(ord_.shifts().size());
    live_.resize(ord_.shifts().size());
  }

  void add(const ModuleElement<F>& e) { add(to_svec(e, ord_)); }
  void add(SVec<F> v) {
    if (v.empty()) return;
    for (const auto& t : v)
      if (t.comp < 0 || t.comp >= static_cast<int>(ord_.shifts().size()))
        throw std::invalid_argument("generator component out of range");
    int sugar = 0;
    for (const auto& t : v) sugar = std::max(sugar, ord_.degree(t.mono, t.comp));
    inputs_.push_back({std::move(v), sugar});
  }

  GroebnerBasis<F> run() {
    const auto t0 = std::chrono::steady_clock::now();
    // inputs in ascending (sugar, lead) order, consumed from the back
    std::sort(inputs_.begin(), inputs_.end(), [&](const Input& a, const Input& b) {
      if (a.sugar != b.sugar) return a.sugar > b.sugar;
      return ord_.compare(a.v.front().mono, a.v.front().comp, b.v.front().mono, b.v.front().comp) > 0;
    });
    while (!inputs_.empty() || !pairs_.empty()) {
      SVec<F> h;
      int sugar;
      const bool take_input =
          !inputs_.empty() && (pairs_.empty() || inputs_.back().sugar <= pairs_.back().sugar);
      if (take_input) {
        h = std::move(inputs_.back().v);
        sugar = inputs_.back().sugar;
        inputs_.pop_back();
        if (opts_.max_degree && sugar > *opts_.max_degree) {
          truncated_ = true;
          continue;
        }
      } else {
        Pair p = pairs_.back();
        pairs_.pop_back();
        if (opts_.max_degree && p.sugar > *opts_.max_degree) {
          truncated_ = true;
          continue;
        }
        ++stats_.pairs_considered;
        h = detail::spoly(elems_[p.i].v, elems_[p.j].v, p.lcm, ord_);
        sugar = p.sugar;
      }
      h = reduce_by_current(h, opts_.tail_reduce);
      if (h.empty()) {
        if (!take_input) ++stats_.pairs_reduced_to_zero;
        continue;
      }
      detail::make_monic(h);
      insert(std::move(h), sugar);
      if (opts_.progress) opts_.progress(sugar, elems_.size(), pairs_.size());
    }
    auto basis = finish();
    stats_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return basis;
  }

  const GroebnerStats& stats() const { return stats_; }

 private:
  struct Elem {
    SVec<F> v;
    int sugar;
    std::uint32_t supp;
    bool redundant = false;
  };
  struct Pair {
    int i, j;
    Monomial lcm;
    int comp;
    int sugar;
  };
  struct Input {
    SVec<F> v;
    int sugar;
  };

  // Sort key: pairs_ is kept in descending order so the cheapest pair is at the back.
  bool pair_greater(const Pair& a, const Pair& b) const {
    if (a.sugar != b.sugar) return a.sugar > b.sugar;
    const int c = ord_.compare(a.lcm, a.comp, b.lcm, b.comp);
    if (c != 0) return c > 0;
    if (a.j != b.j) return a.j > b.j;
    return a.i > b.i;
  }

  int find(const Monomial& m, int c) const {
    const std::uint32_t s = m.support();
    for (const auto& [idx, supp] : by_comp_[c]) {
      if ((supp & ~s) != 0) continue;
      if (elems_[idx].v.front().mono.divides(m)) return idx;
    }
    return -1;
  }

  SVec<F> reduce_by_current(const SVec<F>& f, bool full) const {
    return detail::reduce<F>(
        f, ord_, [&](const Monomial& m, int c) { return find(m, c); },
        [&](int i) -> const SVec<F>& { return elems_[i].v; }, full);
  }

  void insert(SVec<F> h, int sugar) {
    const Monomial lm = h.front().mono;
    const int comp = h.front().comp;
    const int t = static_cast<int>(elems_.size());
    const bool ideal = ord_.shifts().size() == 1;

    // new pairs with every non-redundant element in the same component
    std::vector<Pair> fresh;
    for (int g : live_[comp]) {
      const Monomial& lg = elems_[g].v.front().mono;
      const Monomial l = Monomial::lcm(lm, lg);
      const int s = std::max(sugar + (l.degree() - lm.degree()),
                             elems_[g].sugar + (l.degree() - lg.degree()));
      fresh.push_back({g, t, l, comp, s});
    }
    // chain criterion among the new pairs: drop a pair whose lcm is a proper
    // multiple of another new lcm; keep one pair per distinct lcm
    std::sort(fresh.begin(), fresh.end(), [&](const Pair& a, const Pair& b) {
      const int c = Monomial::grevlex(a.lcm, b.lcm);
      if (c != 0) return c < 0;
      return a.i < b.i;
    });
    std::vector<Pair> kept;
    std::vector<char> coprime_lcm;
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      const Pair& p = fresh[a];
      bool drop = false;
      for (const auto& q : kept)
        if (q.lcm.divides(p.lcm)) {
          drop = true;
          break;
        }
      if (drop) continue;
      kept.push_back(p);
    }
    if (ideal) {
      // product criterion: an lcm that is reached by a coprime pair needs no pair
      std::vector<Pair> out;
      for (const auto& p : kept) {
        bool any_coprime = false;
        for (const auto& q : fresh)
          if (q.lcm == p.lcm && Monomial::coprime(lm, elems_[q.i].v.front().mono)) {
            any_coprime = true;
            break;
          }
        if (!any_coprime) out.push_back(p);
      }
      kept.swap(out);
    }
    // old pairs made superfluous by the new lead term
    std::vector<Pair> remaining;
    remaining.reserve(pairs_.size());
    for (const auto& p : pairs_) {
      if (p.comp == comp && lm.divides(p.lcm)) {
        const Monomial li = Monomial::lcm(elems_[p.i].v.front().mono, lm);
        const Monomial lj = Monomial::lcm(elems_[p.j].v.front().mono, lm);
        if (!(li == p.lcm) && !(lj == p.lcm)) continue;
      }
      remaining.push_back(p);
    }
    std::sort(kept.begin(), kept.end(), [&](const Pair& a, const Pair& b) { return pair_greater(a, b); });
    pairs_.clear();
    std::merge(remaining.begin(), remaining.end(), kept.begin(), kept.end(), std::back_inserter(pairs_),
               [&](const Pair& a, const Pair& b) { return pair_greater(a, b); });

    // elements whose lead term is a multiple of the new one stop spawning pairs
    std::vector<int> live;
    for (int g : live_[comp]) {
      if (lm.divides(elems_[g].v.front().mono))
        elems_[g].redundant = true;
      else
        live.push_back(g);
    }
    live.push_back(t);
    live_[comp] = std::move(live);

    const std::uint32_t supp = lm.support();
    elems_.push_back({std::move(h), sugar, supp});
    by_comp_[comp].push_back({t, supp});
    ++stats_.basis_insertions;
  }

  GroebnerBasis<F> finish() {
    std::vector<int> minimal;
    for (std::size_t c = 0; c < live_.size(); ++c)
      for (int g : live_[c]) minimal.push_back(g);
    // interreduce against the minimal set only
    std::vector<std::vector<std::pair<int, std::uint32_t>>> idx(ord_.shifts().size());
    for (int g : minimal) idx[elems_[g].v.front().comp].push_back({g, elems_[g].supp});
    auto find_min = [&](const Monomial& m, int c) {
      const std::uint32_t s = m.support();
      for (const auto& [i, supp] : idx[c]) {
        if ((supp & ~s) != 0) continue;
        if (elems_[i].v.front().mono.divides(m)) return i;
      }
      return -1;
    };
    std::vector<SVec<F>> out;
    out.reserve(minimal.size());
    for (int g : minimal) {
      const SVec<F>& v = elems_[g].v;
      SVec<F> tail(v.begin() + 1, v.end());
      tail = detail::reduce<F>(
          tail, ord_, find_min, [&](int i) -> const SVec<F>& { return elems_[i].v; }, true);
      SVec<F> r;
      r.reserve(tail.size() + 1);
      r.push_back(v.front());
      r.insert(r.end(), tail.begin(), tail.end());
      detail::make_monic(r);
      out.push_back(std::move(r));
    }
    std::sort(out.begin(), out.end(), [&](const SVec<F>& a, const SVec<F>& b) {
      return ord_.compare(a.front().mono, a.front().comp, b.front().mono, b.front().comp) < 0;
    });
    return GroebnerBasis<F>(nvars_, ord_.shifts(), ord_.order(), std::move(out), truncated_);
  }

  int nvars_;
  TermOrder ord_;
  GroebnerOptions opts_;
  std::vector<Elem> elems_;
  std::vector<std::vector<std::pair<int, std::uint32_t>>> by_comp_;
  std::vector<std::vector<int>> live_;
  std::vector<Pair> pairs_;
  std::vector<Input> inputs_;
  GroebnerStats stats_;
  bool truncated_ = false;
};

// ---------------------------------------------------------------------------
// Public operations

template <class F>
GroebnerBasis<F> buchberger(const std::vector<ModuleElement<F>>& gens, int nvars, std::vector<int> shifts,
                            MonomialOrder order = {}, GroebnerOptions opts = {},
                            GroebnerStats* stats = nullptr) {
  Buchberger<F> engine(nvars, std::move(shifts), order, std::move(opts));
  for (const auto& g : gens) {
    if (g.nvars() != nvars) throw std::invalid_argument("generator variable count mismatch");
    if (g.denominator()) throw std::invalid_argument("generators must not carry denominators");
    engine.add(g);
  }
  auto gb = engine.run();
  if (stats) *stats = engine.stats();
  return gb;
}

template <class F>
SVec<F> normal_form(const SVec<F>& v, const GroebnerBasis<F>& gb) {
  return detail::reduce<F>(
      v, gb.term_order(), [&](const Monomial& m, int c) { return gb.find_divisor(m, c); },
      [&](int i) -> const SVec<F>& { return gb.raw()[i]; }, true);
}

template <class F>
ModuleElement<F> normal_form(const ModuleElement<F>& e, const GroebnerBasis<F>& gb) {
  if (e.shifts() != gb.shifts()) throw std::invalid_argument("shift profile mismatch");
  return from_svec(normal_form(to_svec(e, gb.term_order()), gb), gb.nvars(), gb.shifts());
}

template <class F>
bool contains(const GroebnerBasis<F>& gb, const ModuleElement<F>& e) {
  if (e.shifts() != gb.shifts()) throw std::invalid_argument("shift profile mismatch");
  return normal_form(to_svec(e, gb.term_order()), gb).empty();
}

template <class F>
bool contains_all(const GroebnerBasis<F>& gb, const GroebnerBasis<F>& sub) {
  for (const auto& v : sub.raw())
    if (!normal_form(v, gb).empty()) return false;
  return true;
}

// Hilbert series of F/S for S generated by the basis.
template <class F>
HilbertSeries hilbert_series(const GroebnerBasis<F>& gb) {
  if (gb.order().extension != ModuleExtension::TermOverPosition && gb.rank() > 1) {
    // any order works for lead modules, but shifts only enter the degree under TOP
  }
  return hilbert_series_from_leads(gb.nvars(), gb.shifts(), gb.leads_per_comp());
}

namespace detail {

// Elements of a POT basis on F_a (+) F_b whose lead lies in the second block,
// projected onto that block.
template <class F>
std::vector<ModuleElement<F>> second_block(const GroebnerBasis<F>& gb, int first_rank, int nvars,
                                           const std::vector<int>& shifts_b) {
  std::vector<ModuleElement<F>> out;
  for (const auto& v : gb.raw()) {
    if (v.front().comp < first_rank) continue;
    SVec<F> w;
    w.reserve(v.size());
    for (const auto& t : v) w.push_back({t.mono, t.comp - first_rank, t.coef});
    out.push_back(from_svec(w, nvars, shifts_b));
  }
  return out;
}

template <class F>
ModuleElement<F> embed(const ModuleElement<F>& a, const ModuleElement<F>* b, const std::vector<int>& shifts) {
  ModuleElement<F> r(a.nvars(), shifts);
  for (int i = 0; i < a.rank(); ++i) r.set(i, a[i]);
  if (b)
    for (int i = 0; i < b->rank(); ++i) r.set(a.rank() + i, (*b)[i]);
  return r;
}

}  // namespace detail

// (K : f) = { T : f T in K } for a homogeneous polynomial f != 0.
template <class F>
std::vector<ModuleElement<F>> module_quotient(const std::vector<ModuleElement<F>>& K, const Poly<F>& f,
                                              int nvars, const std::vector<int>& shifts,
                                              GroebnerOptions opts = {}) {
  if (f.is_zero() || !f.is_homogeneous()) throw std::invalid_argument("quotient needs homogeneous f != 0");
  const int r = static_cast<int>(shifts.size());
  std::vector<int> big = shifts;
  for (int s : shifts) big.push_back(s + f.degree());
  Buchberger<F> engine(nvars, big, {ModuleExtension::PositionOverTerm}, std::move(opts));
  for (int k = 0; k < r; ++k) {
    ModuleElement<F> g(nvars, big);
    g.set(k, f);
    g.set(r + k, Poly<F>::constant(nvars, F::one()));
    engine.add(g);
  }
  for (const auto& k : K) engine.add(detail::embed<F>(k, nullptr, big));
  auto gb = engine.run();
  return detail::second_block(gb, r, nvars, shifts);
}

// Intersection of two submodules of the same free module.
template <class F>
std::vector<ModuleElement<F>> intersect(const std::vector<ModuleElement<F>>& A,
                                        const std::vector<ModuleElement<F>>& B, int nvars,
                                        const std::vector<int>& shifts, GroebnerOptions opts = {}) {
  const int r = static_cast<int>(shifts.size());
  std::vector<int> big = shifts;
  big.insert(big.end(), shifts.begin(), shifts.end());
  Buchberger<F> engine(nvars, big, {ModuleExtension::PositionOverTerm}, std::move(opts));
  for (const auto& a : A) engine.add(detail::embed(a, &a, big));
  for (const auto& b : B) engine.add(detail::embed<F>(b, nullptr, big));
  auto gb = engine.run();
  return detail::second_block(gb, r, nvars, shifts);
}

// Syzygies of targets t_1..t_s in F_r / K: all (c_k) with sum c_k t_k in K.
// `target_degrees` are the degrees assigned to the new generators.
template <class F>
std::vector<ModuleElement<F>> kernel_of_presentation_map(const std::vector<ModuleElement<F>>& targets,
                                                         const std::vector<ModuleElement<F>>& K, int nvars,
                                                         const std::vector<int>& shifts,
                                                         const std::vector<int>& target_degrees,
                                                         GroebnerOptions opts = {}) {
  const int r = static_cast<int>(shifts.size());
  const int s = static_cast<int>(targets.size());
  if (static_cast<int>(target_degrees.size()) != s) throw std::invalid_argument("degree list mismatch");
  std::vector<int> big = shifts;
  big.insert(big.end(), target_degrees.begin(), target_degrees.end());
  Buchberger<F> engine(nvars, big, {ModuleExtension::PositionOverTerm}, std::move(opts));
  for (int k = 0; k < s; ++k) {
    ModuleElement<F> g = detail::embed<F>(targets[k], nullptr, big);
    g.set(r + k, Poly<F>::constant(nvars, F::one()));
    engine.add(g);
  }
  for (const auto& k : K) engine.add(detail::embed<F>(k, nullptr, big));
  auto gb = engine.run();
  return detail::second_block(gb, r, nvars, target_degrees);
}

// (K : m) for a monomial m, one variable at a time. For grevlex the quotient by
// the last variable is read off a basis: divide every element whose lead
// term is divisible by it. Other variables are first swapped into last place.
template <class F>
std::vector<ModuleElement<F>> module_quotient_monomial(std::vector<ModuleElement<F>> K, const Monomial& m,
                                                       int nvars, const std::vector<int>& shifts,
                                                       GroebnerOptions opts = {}) {
  const int last = nvars - 1;
  std::vector<int> comp(shifts.size());
  for (std::size_t i = 0; i < comp.size(); ++i) comp[i] = static_cast<int>(i);
  for (int v = 0; v < nvars; ++v)
    for (int rep = 0; rep < m.exp(v); ++rep) {
      std::vector<int> perm(nvars);
      for (int i = 0; i < nvars; ++i) perm[i] = i;
      std::swap(perm[v], perm[last]);
      std::vector<ModuleElement<F>> moved;
      moved.reserve(K.size());
      for (const auto& e : K) moved.push_back(e.permuted(perm, comp));
      const auto gb = buchberger(moved, nvars, shifts, {}, opts);
      const Monomial x = Monomial::variable(last);
      K.clear();
      for (auto e : gb.elements()) {
        bool div = true;
        for (int c = 0; c < e.rank() && div; ++c) div = e[c].divisible_by(x);
        if (div)
          for (int c = 0; c < e.rank(); ++c) e.set(c, e[c].divided_by(x));
        K.push_back(e.permuted(perm, comp));
      }
    }
  return K;
}

// Intersection of several submodules, folded pairwise from the smallest basis up.
template <class F>
std::vector<ModuleElement<F>> intersect_all(const std::vector<std::vector<ModuleElement<F>>>& mods, int nvars,
                                            const std::vector<int>& shifts, GroebnerOptions opts = {}) {
  if (mods.empty()) throw std::invalid_argument("intersection of no modules");
  std::vector<GroebnerBasis<F>> bases;
  for (const auto& m : mods) bases.push_back(buchberger(m, nvars, shifts, {}, opts));
  std::stable_sort(bases.begin(), bases.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  auto acc = bases.front().elements();
  for (std::size_t i = 1; i < bases.size(); ++i)
    acc = buchberger(intersect(acc, bases[i].elements(), nvars, shifts, opts), nvars, shifts, {}, opts).elements();
  return acc;
}

}  // namespace siegel
