#pragma once

// The module of genus-2 theta gradients over C[theta_1..theta_10] / (Riemann
// quartics): relation catalogs, the relation module, the modules M(m, n) and
// their intersection, the extra generator and the final Hilbert series; plus
// the two presented modules over C[f_0..f_3].

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "siegel/basis_cache.hpp"
#include "siegel/chars.hpp"
#include "siegel/groebner.hpp"
#include "siegel/textio.hpp"

namespace siegel {

inline constexpr int kThetaVars = 10;
inline constexpr int kGradRank = 6;
inline constexpr int kChi5Degree = 10;

// T_1..T_6 all sit in degree 1.
inline std::vector<int> gradient_shifts() { return std::vector<int>(kGradRank, 1); }

// Product of theta_k over 1-based labels.
Monomial theta_monomial(std::initializer_list<int> labels);
Monomial theta_monomial(const std::vector<int>& labels);
// chi_5 = theta_1 ... theta_10.
Monomial chi5_monomial();

// The 20 quartics in the printed order.
const std::vector<std::string>& riemann_text();

struct DTableEntry {
  int i, j;
  std::array<int, 4> quad;
  int sign;
  Monomial product() const;
};
// The table as printed (normalization: D(i,j) = sign * product, see numerics).
const std::vector<DTableEntry>& d_table();
const DTableEntry& d_entry(int i, int j);
// D(i, j) for i != j, with D(j, i) = -D(i, j).
std::pair<int, Monomial> d_value(int i, int j);
// Product of the six thetas outside the azygetic quadruple of (i, j).
Monomial complement_product(int i, int j);

enum class RelationKind { RelD, ExtrA, ExtrB };
std::string to_string(RelationKind k);

// sign * mono * T_comp (comp 0-based).
struct SignedTerm {
  int sign;
  Monomial mono;
  int comp;
};

// A relation up to the signs of its summands: element = sum_k s_k * parts[k],
// s_0 = +1. For RelD all s_k are +1.
struct RelationShape {
  RelationKind kind;
  std::vector<int> indices;
  std::vector<SignedTerm> parts;
};

std::vector<RelationShape> rel_d_shapes();
std::vector<RelationShape> extr_a_shapes();

struct SForm {
  int odd;                   // 1..6
  std::array<int, 5> evens;  // ascending even labels
  Monomial mono() const { return theta_monomial({evens[0], evens[1], evens[2], evens[3], evens[4]}); }
  bool operator==(const SForm&) const = default;
  auto operator<=>(const SForm&) const = default;
};
// Six S-forms, one per odd label, stored in odd-label order.
struct Sextet {
  std::array<SForm, 6> forms;
  bool operator==(const Sextet&) const = default;
  auto operator<=>(const Sextet&) const = default;
};

// All 72 S-forms.
std::vector<SForm> all_sforms();
// Sextets using every odd label once and every even label exactly three times.
std::vector<Sextet> balanced_sextets();
// The squared theta attached to each surviving form when `cancelled_odd` is
// dropped (index odd-1; 0 for the cancelled one), or nullopt if the rule does
// not single out a unique label for some form.
std::optional<std::array<int, 6>> extr_b_rule(const Sextet& s, int cancelled_odd);
RelationShape extr_b_shape(const Sextet& s, int sextet_id, int cancelled_odd, const std::array<int, 6>& m);
// Number of ways to partition all 72 forms into blocks from `blocks`.
std::size_t count_exact_covers(const std::vector<Sextet>& blocks);

// The numerator of the extra generator and its denominator theta_2 theta_5.
std::vector<SignedTerm> extr_h_numerator_terms();
Monomial extr_h_denominator();

// The expected series of the module and its first eight coefficients.
HilbertSeries main_theorem_series();
std::vector<std::int64_t> main_theorem_coefficients();

template <class F>
struct RelationRecord {
  RelationKind kind;
  std::vector<int> indices;
  std::vector<int> signs;
  ModuleElement<F> element;
  std::string label() const;
};

template <class F>
ModuleElement<F> build_element(const std::vector<SignedTerm>& parts, const std::vector<int>& signs) {
  ModuleElement<F> e(kThetaVars, gradient_shifts());
  std::vector<std::vector<PolyTerm<F>>> comps(kGradRank);
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const int s = parts[k].sign * (signs.empty() ? 1 : signs[k]);
    comps[parts[k].comp].push_back({parts[k].mono, F::from_int(s)});
  }
  for (int c = 0; c < kGradRank; ++c) e.set(c, Poly<F>(kThetaVars, std::move(comps[c])));
  return e;
}

template <class F>
ModuleElement<F> multiply_by(const ModuleElement<F>& e, const Monomial& m) {
  return e.scaled(Poly<F>::monomial(e.nvars(), m));
}

template <class F>
std::vector<Poly<F>> riemann_ideal() {
  std::vector<Poly<F>> out;
  for (const auto& s : riemann_text()) out.push_back(parse_poly<F>(s, kThetaVars));
  return out;
}

struct PipelineOptions {
  std::optional<std::string> cache_dir;
  // Diagnostics sink; receives one line per pipeline stage.
  std::function<void(const std::string&)> log;
};

struct SignSearchResult {
  std::vector<std::vector<int>> passing;  // sign vectors with s_0 = +1 that pass
};

struct OrbitResult {
  std::size_t group_size = 0;
  std::size_t candidates_in_module = 0;
  std::vector<std::string> elements;  // projectively distinct, monic, as text
  std::size_t rejected = 0;
};

struct MainTheoremReport {
  HilbertSeries series;
  std::vector<std::int64_t> coefficients;  // t^1 .. t^12
  bool series_matches = false;
  std::optional<int> first_mismatch;  // degree of the first differing coefficient
  bool generated_in_chi5M = false;
  bool chi5M_in_generated = false;
  std::size_t orbit_size = 0;
  bool extr_h_in_chi5M = false;
  bool extr_h_outside_N = false;
  bool nonnegative = false;
};

template <class F>
class ThetaRing {
 public:
  explicit ThetaRing(PipelineOptions opts = {}) : opts_(std::move(opts)) {}

  // I * F: every quartic in every component.
  std::vector<ModuleElement<F>> riemann_module_gens() const {
    std::vector<ModuleElement<F>> out;
    for (const auto& q : riemann_ideal<F>())
      for (int c = 0; c < kGradRank; ++c)
        out.push_back(ModuleElement<F>::unit(kThetaVars, gradient_shifts(), c, q));
    return out;
  }

  const GroebnerBasis<F>& riemann_basis() {
    if (!riemann_gb_) {
      std::vector<ModuleElement<F>> gens;
      for (const auto& q : riemann_ideal<F>()) gens.push_back(ModuleElement<F>::unit(kThetaVars, {0}, 0, q));
      riemann_gb_ = basis("riemann", gens, {0});
    }
    return *riemann_gb_;
  }

  std::vector<RelationRecord<F>> rel_d() const {
    std::vector<RelationRecord<F>> out;
    for (const auto& s : rel_d_shapes()) {
      std::vector<int> signs(s.parts.size(), 1);
      out.push_back({s.kind, s.indices, signs, build_element<F>(s.parts, signs)});
    }
    return out;
  }

  // K_RelD + I F.
  const GroebnerBasis<F>& reld_basis() {
    if (!reld_gb_) {
      auto gens = riemann_module_gens();
      for (const auto& r : rel_d()) gens.push_back(r.element);
      reld_gb_ = basis("reld", gens, gradient_shifts());
    }
    return *reld_gb_;
  }

  // Normal form of chi5 * e modulo K_RelD + I F.
  SVec<F> chi5_residue(const ModuleElement<F>& e) {
    const auto& gb = reld_basis();
    return normal_form(to_svec(multiply_by(e, chi5_monomial()), gb.term_order()), gb);
  }
  bool chi5_oracle(const ModuleElement<F>& e) { return chi5_residue(e).empty(); }

  // Sign vectors (s_0 = +1) for which chi5 * sum s_k parts_k lies in K_RelD + I F.
  SignSearchResult sign_search(const RelationShape& shape) {
    std::vector<SVec<F>> res;
    for (const auto& p : shape.parts) res.push_back(part_residue(p));
    SignSearchResult out;
    const int n = static_cast<int>(shape.parts.size());
    for (int mask = 0; mask < 1 << (n - 1); ++mask) {
      std::vector<int> s(n, 1);
      for (int k = 1; k < n; ++k)
        if (mask >> (k - 1) & 1) s[k] = -1;
      std::unordered_map<detail::TermKey, F, detail::TermKeyHash> acc;
      for (int k = 0; k < n; ++k)
        for (const auto& t : res[k]) {
          auto& c = acc.try_emplace(detail::TermKey{t.mono, t.comp}, F::zero()).first->second;
          c = s[k] > 0 ? c + t.coef : c - t.coef;
        }
      bool zero = true;
      for (const auto& [key, c] : acc)
        if (!c.is_zero()) {
          zero = false;
          break;
        }
      if (zero) out.passing.push_back(s);
    }
    return out;
  }

  const std::vector<RelationRecord<F>>& extr_a() {
    if (!extr_a_) {
      std::vector<RelationRecord<F>> out;
      for (const auto& s : extr_a_shapes()) {
        auto found = sign_search(s);
        if (found.passing.size() != 1)
          throw std::runtime_error("ExtrA" + indices_text(s.indices) + ": " +
                                   std::to_string(found.passing.size()) + " sign patterns pass the chi5 oracle");
        out.push_back({s.kind, s.indices, found.passing[0], build_element<F>(s.parts, found.passing[0])});
      }
      extr_a_ = std::move(out);
      log("ExtrA: 30 relations, one sign pattern each");
    }
    return *extr_a_;
  }

  struct SextetDerivation {
    std::size_t balanced = 0;
    std::size_t rule_consistent = 0;
    std::size_t oracle_certified = 0;
    std::size_t exact_covers = 0;
    std::vector<Sextet> sextets;  // sorted; id = position + 1
    // signs[id-1][cancelled_odd-1]
    std::vector<std::array<std::vector<int>, 6>> signs;
    std::vector<std::array<std::array<int, 6>, 6>> rule;
  };

  // Structural filter, then the chi5 oracle: a block survives when every one of
  // its six cancellations has exactly one passing sign pattern.
  const SextetDerivation& sextets() {
    if (!sextets_) {
      SextetDerivation d;
      const auto bal = balanced_sextets();
      d.balanced = bal.size();
      std::vector<Sextet> certified;
      std::vector<std::array<std::vector<int>, 6>> signs;
      std::vector<std::array<std::array<int, 6>, 6>> rules;
      for (const auto& s : bal) {
        std::array<std::array<int, 6>, 6> rule{};
        bool ok = true;
        for (int c = 1; c <= 6 && ok; ++c) {
          auto r = extr_b_rule(s, c);
          if (!r) ok = false;
          else rule[c - 1] = *r;
        }
        if (!ok) continue;
        ++d.rule_consistent;
        std::array<std::vector<int>, 6> sg;
        for (int c = 1; c <= 6 && ok; ++c) {
          auto found = sign_search(extr_b_shape(s, 0, c, rule[c - 1]));
          if (found.passing.size() != 1) ok = false;
          else sg[c - 1] = found.passing[0];
        }
        if (!ok) continue;
        certified.push_back(s);
        signs.push_back(sg);
        rules.push_back(rule);
      }
      d.oracle_certified = certified.size();
      d.exact_covers = count_exact_covers(certified);
      if (d.exact_covers != 1 || certified.size() != 12)
        throw std::runtime_error("sextet search: " + std::to_string(certified.size()) + " certified blocks, " +
                                 std::to_string(d.exact_covers) + " exact covers");
      std::vector<std::size_t> order(certified.size());
      for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
      std::sort(order.begin(), order.end(), [&](auto a, auto b) { return certified[a] < certified[b]; });
      for (auto i : order) {
        d.sextets.push_back(certified[i]);
        d.signs.push_back(signs[i]);
        d.rule.push_back(rules[i]);
      }
      sextets_ = std::move(d);
      log("sextets: " + std::to_string(sextets_->balanced) + " balanced, " +
          std::to_string(sextets_->rule_consistent) + " rule-consistent, 12 certified");
    }
    return *sextets_;
  }

  const std::vector<RelationRecord<F>>& extr_b() {
    if (!extr_b_) {
      const auto& d = sextets();
      std::vector<RelationRecord<F>> out;
      for (std::size_t id = 0; id < d.sextets.size(); ++id)
        for (int c = 1; c <= 6; ++c) {
          const auto shape = extr_b_shape(d.sextets[id], static_cast<int>(id) + 1, c, d.rule[id][c - 1]);
          out.push_back({shape.kind, shape.indices, d.signs[id][c - 1], build_element<F>(shape.parts, d.signs[id][c - 1])});
        }
      extr_b_ = std::move(out);
    }
    return *extr_b_;
  }

  std::vector<RelationRecord<F>> all_relations() {
    auto out = rel_d();
    for (const auto& r : extr_a()) out.push_back(r);
    for (const auto& r : extr_b()) out.push_back(r);
    return out;
  }

  // (K_RelD + I F : chi5), by quotienting one variable at a time.
  const GroebnerBasis<F>& total_kernel() {
    if (!kernel_gb_) {
      auto gens = reld_basis().elements();
      kernel_gb_ = cached_monomial_quotient("kernel", gens, chi5_monomial());
      log("total kernel: " + std::to_string(kernel_gb_->size()) + " basis elements");
    }
    return *kernel_gb_;
  }

  // Span of the 122 catalog relations plus I F.
  const GroebnerBasis<F>& catalog_module() {
    if (!catalog_gb_) {
      auto gens = riemann_module_gens();
      for (const auto& r : all_relations()) gens.push_back(r.element);
      catalog_gb_ = basis("catalog", gens, gradient_shifts());
    }
    return *catalog_gb_;
  }

  std::vector<ModuleElement<F>> m_pair_gens(int i, int j) {
    auto gens = total_kernel().elements();
    const auto P = Poly<F>::monomial(kThetaVars, complement_product(i, j));
    gens.push_back(ModuleElement<F>::unit(kThetaVars, gradient_shifts(), i - 1, P));
    gens.push_back(ModuleElement<F>::unit(kThetaVars, gradient_shifts(), j - 1, P));
    return gens;
  }
  GroebnerBasis<F> m_pair(int i, int j) {
    return basis("mpair" + std::to_string(i) + std::to_string(j), m_pair_gens(i, j), gradient_shifts());
  }

  const GroebnerBasis<F>& chi5_M() {
    if (!chi5m_gb_) {
      std::vector<std::vector<ModuleElement<F>>> mods;
      for (int i = 1; i <= 6; ++i)
        for (int j = i + 1; j <= 6; ++j) mods.push_back(m_pair(i, j).elements());
      chi5m_gb_ = cached_intersection("chi5M", mods);
      log("chi5 M: " + std::to_string(chi5m_gb_->size()) + " basis elements");
    }
    return *chi5m_gb_;
  }

  // Series of M = t^-10 (HS(F / K) - HS(F / chi5 M)).
  HilbertSeries module_series() {
    return (hilbert_series(total_kernel()) - hilbert_series(chi5_M())).shifted(-kChi5Degree).normalized();
  }
  HilbertSeries relation_quotient_series() { return hilbert_series(total_kernel()); }

  ModuleElement<F> extr_h() const {
    return build_element<F>(extr_h_numerator_terms(), {}).monomial_divide(extr_h_denominator());
  }
  // chi5 * extr_h as a polynomial element.
  ModuleElement<F> extr_h_chi5() const {
    return multiply_by(build_element<F>(extr_h_numerator_terms(), {}), chi5_monomial() / extr_h_denominator());
  }

  // K + chi5 F: the chi5-multiple of the span of the gradients.
  const GroebnerBasis<F>& chi5_N() {
    if (!chi5n_gb_) {
      auto gens = total_kernel().elements();
      for (int c = 0; c < kGradRank; ++c)
        gens.push_back(ModuleElement<F>::unit(kThetaVars, gradient_shifts(), c,
                                              Poly<F>::monomial(kThetaVars, chi5_monomial())));
      chi5n_gb_ = basis("chi5N", gens, gradient_shifts());
    }
    return *chi5n_gb_;
  }

  // Relabels the three summands of the extra generator by every symplectic
  // permutation and keeps the combination (if any) whose chi5-multiple lies in
  // chi5 M; elements are normalized to lead coefficient 1 and deduplicated.
  const OrbitResult& orbit_extr_h() {
    if (!orbit_) {
      OrbitResult r;
      const auto& group = symplectic_permutations();
      r.group_size = group.size();
      const auto& target = chi5_M();
      const auto num = extr_h_numerator_terms();
      std::set<std::string> seen;
      orbit_elems_.clear();
      for (const auto& g : group) {
        std::vector<int> var(kThetaVars), comp(kGradRank);
        for (int k = 0; k < kThetaVars; ++k) var[k] = g.even[k];
        for (int k = 0; k < kGradRank; ++k) comp[k] = g.odd[k];
        Monomial den;
        for (int k = 0; k < kThetaVars; ++k)
          if (int e = extr_h_denominator().exp(k)) den.set(var[k], e);
        const Monomial cofactor = chi5_monomial() / den;
        std::vector<ModuleElement<F>> parts;
        for (const auto& t : num) {
          ModuleElement<F> e = build_element<F>({t}, {});
          parts.push_back(multiply_by(e.permuted(var, comp), cofactor));
        }
        auto coeffs = dependency(parts, target);
        if (!coeffs) {
          ++r.rejected;
          continue;
        }
        ++r.candidates_in_module;
        ModuleElement<F> sum(kThetaVars, gradient_shifts());
        for (std::size_t k = 0; k < parts.size(); ++k) sum = sum + parts[k].scaled((*coeffs)[k]);
        auto v = to_svec(sum, target.term_order());
        detail::make_monic(v);
        auto elem = from_svec(v, kThetaVars, gradient_shifts());
        const std::string key = to_string(elem);
        if (seen.insert(key).second) {
          r.elements.push_back(key);
          orbit_elems_.push_back(elem);
        }
      }
      orbit_ = std::move(r);
      log("orbit: " + std::to_string(orbit_->elements.size()) + " projectively distinct elements");
    }
    return *orbit_;
  }
  const std::vector<ModuleElement<F>>& orbit_elements() {
    orbit_extr_h();
    return orbit_elems_;
  }

  MainTheoremReport verify_main_theorem() {
    MainTheoremReport rep;
    const auto& M = chi5_M();
    rep.extr_h_in_chi5M = contains(M, extr_h_chi5());
    rep.extr_h_outside_N = !contains(chi5_N(), extr_h_chi5());
    rep.orbit_size = orbit_extr_h().elements.size();

    auto gens = total_kernel().elements();
    for (int c = 0; c < kGradRank; ++c)
      gens.push_back(ModuleElement<F>::unit(kThetaVars, gradient_shifts(), c,
                                            Poly<F>::monomial(kThetaVars, chi5_monomial())));
    for (const auto& e : orbit_elements()) gens.push_back(e);
    const auto generated = basis("generated", gens, gradient_shifts());
    rep.generated_in_chi5M = contains_all(M, generated);
    rep.chi5M_in_generated = contains_all(generated, M);

    rep.series = module_series();
    rep.coefficients = rep.series.coefficients(1, 12);
    const auto expected = main_theorem_series();
    rep.series_matches = rep.series == expected;
    const auto exp_coeffs = expected.coefficients(1, 12);
    for (int d = 0; d < 12; ++d)
      if (rep.coefficients[d] != exp_coeffs[d]) {
        rep.first_mismatch = d + 1;
        break;
      }
    const auto low = rep.series.coefficients(0, 40);
    rep.nonnegative = std::all_of(low.begin(), low.end(), [](std::int64_t c) { return c >= 0; });
    return rep;
  }

  const PipelineOptions& options() const { return opts_; }

 private:
  void log(const std::string& s) const {
    if (opts_.log) opts_.log(s);
  }

  static std::string indices_text(const std::vector<int>& idx) {
    std::string s = "(";
    for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? "," : "") + std::to_string(idx[i]);
    return s + ")";
  }

  GroebnerBasis<F> basis(const std::string& tag, const std::vector<ModuleElement<F>>& gens,
                         const std::vector<int>& shifts) {
    auto gb = cached_buchberger<F>(gens, kThetaVars, shifts, MonomialOrder{}, opts_.cache_dir);
    log(tag + ": " + std::to_string(gb.size()) + " basis elements");
    return gb;
  }

  GroebnerBasis<F> cached_monomial_quotient(const std::string& tag, const std::vector<ModuleElement<F>>& gens,
                                            const Monomial& m) {
    auto key = cache_key(gens, kThetaVars, gradient_shifts(), MonomialOrder{}, "quotient:" + monomial_to_string(m, kThetaVars, VarNames::theta()));
    if (auto hit = load_cached<F>(opts_.cache_dir, key, kThetaVars, gradient_shifts(), MonomialOrder{})) return *hit;
    auto q = module_quotient_monomial(gens, m, kThetaVars, gradient_shifts());
    auto gb = buchberger(q, kThetaVars, gradient_shifts());
    store_cached(opts_.cache_dir, key, gb);
    log(tag + " quotient computed");
    return gb;
  }

  GroebnerBasis<F> cached_intersection(const std::string& tag, const std::vector<std::vector<ModuleElement<F>>>& mods) {
    std::vector<ModuleElement<F>> all;
    for (const auto& m : mods) {
      all.insert(all.end(), m.begin(), m.end());
      all.push_back(ModuleElement<F>(kThetaVars, gradient_shifts()));  // separator
    }
    auto key = cache_key(all, kThetaVars, gradient_shifts(), MonomialOrder{}, "intersect");
    if (auto hit = load_cached<F>(opts_.cache_dir, key, kThetaVars, gradient_shifts(), MonomialOrder{})) return *hit;
    auto gens = intersect_all(mods, kThetaVars, gradient_shifts());
    auto gb = buchberger(gens, kThetaVars, gradient_shifts());
    store_cached(opts_.cache_dir, key, gb);
    log(tag + " intersection computed");
    return gb;
  }

  SVec<F> part_residue(const SignedTerm& p) {
    std::string key = std::to_string(p.comp) + ":" + std::to_string(p.sign) + ":" +
                      monomial_to_string(p.mono, kThetaVars, VarNames::theta());
    auto it = residues_.find(key);
    if (it != residues_.end()) return it->second;
    auto r = chi5_residue(build_element<F>({p}, {}));
    residues_.emplace(key, r);
    return r;
  }

  // Coefficients c (first nonzero entry 1) with sum c_k parts_k in the module,
  // provided the solution space is one-dimensional.
  std::optional<std::vector<F>> dependency(const std::vector<ModuleElement<F>>& parts,
                                           const GroebnerBasis<F>& gb) {
    const int n = static_cast<int>(parts.size());
    std::vector<std::unordered_map<detail::TermKey, F, detail::TermKeyHash>> cols(n);
    std::vector<detail::TermKey> rows;
    std::unordered_map<detail::TermKey, int, detail::TermKeyHash> row_index;
    for (int k = 0; k < n; ++k)
      for (const auto& t : normal_form(to_svec(parts[k], gb.term_order()), gb)) {
        detail::TermKey key{t.mono, t.comp};
        if (!row_index.count(key)) {
          row_index.emplace(key, static_cast<int>(rows.size()));
          rows.push_back(key);
        }
        cols[k][key] = t.coef;
      }
    // dense matrix rows x n; kernel by Gaussian elimination
    const int m = static_cast<int>(rows.size());
    std::vector<std::vector<F>> A(m, std::vector<F>(n, F::zero()));
    for (int k = 0; k < n; ++k)
      for (const auto& [key, c] : cols[k]) A[row_index[key]][k] = c;
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < n && r < m; ++c) {
      int p = -1;
      for (int i = r; i < m; ++i)
        if (!A[i][c].is_zero()) {
          p = i;
          break;
        }
      if (p < 0) continue;
      std::swap(A[p], A[r]);
      const F inv = A[r][c].inv();
      for (auto& x : A[r]) x = x * inv;
      for (int i = 0; i < m; ++i)
        if (i != r && !A[i][c].is_zero()) {
          const F f = A[i][c];
          for (int k = 0; k < n; ++k) A[i][k] = A[i][k] - f * A[r][k];
        }
      pivot_col.push_back(c);
      ++r;
    }
    if (n - r != 1) return std::nullopt;
    int free_col = -1;
    for (int c = 0; c < n; ++c)
      if (std::find(pivot_col.begin(), pivot_col.end(), c) == pivot_col.end()) free_col = c;
    std::vector<F> x(n, F::zero());
    x[free_col] = F::one();
    for (int i = 0; i < r; ++i) x[pivot_col[i]] = -A[i][free_col];
    return x;
  }

  PipelineOptions opts_;
  std::optional<GroebnerBasis<F>> riemann_gb_, reld_gb_, kernel_gb_, catalog_gb_, chi5m_gb_, chi5n_gb_;
  std::optional<std::vector<RelationRecord<F>>> extr_a_, extr_b_;
  std::optional<SextetDerivation> sextets_;
  std::optional<OrbitResult> orbit_;
  std::vector<ModuleElement<F>> orbit_elems_;
  std::map<std::string, SVec<F>> residues_;
};

template <class F>
std::string RelationRecord<F>::label() const {
  std::string s = to_string(kind) + "(";
  for (std::size_t i = 0; i < indices.size(); ++i) s += (i ? "," : "") + std::to_string(indices[i]);
  return s + ")";
}

// ---------------------------------------------------------------------------
// Modules over C[f_0..f_3]

struct WieberPresentation {
  std::string name;
  std::vector<std::string> generator_names;
  std::vector<int> shifts;
  std::vector<std::string> relations;  // text of each relation as a rank-r element
};

WieberPresentation wieber_plus_presentation();
WieberPresentation wieber_minus_presentation();

template <class F>
GroebnerBasis<F> wieber_basis(const WieberPresentation& p) {
  std::vector<ModuleElement<F>> gens;
  for (const auto& r : p.relations) gens.push_back(parse_element<F>(r, 4, p.shifts, VarNames::second_kind()));
  return buchberger(gens, 4, p.shifts);
}

}  // namespace siegel
