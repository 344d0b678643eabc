#include "siegel/thetaring.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace siegel {

Monomial theta_monomial(std::initializer_list<int> labels) { return theta_monomial(std::vector<int>(labels)); }

Monomial theta_monomial(const std::vector<int>& labels) {
  Monomial m;
  for (int k : labels) {
    if (k < 1 || k > kThetaVars) throw std::out_of_range("theta label must be 1..10");
    m = m * Monomial::variable(k - 1);
  }
  return m;
}

Monomial chi5_monomial() { return theta_monomial({1, 2, 3, 4, 5, 6, 7, 8, 9, 10}); }

const std::vector<std::string>& riemann_text() {
  static const std::vector<std::string> kQuartics = {
      "t6^2*t8^2 - t4^2*t9^2 + t1^2*t10^2", "t5^2*t8^2 - t2^2*t9^2 + t3^2*t10^2",
      "t7^4 - t8^4 - t9^4 + t10^4",          "t6^2*t7^2 - t3^2*t9^2 + t2^2*t10^2",
      "t5^2*t7^2 - t1^2*t9^2 + t4^2*t10^2", "t4^2*t7^2 - t3^2*t8^2 - t5^2*t10^2",
      "t3^2*t7^2 - t4^2*t8^2 - t6^2*t9^2",  "t2^2*t7^2 - t1^2*t8^2 - t6^2*t10^2",
      "t1^2*t7^2 - t2^2*t8^2 - t5^2*t9^2",  "t5^4 - t6^4 - t9^4 + t10^4",
      "t4^2*t5^2 - t2^2*t6^2 - t7^2*t10^2", "t3^2*t5^2 - t1^2*t6^2 - t8^2*t10^2",
      "t2^2*t5^2 - t4^2*t6^2 - t8^2*t9^2",  "t1^2*t5^2 - t3^2*t6^2 - t7^2*t9^2",
      "t3^4 - t4^4 - t6^4 + t10^4",          "t2^2*t3^2 - t1^2*t4^2 + t9^2*t10^2",
      "t1^2*t3^2 - t2^2*t4^2 - t5^2*t6^2",  "t2^4 - t4^4 - t8^4 + t10^4",
      "t1^2*t2^2 - t3^2*t4^2 - t7^2*t8^2",  "t1^4 - t2^4 - t6^4 - t9^4"};
  return kQuartics;
}

Monomial DTableEntry::product() const { return theta_monomial({quad[0], quad[1], quad[2], quad[3]}); }

const std::vector<DTableEntry>& d_table() {
  static const std::vector<DTableEntry> kTable = [] {
    std::vector<DTableEntry> t = {
        {1, 2, {7, 8, 9, 10}, +1}, {1, 3, {2, 3, 5, 7}, +1}, {1, 4, {1, 4, 5, 8}, +1},
        {1, 5, {3, 4, 6, 10}, -1}, {1, 6, {1, 2, 6, 9}, +1}, {2, 3, {1, 4, 6, 7}, +1},
        {2, 4, {2, 3, 6, 8}, +1},  {2, 5, {1, 2, 5, 10}, -1}, {2, 6, {3, 4, 5, 9}, +1},
        {3, 4, {5, 6, 9, 10}, -1}, {3, 5, {1, 3, 8, 9}, -1}, {3, 6, {2, 4, 8, 10}, +1},
        {4, 5, {2, 4, 7, 9}, -1},  {4, 6, {1, 3, 7, 10}, +1}, {5, 6, {5, 6, 7, 8}, +1}};
    for (const auto& e : t)
      if (azygetic_quadruple(e.i, e.j) != e.quad)
        throw std::logic_error("D-table quadruple disagrees with the azygetic set for (" + std::to_string(e.i) +
                               "," + std::to_string(e.j) + ")");
    return t;
  }();
  return kTable;
}

const DTableEntry& d_entry(int i, int j) {
  for (const auto& e : d_table())
    if (e.i == i && e.j == j) return e;
  throw std::out_of_range("no D-table entry for (" + std::to_string(i) + "," + std::to_string(j) + ")");
}

std::pair<int, Monomial> d_value(int i, int j) {
  if (i == j) throw std::invalid_argument("D(i,i) is zero");
  if (i < j) return {d_entry(i, j).sign, d_entry(i, j).product()};
  return {-d_entry(j, i).sign, d_entry(j, i).product()};
}

Monomial complement_product(int i, int j) { return chi5_monomial() / d_entry(std::min(i, j), std::max(i, j)).product(); }

std::string to_string(RelationKind k) {
  switch (k) {
    case RelationKind::RelD: return "RelD";
    case RelationKind::ExtrA: return "ExtrA";
    case RelationKind::ExtrB: return "ExtrB";
  }
  return "?";
}

std::vector<RelationShape> rel_d_shapes() {
  std::vector<RelationShape> out;
  for (int i = 1; i <= 6; ++i)
    for (int j = i + 1; j <= 6; ++j)
      for (int k = j + 1; k <= 6; ++k) {
        auto [sjk, mjk] = d_value(j, k);
        auto [sik, mik] = d_value(i, k);
        auto [sij, mij] = d_value(i, j);
        const Monomial g = Monomial::gcd(Monomial::gcd(mjk, mik), mij);
        if (g.degree() != 1)
          throw std::logic_error("RelD(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) +
                                 "): coefficients do not share exactly one theta");
        out.push_back({RelationKind::RelD,
                       {i, j, k},
                       {{sjk, mjk / g, i - 1}, {-sik, mik / g, j - 1}, {sij, mij / g, k - 1}}});
      }
  return out;
}

std::vector<RelationShape> extr_a_shapes() {
  std::vector<RelationShape> out;
  for (int a = 1; a <= 6; ++a)
    for (int b = 1; b <= 6; ++b) {
      if (a == b) continue;
      const Monomial dab = d_value(a, b).second;
      RelationShape s{RelationKind::ExtrA, {a, b}, {}};
      for (int i = 1; i <= 6; ++i) {
        if (i == a || i == b) continue;
        auto [sia, mia] = d_value(i, a);
        const Monomial common = Monomial::gcd(mia, dab);
        if (common.degree() != 1)
          throw std::logic_error("ExtrA(" + std::to_string(a) + "," + std::to_string(b) + "): no unique common theta for i=" +
                                 std::to_string(i));
        s.parts.push_back({sia, common * common * mia, i - 1});
      }
      out.push_back(std::move(s));
    }
  return out;
}

std::vector<SForm> all_sforms() {
  std::vector<SForm> out;
  for (int n = 1; n <= 6; ++n)
    for (const auto& d : five_term_decompositions(n)) out.push_back({n, d});
  return out;
}

std::vector<Sextet> balanced_sextets() {
  std::vector<std::vector<SForm>> by_odd(6);
  for (const auto& f : all_sforms()) by_odd[f.odd - 1].push_back(f);
  std::vector<Sextet> out;
  Sextet cur;
  std::array<int, 11> count{};
  std::function<void(int)> rec = [&](int n) {
    if (n == 6) {
      out.push_back(cur);
      return;
    }
    for (const auto& f : by_odd[n]) {
      bool ok = true;
      for (int k : f.evens) ok = ok && count[k] < 3;
      if (!ok) continue;
      for (int k : f.evens) ++count[k];
      cur.forms[n] = f;
      rec(n + 1);
      for (int k : f.evens) --count[k];
    }
  };
  rec(0);
  return out;
}

std::optional<std::array<int, 6>> extr_b_rule(const Sextet& s, int cancelled_odd) {
  const auto& gone = s.forms[cancelled_odd - 1].evens;
  auto in = [](const std::array<int, 5>& set, int k) { return std::find(set.begin(), set.end(), k) != set.end(); };
  std::array<int, 6> m{};
  for (int i = 0; i < 6; ++i) {
    if (i == cancelled_odd - 1) continue;
    std::vector<int> q;
    for (int k : s.forms[i].evens)
      if (!in(gone, k)) q.push_back(k);
    if (q.size() != 3) return std::nullopt;
    int found = 0, leftover = 0;
    for (int x = 0; x < 3; ++x) {
      const int p = q[(x + 1) % 3], r = q[(x + 2) % 3];
      bool elsewhere = false;
      for (int j = 0; j < 6 && !elsewhere; ++j)
        if (j != i && j != cancelled_odd - 1) elsewhere = in(s.forms[j].evens, p) && in(s.forms[j].evens, r);
      if (!elsewhere) {
        ++found;
        leftover = q[x];
      }
    }
    if (found != 1) return std::nullopt;
    m[i] = leftover;
  }
  return m;
}

RelationShape extr_b_shape(const Sextet& s, int sextet_id, int cancelled_odd, const std::array<int, 6>& m) {
  RelationShape r{RelationKind::ExtrB, {sextet_id, cancelled_odd}, {}};
  for (int i = 0; i < 6; ++i) {
    if (i == cancelled_odd - 1) continue;
    const Monomial sq = Monomial::variable(m[i] - 1) * Monomial::variable(m[i] - 1);
    r.parts.push_back({1, sq * s.forms[i].mono(), s.forms[i].odd - 1});
  }
  return r;
}

std::size_t count_exact_covers(const std::vector<Sextet>& blocks) {
  const auto forms = all_sforms();
  auto id = [&](const SForm& f) {
    return static_cast<int>(std::find(forms.begin(), forms.end(), f) - forms.begin());
  };
  std::vector<std::vector<int>> members;
  for (const auto& b : blocks) {
    std::vector<int> ids;
    for (const auto& f : b.forms) ids.push_back(id(f));
    members.push_back(ids);
  }
  std::vector<bool> used(forms.size(), false);
  std::size_t count = 0;
  std::function<void()> rec = [&] {
    auto first = std::find(used.begin(), used.end(), false);
    if (first == used.end()) {
      ++count;
      return;
    }
    const int target = static_cast<int>(first - used.begin());
    for (const auto& ids : members) {
      if (std::find(ids.begin(), ids.end(), target) == ids.end()) continue;
      if (std::any_of(ids.begin(), ids.end(), [&](int x) { return used[x]; })) continue;
      for (int x : ids) used[x] = true;
      rec();
      for (int x : ids) used[x] = false;
    }
  };
  rec();
  return count;
}

std::vector<SignedTerm> extr_h_numerator_terms() {
  const auto t = [](int k) { return Monomial::variable(k - 1); };
  const auto p = [&](int k, int e) {
    Monomial m;
    for (int i = 0; i < e; ++i) m = m * t(k);
    return m;
  };
  return {{+1, t(4) * p(6, 4) * t(8), 0}, {+1, t(4) * t(8) * p(9, 4), 0}, {-1, t(1) * t(6) * t(9) * p(10, 3), 2}};
}

Monomial extr_h_denominator() { return theta_monomial({2, 5}); }

HilbertSeries main_theorem_series() {
  return HilbertSeries({0, 6, 36, 126, 316, 606, 252, -318, -60, 60}, 4).normalized();
}

std::vector<std::int64_t> main_theorem_coefficients() { return {6, 60, 330, 1300, 4060, 9952, 20000, 35168}; }

namespace {

std::string b_name(int i, int j) { return "B" + std::to_string(i) + std::to_string(j); }

}  // namespace

WieberPresentation wieber_plus_presentation() {
  WieberPresentation p;
  p.name = "M+";
  std::vector<std::pair<int, int>> gens;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      gens.push_back({i, j});
      p.generator_names.push_back(b_name(i, j));
    }
  p.shifts.assign(gens.size(), 2);
  auto slot = [&](int i, int j) {
    const int a = std::min(i, j), b = std::max(i, j);
    return std::pair<int, int>(static_cast<int>(std::find(gens.begin(), gens.end(), std::pair(a, b)) - gens.begin()),
                               i < j ? 1 : -1);
  };
  std::set<std::string> seen;
  // f_k B_ij - f_j B_ik - f_i B_kj over ordered triples, up to sign
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) {
        if (i == j || j == k || i == k) continue;
        std::vector<std::string> comps(gens.size(), "0");
        auto put = [&](int f, int a, int b, int sign) {
          auto [pos, s] = slot(a, b);
          s *= sign;
          comps[pos] = (s < 0 ? "-f" : "f") + std::to_string(f);
        };
        put(k, i, j, +1);
        put(j, i, k, -1);
        put(i, k, j, -1);
        // normalize so that the first nonzero entry is positive
        auto first = std::find_if(comps.begin(), comps.end(), [](const std::string& c) { return c != "0"; });
        if ((*first)[0] == '-')
          for (auto& c : comps)
            if (c != "0") c = c[0] == '-' ? c.substr(1) : "-" + c;
        std::string text = "{";
        for (std::size_t c = 0; c < comps.size(); ++c) text += (c ? "; " : "") + comps[c];
        text += "}";
        if (seen.insert(text).second) p.relations.push_back(text);
      }
  return p;
}

WieberPresentation wieber_minus_presentation() {
  WieberPresentation p;
  p.name = "M-";
  p.generator_names = {"C012", "C013", "C023", "C123"};
  p.shifts = {5, 5, 5, 5};
  // f3 C012 - f0 C123 + f1 C023 - f2 C013
  p.relations = {"{f3; -f2; f1; -f0}"};
  return p;
}

}  // namespace siegel
