#include <doctest.h>

#include "siegel/basis_cache.hpp"
#include "siegel/groebner.hpp"
#include "siegel/textio.hpp"

#include <filesystem>

using namespace siegel;

namespace {

template <class F>
std::vector<ModuleElement<F>> ideal(std::initializer_list<const char*> gens, int nvars) {
  std::vector<ModuleElement<F>> out;
  for (const char* g : gens) out.push_back(ModuleElement<F>::unit(nvars, {0}, 0, parse_poly<F>(g, nvars)));
  return out;
}

template <class F>
ModuleElement<F> elem(const char* text, int nvars = 3) {
  return ModuleElement<F>::unit(nvars, {0}, 0, parse_poly<F>(text, nvars));
}

}  // namespace

TEST_CASE_TEMPLATE("twisted cubic style ideal", F, Rational, GF1, GF2) {
  // reduced basis computed independently (sympy, grevlex x > y > z)
  const auto gb = buchberger(ideal<F>({"t1^2 - t2*t3", "t1*t2 - t3^2"}, 3), 3, {0});
  CHECK(gb.size() == 3);
  CHECK(contains(gb, elem<F>("t2^2*t3 - t1*t3^2")));
  const auto gb2 = buchberger(ideal<F>({"t1^2 - t2*t3", "t1*t2 - t3^2", "t2^3 - t1*t3^2"}, 3), 3, {0});
  CHECK(gb2.size() == 6);
  for (const char* g : {"t1*t3^3 - t3^4", "t2*t3^3 - t3^4", "t2^3 - t1*t3^2", "t2^2*t3 - t1*t3^2"})
    CHECK(contains(gb2, elem<F>(g)));
  CHECK_FALSE(contains(gb2, elem<F>("t3^3")));
}

TEST_CASE("normal form is canonical") {
  const auto gb = buchberger(ideal<Rational>({"t1^2 - t2*t3", "t1*t2 - t3^2"}, 3), 3, {0});
  const auto a = normal_form(elem<Rational>("t1^3"), gb);
  const auto b = normal_form(elem<Rational>("t1*t2*t3"), gb);
  CHECK(a == b);
}

TEST_CASE("quotient, intersection, syzygies") {
  const std::vector<int> sh{0};
  // (x y) : x = (y)
  auto q = module_quotient(ideal<Rational>({"t1*t2"}, 2), parse_poly<Rational>("t1", 2), 2, sh);
  auto gq = buchberger(q, 2, sh);
  CHECK(gq.size() == 1);
  CHECK(to_string(gq.elements()[0]) == "{t2}");
  // (x) cap (y) = (x y)
  auto in = intersect(ideal<Rational>({"t1"}, 2), ideal<Rational>({"t2"}, 2), 2, sh);
  auto gi = buchberger(in, 2, sh);
  REQUIRE(gi.size() == 1);
  CHECK(to_string(gi.elements()[0]) == "{t1*t2}");
  // syzygies of (x, y): generated by (y, -x)
  std::vector<ModuleElement<Rational>> targets = ideal<Rational>({"t1", "t2"}, 2);
  auto syz = buchberger(kernel_of_presentation_map(targets, {}, 2, sh, {1, 1}), 2, {1, 1});
  REQUIRE(syz.size() == 1);
  const auto s = syz.elements()[0];
  CHECK((s[0] * parse_poly<Rational>("t1", 2) + s[1] * parse_poly<Rational>("t2", 2)).is_zero());
}

TEST_CASE("variable-by-variable quotient agrees with the general one") {
  const std::vector<int> sh{1, 2};
  std::vector<ModuleElement<GF1>> K = {parse_element<GF1>("{t1*t2^2; t3^2}", 3, sh),
                                       parse_element<GF1>("{t2*t3^2; t1*t2 - t3^2}", 3, sh),
                                       parse_element<GF1>("{t1^3 - t3^3; 0}", 3, sh)};
  const Monomial m = Monomial::variable(0) * Monomial::variable(1) * Monomial::variable(2);
  const auto a = buchberger(module_quotient_monomial(K, m, 3, sh), 3, sh);
  const auto b = buchberger(module_quotient(K, Poly<GF1>::monomial(3, m), 3, sh), 3, sh);
  CHECK(a == b);
}

TEST_CASE("intersection of several modules is order independent") {
  const std::vector<int> sh{0};
  std::vector<std::vector<ModuleElement<Rational>>> mods = {
      ideal<Rational>({"t1", "t2^2"}, 3), ideal<Rational>({"t2", "t3^2"}, 3), ideal<Rational>({"t1*t3", "t2*t3"}, 3)};
  const auto a = buchberger(intersect_all(mods, 3, sh), 3, sh);
  std::reverse(mods.begin(), mods.end());
  const auto b = buchberger(intersect_all(mods, 3, sh), 3, sh);
  CHECK(a == b);
  CHECK(contains(a, elem<Rational>("t1*t2*t3")));
  CHECK_FALSE(contains(a, elem<Rational>("t1*t3")));
}

TEST_CASE("module bases under both extensions") {
  const std::vector<int> sh{0, 1};
  std::vector<ModuleElement<Rational>> gens = {parse_element<Rational>("{t1^2; t2}", 2, sh),
                                               parse_element<Rational>("{t1*t2; t1}", 2, sh)};
  const auto top = buchberger(gens, 2, sh);
  const auto pot = buchberger(gens, 2, sh, {ModuleExtension::PositionOverTerm});
  for (const auto& v : pot.elements()) CHECK(contains(top, v));
  for (const auto& v : top.elements()) CHECK(contains(pot, v));
}

TEST_CASE("basis cache round trip") {
  const auto dir = (std::filesystem::temp_directory_path() / "siegel-cache-test").string();
  std::filesystem::remove_all(dir);
  const auto gens = ideal<GF1>({"t1^2 - t2*t3", "2*t1*t2 - t3^2"}, 3);
  const auto cold = cached_buchberger(gens, 3, {0}, MonomialOrder{}, dir);
  const auto warm = cached_buchberger(gens, 3, {0}, MonomialOrder{}, dir);
  CHECK(cold == warm);
  CHECK(std::distance(std::filesystem::directory_iterator(dir), {}) == 1);
  // a different field never reads the same entry
  CHECK_FALSE(load_cached<GF2>(dir, cache_key(gens, 3, {0}, MonomialOrder{}), 3, {0}, MonomialOrder{}));
  std::filesystem::remove_all(dir);
}
