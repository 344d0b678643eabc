#pragma once

// On-disk cache of reduced bases keyed by a hash of the generators, the module
// order and the coefficient field.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include "siegel/groebner.hpp"
#include "siegel/textio.hpp"

namespace siegel {

inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

template <class F>
std::string cache_key(const std::vector<ModuleElement<F>>& gens, int nvars, const std::vector<int>& shifts,
                      const MonomialOrder& order, const std::string& extra = "") {
  std::ostringstream os;
  os << F::name() << '|' << order.name() << '|' << nvars << '|';
  for (int s : shifts) os << s << ',';
  os << '|' << extra << '|';
  for (const auto& g : gens) os << to_string(g) << '\n';
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(os.str())));
  return buf;
}

namespace detail {
inline std::filesystem::path cache_file(const std::string& dir, const std::string& key) {
  return std::filesystem::path(dir) / (key + ".basis");
}
template <class F>
std::string cache_header(int nvars, const std::vector<int>& shifts, const MonomialOrder& order) {
  std::string h = "basis 1 " + F::name() + " " + order.name() + " " + std::to_string(nvars);
  for (int s : shifts) h += " " + std::to_string(s);
  return h;
}
}  // namespace detail

// A stored basis, or nullopt when there is no cache, no entry, or the entry does
// not match the requested module.
template <class F>
std::optional<GroebnerBasis<F>> load_cached(const std::optional<std::string>& dir, const std::string& key,
                                            int nvars, const std::vector<int>& shifts, const MonomialOrder& order) {
  if (!dir) return std::nullopt;
  std::ifstream in(detail::cache_file(*dir, key));
  if (!in) return std::nullopt;
  std::string line;
  if (!std::getline(in, line) || line != detail::cache_header<F>(nvars, shifts, order)) return std::nullopt;
  const TermOrder ord(shifts, order);
  std::vector<SVec<F>> elems;
  try {
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      elems.push_back(to_svec(parse_element<F>(line, nvars, shifts, VarNames::theta()), ord));
    }
  } catch (const std::exception&) {
    return std::nullopt;
  }
  return GroebnerBasis<F>(nvars, shifts, order, std::move(elems));
}

template <class F>
void store_cached(const std::optional<std::string>& dir, const std::string& key, const GroebnerBasis<F>& gb) {
  if (!dir) return;
  std::filesystem::create_directories(*dir);
  const auto path = detail::cache_file(*dir, key);
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    out << detail::cache_header<F>(gb.nvars(), gb.shifts(), gb.order()) << '\n';
    for (const auto& e : gb.elements()) out << to_string(e) << '\n';
  }
  std::filesystem::rename(tmp, path);
}

template <class F>
GroebnerBasis<F> cached_buchberger(const std::vector<ModuleElement<F>>& gens, int nvars,
                                   const std::vector<int>& shifts, MonomialOrder order,
                                   const std::optional<std::string>& dir) {
  const auto key = cache_key(gens, nvars, shifts, order);
  if (auto hit = load_cached<F>(dir, key, nvars, shifts, order)) return *hit;
  auto gb = buchberger(gens, nvars, shifts, order);
  store_cached(dir, key, gb);
  return gb;
}

}  // namespace siegel
