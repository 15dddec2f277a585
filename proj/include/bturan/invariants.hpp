#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "bturan/errors.hpp"
#include "bturan/graph.hpp"

namespace bturan {

namespace checked {

inline std::uint64_t add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw Overflow("sum exceeds 64 bits");
  return out;
}

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw Overflow("product exceeds 64 bits");
  return out;
}

inline std::uint64_t pow(std::uint64_t base, int exp) {
  std::uint64_t out = 1;
  for (int i = 0; i < exp; ++i) out = mul(out, base);
  return out;
}

// C(n, k), zero when k > n.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 c = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    c = c * (n - i) / (i + 1);
    if (c > UINT64_MAX) throw Overflow("binomial coefficient exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(c);
}

}  // namespace checked

inline std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> d(g.order());
  for (int v = 0; v < g.order(); ++v) d[v] = g.degree(v);
  std::sort(d.begin(), d.end(), std::greater<>());
  return d;
}

/// Sum of degree^r over all vertices. Throws Overflow rather than wrapping.
inline std::uint64_t degree_power_sum(const Graph& g, int r) {
  if (r < 1) throw InvalidParameter("degree power r must be >= 1, got " + std::to_string(r));
  std::uint64_t sum = 0;
  for (int v = 0; v < g.order(); ++v) sum = checked::add(sum, checked::pow(g.degree(v), r));
  return sum;
}

/// Number of copies of the star with r leaves: sum of C(deg v, r).
inline std::uint64_t count_stars(const Graph& g, int r) {
  if (r < 2) throw InvalidParameter("star count needs r >= 2, got " + std::to_string(r));
  std::uint64_t sum = 0;
  for (int v = 0; v < g.order(); ++v) sum = checked::add(sum, checked::binomial(g.degree(v), r));
  return sum;
}

enum class Objective { DegreePowers, Stars };

inline const char* objective_name(Objective o) { return o == Objective::DegreePowers ? "er" : "stars"; }

inline Objective parse_objective(const std::string& s) {
  if (s == "er") return Objective::DegreePowers;
  if (s == "stars") return Objective::Stars;
  throw InvalidParameter("unknown objective '" + s + "' (expected er or stars)");
}

/// Contribution of one vertex of degree d to the objective.
inline std::uint64_t objective_term(Objective o, int d, int r) {
  return o == Objective::DegreePowers ? checked::pow(d, r) : checked::binomial(d, r);
}

inline void check_objective_power(Objective o, int r) {
  if (o == Objective::Stars && r < 2) throw InvalidParameter("star count needs r >= 2, got " + std::to_string(r));
  if (r < 1) throw InvalidParameter("degree power r must be >= 1, got " + std::to_string(r));
}

inline std::uint64_t evaluate(Objective o, const Graph& g, int r) {
  return o == Objective::DegreePowers ? degree_power_sum(g, r) : count_stars(g, r);
}

}  // namespace bturan
