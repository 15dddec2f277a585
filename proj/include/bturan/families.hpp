#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "bturan/errors.hpp"
#include "bturan/graph.hpp"
#include "bturan/invariants.hpp"

namespace bturan {

/// The forbidden broom B(ell, s): a path on `ell` vertices with `s` extra
/// leaves on a penultimate vertex (the centre).
class BroomSpec {
 public:
  BroomSpec(int ell, int s) : ell_(ell), s_(s) {
    if (ell < 4) throw InvalidParameter("broom path length must be >= 4, got " + std::to_string(ell));
    if (s < 0) throw InvalidParameter("broom leaf count must be >= 0, got " + std::to_string(s));
    if (ell + s > kMaxVertices) throw InvalidParameter("broom has more than 64 vertices");
  }

  int ell() const { return ell_; }
  int s() const { return s_; }
  /// Clique size of the predicted extremal family, floor((ell - 2) / 2).
  int k() const { return (ell_ - 2) / 2; }
  int order() const { return ell_ + s_; }

  friend bool operator==(const BroomSpec&, const BroomSpec&) = default;

 private:
  int ell_;
  int s_;
};

enum class FamilyTag { H, Hstar, F, Star, Path, Broom };

struct FamilyId {
  FamilyTag tag;
  int n = 0;
  int k = 0;  // H, Hstar
  int ell = 0;  // Broom
  int s = 0;  // Broom

  std::string name() const {
    switch (tag) {
      case FamilyTag::H: return "H(" + std::to_string(k) + "," + std::to_string(n) + ")";
      case FamilyTag::Hstar: return "H*(" + std::to_string(k) + "," + std::to_string(n) + ")";
      case FamilyTag::F: return "F(" + std::to_string(n) + ")";
      case FamilyTag::Star: return "S(" + std::to_string(n) + ")";
      case FamilyTag::Path: return "P(" + std::to_string(n) + ")";
      case FamilyTag::Broom: return "B(" + std::to_string(ell) + "," + std::to_string(s) + ")";
    }
    return "?";
  }

  friend bool operator==(const FamilyId&, const FamilyId&) = default;
};

/// Path 0..ell-1 in order; centre ell-2; extra leaves ell..ell+s-1.
inline Graph make_broom(const BroomSpec& spec) {
  Graph g = make_path(spec.ell());
  Graph out(spec.order());
  for (auto [u, v] : g.edges()) out = out.with_edge(u, v);
  for (int leaf = spec.ell(); leaf < spec.order(); ++leaf) out = out.with_edge(spec.ell() - 2, leaf);
  return out;
}

/// H(k, n): vertices 0..k-1 form a clique joined to everything; the rest are
/// independent.
inline Graph make_H(int k, int n) {
  if (n > kMaxVertices || k < 1 || k > n - 1) {
    throw InvalidParameter("H(k,n) needs 1 <= k <= n-1 and n <= 64, got k=" + std::to_string(k) +
                           " n=" + std::to_string(n));
  }
  Graph g(n);
  for (int hi = 0; hi < k; ++hi) {
    for (int v = hi + 1; v < n; ++v) g = g.with_edge(hi, v);
  }
  return g;
}

/// H(k, n) plus the edge {k, k+1} inside the independent part.
inline Graph make_Hstar(int k, int n) {
  if (n > kMaxVertices || k < 1 || k > n - 3) {
    throw InvalidParameter("H*(k,n) needs 1 <= k <= n-3 and n <= 64, got k=" + std::to_string(k) +
                           " n=" + std::to_string(n));
  }
  return make_H(k, n).with_edge(k, k + 1);
}

/// Star with centre 0 plus the matching {1,2}, {3,4}, ...; with an odd number
/// of leaves the last one stays pendant.
inline Graph make_F(int n) {
  if (n < 2 || n > kMaxVertices) throw InvalidParameter("F_n needs 2 <= n <= 64, got " + std::to_string(n));
  Graph g = make_star(n);
  for (int leaf = 1; leaf + 1 < n; leaf += 2) g = g.with_edge(leaf, leaf + 1);
  return g;
}

inline Graph make_family(const FamilyId& id) {
  switch (id.tag) {
    case FamilyTag::H: return make_H(id.k, id.n);
    case FamilyTag::Hstar: return make_Hstar(id.k, id.n);
    case FamilyTag::F: return make_F(id.n);
    case FamilyTag::Star: return make_star(id.n);
    case FamilyTag::Path:
      if (id.n < 1) throw InvalidParameter("path needs at least 1 vertex");
      return make_path(id.n);
    case FamilyTag::Broom: return make_broom(BroomSpec(id.ell, id.s));
  }
  throw InvalidParameter("unknown family");
}

/// The family predicted to be extremal for B(ell, s), independent of n.
inline FamilyTag predicted_tag(const BroomSpec& spec) {
  if (spec.ell() % 2 == 0) return FamilyTag::H;
  if (spec.ell() == 5 && spec.s() > 0) return FamilyTag::F;
  return FamilyTag::Hstar;
}

/// Smallest n for which the predicted family exists.
inline int predicted_min_order(const BroomSpec& spec) {
  switch (predicted_tag(spec)) {
    case FamilyTag::H: return spec.k() + 1;
    case FamilyTag::Hstar: return spec.k() + 3;
    default: return 2;
  }
}

inline FamilyId predicted_family(const BroomSpec& spec, int n) {
  if (n < predicted_min_order(spec) || n > kMaxVertices) {
    throw InvalidParameter("predicted family for B(" + std::to_string(spec.ell()) + "," + std::to_string(spec.s()) +
                           ") needs n in [" + std::to_string(predicted_min_order(spec)) + ", 64], got " +
                           std::to_string(n));
  }
  const FamilyTag tag = predicted_tag(spec);
  return FamilyId{tag, n, tag == FamilyTag::F ? 0 : spec.k()};
}

inline std::pair<FamilyId, Graph> predicted_extremal(const BroomSpec& spec, int n) {
  FamilyId id = predicted_family(spec, n);
  return {id, make_family(id)};
}

/// Objective value of the predicted family from its degree profile, without
/// building the graph.
inline std::uint64_t closed_form_value(const BroomSpec& spec, int n, int r, Objective objective) {
  check_objective_power(objective, r);
  const FamilyId id = predicted_family(spec, n);
  const auto f = [&](int d) { return objective_term(objective, d, r); };
  using checked::add;
  using checked::mul;
  const std::uint64_t k = static_cast<std::uint64_t>(id.k);
  const std::uint64_t N = static_cast<std::uint64_t>(n);
  switch (id.tag) {
    case FamilyTag::H:
      return add(mul(k, f(n - 1)), mul(N - k, f(id.k)));
    case FamilyTag::Hstar:
      return add(add(mul(k, f(n - 1)), mul(N - k - 2, f(id.k))), mul(2, f(id.k + 1)));
    case FamilyTag::F: {
      const std::uint64_t matched = 2 * static_cast<std::uint64_t>((n - 1) / 2);
      return add(add(f(n - 1), mul(matched, f(2))), mul(static_cast<std::uint64_t>((n - 1) % 2), f(1)));
    }
    default:
      break;
  }
  throw InvalidParameter("no closed form for this family");
}

}  // namespace bturan
