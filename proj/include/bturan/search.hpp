#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bturan/canonical.hpp"
#include "bturan/detect.hpp"
#include "bturan/enumerate.hpp"
#include "bturan/families.hpp"
#include "bturan/graph6.hpp"
#include "bturan/invariants.hpp"

namespace bturan {

struct SearchOptions {
  int threads = 1;
  bool prune = true;  // upper-bound pruning of augmentation subtrees
  int cap = kDefaultEnumerationCap;
};

struct ExtremalReport {
  BroomSpec spec;
  int n = 0;
  int r = 0;
  Objective objective = Objective::DegreePowers;
  std::uint64_t optimum = 0;
  std::vector<Graph> optimizers{};  // canonical labeling, ascending canonical key
  std::uint64_t predicted_value = 0;
  FamilyId predicted_family;
  bool agrees = false;
  bool unique_and_matches = false;

  std::vector<std::string> optimizer_graph6() const {
    std::vector<std::string> out;
    for (const Graph& g : optimizers) out.push_back(graph6_encode(g));
    return out;
  }
};

/// Upper bound on the objective of any n-vertex graph that contains `g`
/// (on m <= n vertices) as an induced subgraph, which every descendant of
/// `g` in the augmentation tree does. A vertex of g gains at most n-m new
/// neighbours and no degree exceeds n-1; each of the n-m missing vertices
/// has degree at most n-1. Both objectives are nondecreasing in every
/// degree, so the sum of those per-vertex maxima is never exceeded.
inline std::uint64_t descendant_upper_bound(const Graph& g, int n, int r, Objective objective) {
  const int missing = n - g.order();
  std::uint64_t bound = checked::mul(static_cast<std::uint64_t>(missing), objective_term(objective, n - 1, r));
  for (int v = 0; v < g.order(); ++v) {
    bound = checked::add(bound, objective_term(objective, std::min(g.degree(v) + missing, n - 1), r));
  }
  return bound;
}

namespace detail {

struct MaximizingVisitor {
  int n;
  int r;
  Objective objective;
  bool prune;
  std::uint64_t best;  // seeded with a value some leaf is known to reach
  std::vector<Graph> optimizers;

  bool enter(const Graph& g) const { return !prune || descendant_upper_bound(g, n, r, objective) >= best; }

  void leaf(const Graph& g) {
    const std::uint64_t value = evaluate(objective, g, r);
    if (value > best) {
      best = value;
      optimizers.clear();
    }
    if (value == best) optimizers.push_back(g);
  }
};

}  // namespace detail

/// Exhaustive maximum of the objective over n-vertex B(ell,s)-free graphs,
/// with every maximizer up to isomorphism, compared against the predicted
/// extremal family.
inline ExtremalReport extremal_search(const BroomSpec& spec, int n, int r, Objective objective,
                                      const SearchOptions& opts = {}) {
  check_objective_power(objective, r);
  EnumerationOptions eopt{spec, false, opts.cap, opts.threads};
  check_enumeration_order(n, eopt);
  if (n < 2) throw InvalidParameter("search order must be >= 2");

  auto [family, predicted] = predicted_extremal(spec, n);
  ExtremalReport rep{.spec = spec, .n = n, .r = r, .objective = objective, .predicted_family = family};
  rep.predicted_value = closed_form_value(spec, n, r, objective);

  // The predicted graph is a candidate whenever it is broom-free, so its
  // value is a safe starting bound.
  const std::uint64_t seed = is_broom_free(predicted, spec) ? rep.predicted_value : 0;
  auto make = [&] { return detail::MaximizingVisitor{n, r, objective, opts.prune, seed, {}}; };

  std::vector<detail::MaximizingVisitor> parts;
  if (opts.threads == 1) {
    parts.push_back(make());
    walk_augmentation_tree(n, eopt, parts.back());
  } else {
    parts = walk_augmentation_tree_parallel<detail::MaximizingVisitor>(n, eopt, make);
  }

  bool found = false;
  for (const auto& p : parts) {
    if (p.optimizers.empty()) continue;
    if (!found || p.best > rep.optimum) {
      rep.optimum = p.best;
      rep.optimizers.clear();
      found = true;
    }
    if (p.best == rep.optimum) rep.optimizers.insert(rep.optimizers.end(), p.optimizers.begin(), p.optimizers.end());
  }
  std::sort(rep.optimizers.begin(), rep.optimizers.end(),
            [](const Graph& a, const Graph& b) { return pack_labeled(a) < pack_labeled(b); });

  rep.agrees = found && rep.optimum == rep.predicted_value;
  rep.unique_and_matches =
      rep.optimizers.size() == 1 && pack_labeled(rep.optimizers.front()) == canonical(predicted, kHardEnumerationCap);
  return rep;
}

struct SweepResult {
  BroomSpec spec;
  int r = 0;
  Objective objective = Objective::DegreePowers;
  bool require_unique = true;
  std::vector<ExtremalReport> reports{};
  // Least n0 in range with agreement (and uniqueness when required) for
  // every n0 <= n <= n_max; empty if none.
  std::optional<int> threshold{};
};

inline bool report_holds(const ExtremalReport& rep, bool require_unique) {
  return rep.agrees && (!require_unique || rep.unique_and_matches);
}

inline SweepResult agreement_sweep(const BroomSpec& spec, int r, Objective objective, int n_min, int n_max,
                                   bool require_unique = true, const SearchOptions& opts = {}) {
  if (n_min > n_max) {
    throw InvalidParameter("empty sweep range " + std::to_string(n_min) + ".." + std::to_string(n_max));
  }
  SweepResult out{.spec = spec, .r = r, .objective = objective, .require_unique = require_unique};
  for (int n = n_min; n <= n_max; ++n) out.reports.push_back(extremal_search(spec, n, r, objective, opts));
  for (auto it = out.reports.rbegin(); it != out.reports.rend() && report_holds(*it, require_unique); ++it) {
    out.threshold = it->n;
  }
  return out;
}

/// Uniqueness is asserted for degree powers in every case, and for star
/// counts only when the predicted family is H or H*.
inline bool uniqueness_claimed(const BroomSpec& spec, Objective objective) {
  return objective == Objective::DegreePowers || predicted_tag(spec) != FamilyTag::F;
}

struct TheoremVerdict {
  BroomSpec spec;
  int r = 0;
  SweepResult degree_powers;
  SweepResult stars;

  // Agreement (and claimed uniqueness) holds at the top of the range for
  // both objectives.
  bool holds_at_top() const {
    auto top = [](const SweepResult& s) {
      return !s.reports.empty() && report_holds(s.reports.back(), s.require_unique);
    };
    return top(degree_powers) && top(stars);
  }
};

inline TheoremVerdict verify_theorem(const BroomSpec& spec, int r, int n_min, int n_max, const SearchOptions& opts = {}) {
  if (r < 2) throw InvalidParameter("verification needs r >= 2, got " + std::to_string(r));
  return TheoremVerdict{
      spec, r,
      agreement_sweep(spec, r, Objective::DegreePowers, n_min, n_max, uniqueness_claimed(spec, Objective::DegreePowers),
                      opts),
      agreement_sweep(spec, r, Objective::Stars, n_min, n_max, uniqueness_claimed(spec, Objective::Stars), opts)};
}

}  // namespace bturan
