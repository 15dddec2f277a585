#pragma once

#include <ostream>
#include <sstream>
#include <string>

#include "json.hpp"

#include "bturan/detect.hpp"
#include "bturan/graph6.hpp"
#include "bturan/hypergraph.hpp"
#include "bturan/search.hpp"

// JSON / CSV / text renderings of the search, verification and diagnostic
// results. Schemas live in docs/schemas/. Key order is fixed so output is
// byte-stable.
namespace bturan::report {

using Json = nlohmann::ordered_json;

inline Json spec_json(const BroomSpec& spec) { return Json{{"ell", spec.ell()}, {"s", spec.s()}}; }

inline Json to_json(const ExtremalReport& rep) {
  return Json{{"spec", spec_json(rep.spec)},
              {"n", rep.n},
              {"r", rep.r},
              {"objective", objective_name(rep.objective)},
              {"optimum", rep.optimum},
              {"predicted_value", rep.predicted_value},
              {"predicted_family", rep.predicted_family.name()},
              {"agrees", rep.agrees},
              {"unique_and_matches", rep.unique_and_matches},
              {"optimizers", rep.optimizer_graph6()}};
}

inline Json to_json(const SweepResult& sweep) {
  Json reports = Json::array();
  for (const auto& rep : sweep.reports) reports.push_back(to_json(rep));
  return Json{{"objective", objective_name(sweep.objective)},
              {"uniqueness_claimed", sweep.require_unique},
              {"threshold", sweep.threshold ? Json(*sweep.threshold) : Json(nullptr)},
              {"reports", reports}};
}

inline Json to_json(const TheoremVerdict& v, int n_min, int n_max) {
  return Json{{"spec", spec_json(v.spec)},
              {"r", v.r},
              {"n_min", n_min},
              {"n_max", n_max},
              {"sweeps", Json::array({to_json(v.degree_powers), to_json(v.stars)})},
              {"holds_at_top", v.holds_at_top()}};
}

inline Json to_json(const NbrhoodClassification& cls, bool berge_path) {
  return Json{{"r", cls.r},
              {"ell", cls.ell},
              {"s", cls.s},
              {"k", cls.k},
              {"sizes", Json{{"H1", cls.h1.size()}, {"H2", cls.h2.size()}, {"H3", cls.h3.size()}, {"H4", cls.h4.size()}}},
              {"berge_path_k_plus_1", berge_path}};
}

inline Json detect_json(const std::string& graph6, const std::optional<BroomWitness>& w) {
  Json out{{"graph6", graph6}, {"contains", w.has_value()}};
  out["witness"] = w ? Json{{"path", w->path}, {"leaves", w->leaves}} : Json(nullptr);
  return out;
}

inline const char* yes_no(bool b) { return b ? "true" : "false"; }

inline void write_text(std::ostream& os, const ExtremalReport& rep) {
  os << "B(" << rep.spec.ell() << "," << rep.spec.s() << ") n=" << rep.n << " r=" << rep.r
     << " objective=" << objective_name(rep.objective) << "\n"
     << "  optimum          " << rep.optimum << "\n"
     << "  predicted        " << rep.predicted_value << " (" << rep.predicted_family.name() << ")\n"
     << "  agrees           " << yes_no(rep.agrees) << "\n"
     << "  unique_and_match " << yes_no(rep.unique_and_matches) << "\n"
     << "  optimizers       " << rep.optimizers.size() << "\n";
  for (const auto& g6 : rep.optimizer_graph6()) os << "    " << g6 << "\n";
}

inline void write_csv_header(std::ostream& os) {
  os << "ell,s,r,n,predicted_family";
  for (const char* obj : {"er", "stars"}) {
    os << "," << obj << "_optimum," << obj << "_predicted," << obj << "_agrees," << obj << "_unique_and_matches,"
       << obj << "_num_optimizers";
  }
  os << "\n";
}

// One row per n, covering both objectives.
inline void write_csv(std::ostream& os, const TheoremVerdict& v) {
  write_csv_header(os);
  for (std::size_t i = 0; i < v.degree_powers.reports.size(); ++i) {
    const auto& er = v.degree_powers.reports[i];
    const auto& st = v.stars.reports[i];
    os << v.spec.ell() << "," << v.spec.s() << "," << v.r << "," << er.n << "," << er.predicted_family.name();
    for (const auto* rep : {&er, &st}) {
      os << "," << rep->optimum << "," << rep->predicted_value << "," << yes_no(rep->agrees) << ","
         << yes_no(rep->unique_and_matches) << "," << rep->optimizers.size();
    }
    os << "\n";
  }
}

inline void write_text(std::ostream& os, const SweepResult& sweep) {
  os << "objective " << objective_name(sweep.objective) << " (uniqueness "
     << (sweep.require_unique ? "checked" : "not claimed") << ")\n";
  for (const auto& rep : sweep.reports) {
    os << "  n=" << rep.n << " optimum=" << rep.optimum << " predicted=" << rep.predicted_value << " "
       << rep.predicted_family.name() << " agrees=" << yes_no(rep.agrees)
       << " unique=" << yes_no(rep.unique_and_matches) << " optimizers=" << rep.optimizers.size() << "\n";
  }
  os << "  threshold " << (sweep.threshold ? std::to_string(*sweep.threshold) : std::string("none in range")) << "\n";
}

inline void write_text(std::ostream& os, const TheoremVerdict& v) {
  os << "B(" << v.spec.ell() << "," << v.spec.s() << ") r=" << v.r << "\n";
  write_text(os, v.degree_powers);
  write_text(os, v.stars);
  os << "holds_at_top " << yes_no(v.holds_at_top()) << "\n";
}

}  // namespace bturan::report
