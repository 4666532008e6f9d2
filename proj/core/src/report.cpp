#include <sstream>

#include "json.hpp"
#include "polyrep/analysis.hpp"

namespace polyrep {

namespace {

using nlohmann::json;

const char* kind_name(ConditionKind kind) {
  switch (kind) {
    case ConditionKind::SumValue: return "sum-value";
    case ConditionKind::EpsilonDerivative: return "epsilon-derivative";
    case ConditionKind::OnePointDerivative: return "one-point-derivative";
  }
  return "?";
}

json witness_json(const ConditionWitness& w) {
  json out;
  out["kind"] = kind_name(w.kind);
  out["j"] = w.j.entries();
  if (w.coset) out["coset"] = w.coset->entries();
  out["lhs"] = w.lhs;
  out["rhs"] = w.rhs;
  return out;
}

}  // namespace

std::string render_report_text(const AnalysisReport& r) {
  std::ostringstream out;
  out << "subdivision mask analysis\n";
  out << "  dimension:           " << r.dimension << "\n";
  out << "  dilation:            " << r.dilation << "\n";
  out << "  nonzero terms:       " << r.term_count << "\n";
  out << "  interpolatory:       " << (r.interpolatory ? "yes" : "no") << "\n";
  out << "  sum rules order 1:   " << (r.sum_rules_order_1 ? "yes" : "no") << "\n";

  out << "  generation degree:   ";
  if (r.generation_degree)
    out << *r.generation_degree << (r.generation_capped ? " (search cap reached)" : "");
  else
    out << "none (condition Z_1 fails)";
  out << "\n";
  if (r.generation_witness)
    out << "    blocking condition: " << r.generation_witness->describe() << "\n";

  out << "  tau:                 ";
  if (r.tau)
    out << rational_vector_to_string(*r.tau);
  else
    out << "none (requires sum rules order 1)";
  out << "\n";

  out << "  reproduction degree: ";
  if (r.reproduction_degree)
    out << *r.reproduction_degree << (r.reproduction_capped ? " (search cap reached)" : "");
  else
    out << "none";
  out << "\n";
  if (r.failure_witness)
    out << "    blocking condition: " << r.failure_witness->describe() << "\n";

  out << "  search cap:          " << r.cap << "\n";
  out << "  note: " << r.note << "\n";
  return out.str();
}

std::string render_report_json(const AnalysisReport& r) {
  json out;
  out["dimension"] = r.dimension;
  out["dilation"] = r.dilation;
  out["term_count"] = r.term_count;
  out["sum_rules_order_1"] = r.sum_rules_order_1;
  out["interpolatory"] = r.interpolatory;
  out["cap"] = r.cap;
  if (r.generation_degree) out["generation_degree"] = *r.generation_degree;
  else out["generation_degree"] = nullptr;
  out["generation_capped"] = r.generation_capped;
  if (r.generation_witness) out["generation_witness"] = witness_json(*r.generation_witness);
  if (r.tau) {
    json tau = json::array();
    for (const Rational& t : *r.tau) tau.push_back(rational_to_string(t));
    out["tau"] = std::move(tau);
  } else {
    out["tau"] = nullptr;
  }
  if (r.reproduction_degree) out["reproduction_degree"] = *r.reproduction_degree;
  else out["reproduction_degree"] = nullptr;
  out["reproduction_capped"] = r.reproduction_capped;
  if (r.failure_witness) out["failure_witness"] = witness_json(*r.failure_witness);
  out["note"] = r.note;
  return out.dump(2) + "\n";
}

}  // namespace polyrep
