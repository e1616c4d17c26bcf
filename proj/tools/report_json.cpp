#include "report_json.hpp"

#include <cmath>

namespace ineq::cli {
namespace {

ordered_json axiom(const AxiomResult& r) {
  ordered_json j;
  j["pass"] = r.pass;
  j["worst_error"] = r.worst_error;
  if (r.witness) {
    j["witness"] = {{"x", r.witness->x},
                    {"y", r.witness->y},
                    {"lambda", r.witness->lambda},
                    {"observed", r.witness->observed},
                    {"expected", r.witness->expected}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

// JSON has no infinities; extended orders print as strings.
ordered_json real_or_string(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

}  // namespace

ordered_json to_json(const ChainReport& r) {
  return {{"left", r.left},
          {"middle", r.middle},
          {"right", r.right},
          {"ordered", r.ordered},
          {"reversed", r.reversed},
          {"slack_left", r.slack_left},
          {"slack_right", r.slack_right},
          {"tolerance", r.tolerance}};
}

ordered_json to_json(const AxiomReport& r) {
  return {{"unbiasedness", axiom(r.unbiasedness)},
          {"homogeneity", axiom(r.homogeneity)},
          {"monotonicity", axiom(r.monotonicity)},
          {"symmetry", axiom(r.symmetry)},
          {"intermediacy", axiom(r.intermediacy)},
          {"samples_used", r.samples_used},
          {"seed", r.seed},
          {"core_pass", r.core_pass()}};
}

ordered_json to_json(const HFunctionCheck& r) {
  ordered_json violations = ordered_json::array();
  for (const auto& v : r.ratio_violations) {
    violations.push_back({{"t1", v.t1},
                          {"t2", v.t2},
                          {"ratio", v.ratio},
                          {"lower_bound", v.lower_bound},
                          {"upper_bound", v.upper_bound}});
  }
  return {{"h0_value", r.h0_value},
          {"h0_ok", r.h0_ok},
          {"evenness_violations", r.evenness_violations},
          {"ratio_violations", violations},
          {"grid", r.grid},
          {"ok", r.ok()}};
}

ordered_json to_json(const YoungComparison& r) {
  ordered_json j = {{"x", r.x},
                    {"y", r.y},
                    {"p", r.p},
                    {"q", r.q},
                    {"product", r.product},
                    {"rhs_standard", r.rhs_standard},
                    {"rhs_swapped", r.rhs_swapped},
                    {"case", to_string(r.case_id)},
                    {"winner", to_string(r.winner)}};
  j["y_critical"] = r.y_critical ? ordered_json(*r.y_critical) : ordered_json(nullptr);
  return j;
}

ordered_json to_json(const BoundsReport& r) {
  return {{"x", r.x},   {"L0", r.L0}, {"L1", r.L1}, {"L2", r.L2},
          {"K", r.K},   {"G2", r.G2}, {"G1", r.G1}, {"G0", r.G0},
          {"chain_ok", r.chain_ok},   {"max_violation", real_or_string(r.max_violation)}};
}

ordered_json to_json(const UncertaintyReport& r) {
  return {{"n", r.n},
          {"A", r.A},
          {"B", r.B},
          {"product", r.product},
          {"holds", r.holds},
          {"equality", r.equality}};
}

ordered_json to_json(const OrderVerdict& v) {
  ordered_json witnesses = ordered_json::array();
  for (const auto& w : v.witnesses) {
    witnesses.push_back({{"f", w.f},
                         {"g", w.g},
                         {"a", w.a},
                         {"b", w.b},
                         {"middle_a", w.middle_a},
                         {"middle_b", w.middle_b}});
  }
  ordered_json j = {{"relation", to_string(v.relation)},
                    {"kind", to_string(v.kind)},
                    {"trials", v.trials},
                    {"seed", v.seed},
                    {"a_below", v.a_below},
                    {"b_below", v.b_below},
                    {"ties", v.ties},
                    {"witnesses", witnesses}};
  switch (v.relation) {
    case Relation::APrecB:
    case Relation::BPrecA:
      j["note"] = "consistent with the order over " + std::to_string(v.trials) +
                  " sampled trials; not a proof";
      break;
    case Relation::Incomparable:
      j["note"] = "certificate: two witnesses with opposite strict orderings";
      break;
    case Relation::Undetermined: j["note"] = "all sampled middles tied"; break;
  }
  return j;
}

ordered_json to_json(const IterationResult& r) {
  return {{"value", r.value}, {"iterations", r.iterations}, {"final_gap", r.final_gap}};
}

}  // namespace ineq::cli
