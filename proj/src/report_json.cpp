#include "sumsetlab/report_json.hpp"

namespace sumsetlab {

Json to_json(const BoundValue& b) {
  Json j;
  j["raw"] = b.raw;
  j["K"] = b.k;
  return j;
}

Json to_json(const PlunneckeReport& r) {
  Json j;
  j["a_size"] = r.a_size;
  j["b_size"] = r.b_size;
  j["sum_size"] = r.sum_size;
  j["alpha"] = r.alpha;
  j["k"] = r.k;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["pass"] = r.pass;
  return j;
}

namespace {

Json half_json(const HalfReport& h) {
  Json j;
  j["prefix_sizes"] = h.prefix_sizes;
  Json steps = Json::array();
  for (const auto& s : h.steps) {
    Json step;
    step["index"] = s.index;
    step["prev_size"] = s.prev_size;
    step["size"] = s.size;
    step["bound"] = s.bound;
    step["asserted"] = s.asserted;
    step["holds"] = s.holds;
    steps.push_back(std::move(step));
  }
  j["steps"] = std::move(steps);
  j["telescoped_bound"] = h.telescoped_bound;
  j["telescoped_bound_asserted"] = h.telescoped_bound_asserted;
  j["telescoped_bound_holds"] = h.telescoped_bound_holds;
  j["lambda_bound"] = h.lambda_bound;
  j["lambda_bound_asserted"] = h.lambda_bound_asserted;
  j["lambda_bound_holds"] = h.lambda_bound_holds;
  j["stated_bound"] = h.stated_bound;
  j["stated_bound_holds"] = h.stated_bound_holds;
  j["size"] = h.size;
  j["exceeds_half"] = h.exceeds_half;
  return j;
}

Json product_steps_json(const std::vector<ProductStep>& steps) {
  Json out = Json::array();
  for (const auto& s : steps) {
    Json step;
    step["index"] = s.index;
    step["prev_size"] = s.prev_size;
    step["size"] = s.size;
    step["asserted"] = s.asserted;
    step["holds"] = s.holds;
    out.push_back(std::move(step));
  }
  return out;
}

Json bools(const std::vector<bool>& flags) {
  Json out = Json::array();
  for (bool f : flags) out.push_back(f);
  return out;
}

}  // namespace

Json to_json(const Theorem1Report& r) {
  Json j;
  j["m"] = r.m;
  j["K"] = r.k;
  j["sets"] = 2 * r.k;
  j["order"] = r.order;
  j["lambda"] = r.lambda;
  j["bound"] = r.bound ? to_json(*r.bound) : Json(nullptr);
  j["k_meets_bound"] = r.k_meets_bound;
  j["hypotheses"] = bools(r.hypotheses);
  j["hypotheses_hold"] = r.hypotheses_hold;
  j["halves"] = Json::array({half_json(r.halves[0]), half_json(r.halves[1])});
  j["chain_holds"] = r.chain_holds;
  j["total_size"] = r.total_size;
  j["final_cover"] = r.final_cover;
  j["violation"] = r.violation;
  j["pass"] = r.pass;
  return j;
}

Json to_json(const PigeonholeReport& r) {
  Json j;
  j["a_size"] = r.a_size;
  j["b_size"] = r.b_size;
  j["order"] = r.order;
  j["premise_met"] = r.premise_met;
  j["sum_size"] = r.sum_size;
  j["covers"] = r.covers;
  j["pass"] = r.pass;
  return j;
}

Json to_json(const KpnUpper& u) {
  Json j;
  j["general"] = u.general;
  j["ternary"] = u.ternary ? Json(*u.ternary) : Json(nullptr);
  return j;
}

Json to_json(const KpnReport& r) {
  Json j;
  j["p"] = r.p;
  j["n"] = r.n;
  j["k_max"] = r.k_max;
  j["budget"] = r.budget;
  j["basis_count"] = r.basis_count;
  Json levels = Json::array();
  for (const auto& l : r.levels) {
    Json level;
    level["k"] = l.k;
    level["exhaustive"] = l.exhaustive;
    level["tuples_checked"] = l.tuples_checked;
    level["counterexample_found"] = l.counterexample_found;
    levels.push_back(std::move(level));
  }
  j["levels"] = std::move(levels);
  j["answer"] = r.answer ? Json(*r.answer) : Json(nullptr);
  j["exact"] = r.exact;
  if (r.witness) {
    Json w;
    w["k"] = r.witness->k;
    w["bases"] = r.witness->bases;
    w["subset_sums"] = r.witness->subset_sums;
    j["witness"] = std::move(w);
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

Json to_json(const Example1Report& r) {
  Json j;
  j["p"] = r.p;
  j["k"] = r.k;
  j["n"] = r.n;
  j["order"] = r.order;
  Json levels = Json::array();
  for (const auto& l : r.levels) {
    Json level;
    level["i"] = l.i;
    level["a_size"] = l.a_size;
    level["a_size_expected"] = l.a_size_expected;
    if (l.i > 0) {
      level["c_size"] = l.c_size;
      level["c_size_expected"] = l.c_size_expected;
      level["c_double_size"] = l.c_double_size;
      level["c_double_covers"] = l.c_double_covers;
    }
    level["a_double_covers"] = l.a_double_covers;
    levels.push_back(std::move(level));
  }
  j["levels"] = std::move(levels);
  Json chain = Json::array();
  for (const auto& s : r.chain) {
    Json step;
    step["j"] = s.j;
    step["size"] = s.size;
    step["size_expected"] = s.size_expected;
    step["matches_structure"] = s.matches_structure;
    step["covers"] = s.covers;
    chain.push_back(std::move(step));
  }
  j["chain"] = std::move(chain);
  j["claims_expected"] = r.claims_expected;
  j["claims_hold"] = r.claims_hold;
  if (r.p == 2) {
    Json edge;
    edge["c1_double"] = r.p2_c1_double;
    edge["reproduced"] = r.p2_edge_case_reproduced;
    j["p2_edge_case"] = std::move(edge);
  }
  j["warnings"] = r.warnings;
  j["pass"] = r.pass;
  return j;
}

Json to_json(const QuasirandomInfo& q) {
  Json j;
  j["D"] = q.d;
  j["delta"] = q.delta;
  return j;
}

Json to_json(const RuzsaReport& r) {
  Json j;
  j["a_size"] = r.a_size;
  j["b_size"] = r.b_size;
  j["c_size"] = r.c_size;
  j["ac_inv_size"] = r.ac_size;
  j["ab_inv_size"] = r.ab_size;
  j["bc_inv_size"] = r.bc_size;
  j["bound"] = r.bound;
  j["inequality_holds"] = r.inequality_holds;
  j["representations_checked"] = r.representations_checked;
  j["min_representations"] = r.min_representations;
  j["representations_hold"] = r.representations_hold;
  j["pass"] = r.pass;
  return j;
}

Json to_json(const GowersReport& r) {
  Json j;
  j["D"] = r.d;
  j["a_size"] = r.a_size;
  j["b_size"] = r.b_size;
  j["c_size"] = r.c_size;
  j["size_product"] = r.size_product;
  j["threshold"] = r.threshold;
  j["premise_met"] = r.premise_met;
  j["product_size"] = r.product_size;
  j["covers"] = r.covers;
  j["pass"] = r.pass;
  return j;
}

Json to_json(const Theorem4Bound& b) {
  Json j;
  j["raw"] = b.raw;
  j["K"] = b.k;
  j["sets"] = 3 * b.k;
  return j;
}

Json to_json(const Theorem4Report& r) {
  Json j;
  j["p"] = r.p;
  j["order"] = r.order;
  j["K"] = r.k;
  j["sets"] = 3 * r.k;
  j["quasirandom"] = to_json(r.info);
  j["bound"] = to_json(r.bound);
  j["k_meets_bound"] = r.k_meets_bound;
  j["hypotheses"] = bools(r.hypotheses);
  j["mirror_hypotheses"] = bools(r.mirror_hypotheses);
  j["hypotheses_hold"] = r.hypotheses_hold;
  j["size_floors_hold"] = r.size_floors_hold;
  Json blocks = Json::array();
  for (const auto& b : r.blocks) {
    Json block;
    block["prefix_sizes"] = b.prefix_sizes;
    block["prefix_steps"] = product_steps_json(b.prefix_steps);
    block["suffix_sizes"] = b.suffix_sizes;
    block["suffix_steps"] = product_steps_json(b.suffix_steps);
    block["size"] = b.size;
    block["power_bound"] = b.power_bound;
    block["power_bound_holds"] = b.power_bound_holds;
    block["delta_bound"] = b.delta_bound;
    block["exceeds_delta_bound"] = b.exceeds_delta_bound;
    blocks.push_back(std::move(block));
  }
  j["blocks"] = std::move(blocks);
  j["chain_holds"] = r.chain_holds;
  j["gowers"] = to_json(r.gowers);
  j["total_size"] = r.total_size;
  j["final_cover"] = r.final_cover;
  j["violation"] = r.violation;
  j["pass"] = r.pass;
  return j;
}

Json to_json(const Remark12Report& r) {
  Json j;
  j["p"] = r.p;
  j["quasirandom"] = to_json(r.info);
  j["bound"] = to_json(r.bound);
  j["applies"] = r.applies;
  j["twelve_sets_suffice"] = r.twelve_sets_suffice;
  j["trials"] = r.trials;
  j["trials_passed"] = r.trials_passed;
  Json runs = Json::array();
  for (const auto& run : r.runs) runs.push_back(to_json(run));
  j["runs"] = std::move(runs);
  j["pass"] = r.pass;
  return j;
}

}  // namespace sumsetlab
