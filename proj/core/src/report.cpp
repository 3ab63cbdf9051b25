#include "addcomb/report.hpp"

#include <cmath>
#include <limits>

#include "addcomb/instance_io.hpp"

namespace addcomb {

namespace {

Json elements(const GSet& s) { return elements_to_json(s); }

Json index_list(const std::vector<std::size_t>& v) {
  Json out = Json::array();
  for (const std::size_t i : v) out.push_back(i);
  return out;
}

const char* method_name(SpectrumMethod m) {
  switch (m) {
    case SpectrumMethod::kAuto:
      return "auto";
    case SpectrumMethod::kDirect:
      return "direct";
    case SpectrumMethod::kFast:
      return "fast";
  }
  return "unknown";
}

Json interval_json(const CircularInterval& iv) { return Json{{"start", iv.start}, {"length", iv.length}}; }

void flatten(const Json& doc, const std::string& prefix, std::string& out) {
  if (doc.is_object()) {
    for (const auto& [key, value] : doc.items()) flatten(value, prefix.empty() ? key : prefix + "." + key, out);
    return;
  }
  out += prefix;
  out += ": ";
  out += doc.is_string() ? doc.get<std::string>() : doc.dump();
  out += '\n';
}

}  // namespace

Json json_number(double x) {
  if (!std::isfinite(x)) return x > 0 ? Json("inf") : (x < 0 ? Json("-inf") : Json("nan"));
  return round_sig(x, 12);
}

Json json_rational(const Rational& q) { return to_string(q); }

Json json_bigint(const BigInt& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(x);
  }
  return x.str();
}

Json to_json(const DoublingRatios& r) {
  return Json{{"size", r.size},
              {"sumset_size", r.sumset_size},
              {"difference_size", r.difference_size},
              {"sum_ratio", json_rational(r.sum)},
              {"difference_ratio", json_rational(r.difference)},
              {"min_ratio", json_rational(r.min)}};
}

Json to_json(const DiameterWitness& w) {
  return Json{{"modulus", w.modulus},
              {"length", w.length},
              {"dilation", w.dilation},
              {"shift", w.shift},
              {"normalized", elements(w.normalized)},
              {"dilations_scanned", w.dilations_scanned},
              {"contained", w.contained}};
}

Json to_json(const SpectrumReport& s, std::size_t top) {
  Json j{{"set_size", s.set_size},
         {"group_order", s.group_order},
         {"density", json_rational(s.density)},
         {"method", method_name(s.method)},
         {"max_index", s.max_index},
         {"max_magnitude", json_number(s.max_magnitude)},
         {"eta_achieved", json_number(s.eta_achieved)},
         {"parseval_residual", json_number(s.parseval_residual)}};
  Json tops = Json::array();
  for (const auto& [index, mag] : s.top(top)) tops.push_back(Json{{"index", index}, {"magnitude", json_number(mag)}});
  j["top"] = std::move(tops);
  if (s.group_order <= kFullSpectrumLimit) {
    Json mags = Json::array();
    for (const double m : s.magnitudes) mags.push_back(json_number(m));
    j["magnitudes"] = std::move(mags);
  }
  return j;
}

Json to_json(const ConvolutionCounts& c) {
  Json counts = Json::array();
  for (const auto& [code, count] : c.counts) {
    counts.push_back(Json{{"element", element_to_json(c.group, code)}, {"count", json_bigint(count)}});
  }
  return Json{{"order", c.order},
              {"support_size", c.support_size()},
              {"total", json_bigint(c.total())},
              {"sum_of_squares", json_bigint(c.sum_of_squares())},
              {"counts", std::move(counts)}};
}

Json to_json(const MomentReport& m) {
  return Json{{"m", m.m},
              {"set_size", m.set_size},
              {"group_order", m.group_order},
              {"support_size", m.support_size},
              {"total", json_bigint(m.total)},
              {"total_exact", m.total_exact},
              {"sum_of_squares", json_bigint(m.sum_of_squares)},
              {"cauchy_schwarz_holds", m.cauchy_schwarz_holds},
              {"cauchy_schwarz_margin", json_number(m.cauchy_schwarz_margin)},
              {"moment_sum", json_number(static_cast<double>(m.moment_sum))},
              {"parseval_residual", json_number(m.parseval_residual)},
              {"parseval_holds", m.parseval_holds},
              {"max_nonprincipal", json_number(m.max_nonprincipal)},
              {"max_power", json_number(m.max_power)},
              {"max_bound", json_number(m.max_bound)},
              {"max_bound_holds", m.max_bound_holds},
              {"holds", m.holds()}};
}

Json to_json(const LargeCoeffParameters& p) {
  return Json{{"k", p.k},
              {"beta", json_rational(p.beta)},
              {"m", p.m},
              {"eta", json_number(p.eta)},
              {"m_at_least_k", p.m_at_least_k},
              {"m_lower_bound", p.m_lower_bound},
              {"beta_root", json_number(p.beta_root)},
              {"log_term", json_number(p.log_term)},
              {"chain_holds", p.chain_holds}};
}

Json to_json(const LargeCoefficientCertificate& c) {
  return Json{{"k", c.k},
              {"parameters", to_json(c.parameters)},
              {"index", c.index},
              {"magnitude", json_number(c.magnitude)},
              {"target", json_number(c.target)},
              {"holds", c.holds}};
}

Json to_json(const PluenneckeWitness& w) {
  return Json{{"subset", elements(w.subset)},
              {"sumset_size", w.sumset_size},
              {"ratio", json_rational(w.ratio)},
              {"k1", json_rational(w.k1)},
              {"k2", json_rational(w.k2)},
              {"within_bound", w.within_bound},
              {"subsets_examined", w.subsets_examined}};
}

Json to_json(const CoveringCertificate& c) {
  return Json{{"group", group_to_json(c.base.group())},
              {"base", elements(c.base)},
              {"b1", elements(c.b1)},
              {"b2", elements(c.b2)},
              {"bound_kind", c.bound_kind == CoveringBoundKind::kPluennecke ? "pluennecke_witness" : "greedy_count"},
              {"witness", elements(c.witness)},
              {"translates", elements(c.translates)},
              {"k1", json_rational(c.k1)},
              {"k2", json_rational(c.k2)},
              {"witness_sumset_size", c.witness_sumset_size},
              {"witness_ratio", json_rational(c.witness_ratio)},
              {"size_bound", json_bigint(c.size_bound)},
              {"greedy_bound", json_bigint(c.greedy_bound)},
              {"lhs_size", c.lhs_size},
              {"rhs_size", c.rhs_size},
              {"translates_in_sumset", c.translates_in_sumset},
              {"witness_in_base", c.witness_in_base},
              {"greedy_maximal", c.greedy_maximal},
              {"inclusion_verified", c.inclusion_verified},
              {"size_bound_holds", c.size_bound_holds},
              {"m_checked", c.m_checked},
              {"verified", c.verified()}};
}

Json to_json(const GrowthBoundReport& r) {
  return Json{{"m", r.m},
              {"k", r.k},
              {"base_size", r.base_size},
              {"iterated_size", r.iterated_size},
              {"difference_span", r.difference_span},
              {"j_value", json_bigint(r.j_value)},
              {"span_within_j", r.span_within_j},
              {"estjcov_holds", r.estjcov_holds},
              {"estecov_applicable", r.estecov_applicable},
              {"estecov_bound", json_number(to_double(r.estecov_bound))},
              {"estecov_holds", r.estecov_holds},
              {"holds", r.holds()}};
}

Json to_json(const JBoundReport& r) {
  return Json{{"k", r.k},
              {"m", r.m},
              {"count", json_bigint(r.count)},
              {"bound", json_number(to_double(r.bound))},
              {"holds", r.holds}};
}

Json to_json(const GrowthTable& t) {
  Json rows = Json::array();
  for (const GrowthRow& row : t.rows) {
    rows.push_back(Json{{"m", row.m}, {"count", json_bigint(row.count)}, {"bound", json_number(to_double(row.bound))}});
  }
  return Json{{"k", t.k}, {"rows", std::move(rows)}, {"empirical_constant", json_number(t.empirical_constant)}};
}

Json to_json(const LevResult& r) {
  Json j{{"applicable", r.applicable},
         {"coefficient", json_number(r.coefficient)},
         {"threshold", json_number(r.threshold)},
         {"max_length", r.max_length}};
  if (r.applicable) {
    j["interval"] = interval_json(r.interval);
    j["exceptions"] = r.exceptions;
    j["conclusion_holds"] = r.conclusion_holds;
  }
  return j;
}

Json to_json(const GapCoverResult& r) {
  Json j{{"hypothesis_holds", r.hypothesis_holds}, {"exceptions", r.exceptions}};
  if (r.hypothesis_holds) {
    j["interval"] = interval_json(r.interval);
    j["conclusion_holds"] = r.conclusion_holds;
  }
  return j;
}

Json to_json(const DiamSpectrumReport& r) {
  Json j{{"hypothesis_met", r.hypothesis_met},
         {"frequency", r.frequency},
         {"coefficient", json_number(r.coefficient)},
         {"threshold", json_number(r.threshold)},
         {"true_diameter", r.true_diameter}};
  if (r.hypothesis_met) {
    j["lev"] = to_json(r.lev);
    j["cover"] = to_json(r.cover);
    j["chain_length"] = r.chain_length;
    j["conclusion_holds"] = r.conclusion_holds;
  }
  return j;
}

Json to_json(const IsoCheck& r) {
  Json j{{"is_isomorphism", r.is_isomorphism}, {"multisets", r.multisets}};
  if (!r.is_isomorphism) j["counterexample"] = Json{{"first", index_list(r.first)}, {"second", index_list(r.second)}};
  return j;
}

Json to_json(const RectifyResult& r) {
  Json j{{"success", r.success}, {"diameter", to_json(r.diameter)}};
  if (r.witness) {
    const RectificationWitness& w = *r.witness;
    Json images = Json::array();
    for (const Code c : w.images) images.push_back(c);
    j["witness"] = Json{{"k", w.k},
                        {"modulus", w.modulus},
                        {"dilation", w.dilation},
                        {"shift", w.shift},
                        {"length", w.length},
                        {"image", elements(w.image)},
                        {"images", std::move(images)},
                        {"verified", w.verified},
                        {"certification_skipped", w.certification_skipped}};
  }
  return j;
}

Json to_json(const IntegerModel& m) {
  Json rounds = Json::array();
  for (const ModelRound& r : m.rounds) {
    rounds.push_back(Json{{"bound_before", r.bound_before},
                          {"prime", r.prime},
                          {"diameter", r.diameter},
                          {"dilation", r.dilation},
                          {"shift", r.shift},
                          {"certified", r.certified},
                          {"certification_skipped", r.certification_skipped}});
  }
  Json images = Json::array();
  for (const Code c : m.images) images.push_back(c);
  return Json{{"k", m.k},
              {"original", elements(m.original)},
              {"model", elements(m.model)},
              {"length_upper_bound", m.model.max()},
              {"images", std::move(images)},
              {"rounds", std::move(rounds)},
              {"composite_certified", m.composite_certified},
              {"certification_skipped", m.certification_skipped}};
}

Json to_json(const SubgroupCosetCertificate& c) {
  const GroupSpec& g = c.set.group();
  Json gens = Json::array();
  for (const Code x : c.generators) gens.push_back(element_to_json(g, x));
  return Json{{"group", group_to_json(g)},
              {"set", elements(c.set)},
              {"exponent", c.exponent},
              {"k_sum", json_rational(c.k_sum)},
              {"k_difference", json_rational(c.k_difference)},
              {"difference_size", c.difference_size},
              {"translates", elements(c.translates)},
              {"translates_source", c.source == TranslateSource::kSum ? "A" : "-A"},
              {"translates_bound",
               c.translates_bound == CoveringBoundKind::kPluennecke ? "pluennecke_witness" : "greedy_count"},
              {"generators", std::move(gens)},
              {"translate_span_size", c.translate_span_size},
              {"coset_rep", element_to_json(g, c.coset_rep)},
              {"subgroup", elements(c.subgroup)},
              {"subgroup_size", c.subgroup_size},
              {"bound_a", json_rational(c.bound_a)},
              {"bound_a_capped", json_rational(c.bound_a_capped)},
              {"bound_b", json_rational(c.bound_b)},
              {"bound_b_capped", json_rational(c.bound_b_capped)},
              {"bound_b_translates", json_bigint(c.bound_b_translates)},
              {"subgroup_closed", c.subgroup_closed},
              {"contains_a", c.contains_a},
              {"gen_inclusion", c.gen_inclusion},
              {"span_bound_holds", c.span_bound_holds},
              {"difference_bound_holds", c.difference_bound_holds},
              {"ruzsa_holds", c.ruzsa_holds},
              {"bound_a_holds", c.bound_a_holds},
              {"bound_b_holds", c.bound_b_holds},
              {"verified", c.verified()}};
}

Json to_json(const BoundReport& r) {
  const double ln10 = std::log(10.0);
  return Json{{"log10_alpha", json_number(static_cast<double>(r.log_alpha) / ln10)},
              {"doubling", json_rational(r.doubling)},
              {"k", r.k},
              {"log10_threshold_thm1", json_number(static_cast<double>(r.log_threshold_thm1) / ln10)},
              {"log10_threshold_thm2", json_number(static_cast<double>(r.log_threshold_thm2) / ln10)},
              {"log10_model_factor", json_number(static_cast<double>(r.log_model_factor) / ln10)},
              {"alpha_within_thm1", r.alpha_within_thm1},
              {"alpha_within_thm2", r.alpha_within_thm2},
              {"gates_exact", r.gates_exact},
              {"delta_bound", json_number(r.delta_bound)},
              {"delta_bound_below_third", r.delta_bound_below_third},
              {"delta_bound_below_inverse_k", r.delta_bound_below_inverse_k},
              {"log10_tau", json_number(static_cast<double>(r.log_tau) / ln10)},
              {"tau_gate", r.tau_gate},
              {"eta", json_number(r.eta)},
              {"delta", json_number(r.delta)},
              {"delta_below_third", r.delta_below_third},
              {"delta_below_inverse_k", r.delta_below_inverse_k},
              {"thm1_chain_holds", r.thm1_chain_holds()},
              {"thm2_chain_holds", r.thm2_chain_holds()}};
}

Json to_json(const Theorem1Report& r) {
  Json j{{"modulus", r.modulus},
         {"set_size", r.set_size},
         {"ratios", to_json(r.ratios)},
         {"doubling", json_rational(r.doubling)},
         {"alpha", json_rational(r.alpha)},
         {"difference_size", r.difference_size},
         {"tau", json_rational(r.tau)},
         {"alpha_gate", r.alpha_gate},
         {"tau_gate", r.tau_gate}};
  if (r.bounds) j["bounds"] = to_json(*r.bounds);
  if (r.eta) j["eta"] = json_number(*r.eta);
  if (r.delta) j["delta"] = json_number(*r.delta);
  if (r.lemma_diam) j["lemma_diam"] = to_json(*r.lemma_diam);
  j["true_diameter"] = r.true_diameter;
  j["diameter_bound"] = json_number(r.diameter_bound);
  j["diameter_within_bound"] = r.diameter_within_bound;
  j["gates_passed"] = r.gates_passed();
  j["violation"] = r.violation();
  return j;
}

std::string to_human(const Json& doc) {
  std::string out;
  flatten(doc, "", out);
  return out;
}

}  // namespace addcomb
