#include "lg/json_io.hpp"

namespace lg {

namespace {

Json rows_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix rows_from_json(PrimeField field, const Json& rows, int cols) {
  std::vector<std::vector<std::uint32_t>> data;
  for (const Json& row : rows) {
    std::vector<std::uint32_t> r;
    for (const Json& x : row) {
      std::int64_t v = x.get<std::int64_t>();
      r.push_back(field.reduce(v));
    }
    data.push_back(std::move(r));
  }
  return Matrix::from_rows(field, data, cols);
}

}  // namespace

Json matrix_to_json(const Matrix& m) {
  return Json{{"p", m.field().p()}, {"ambient", m.cols()},
              {"rows", rows_to_json(m)}};
}

Matrix matrix_from_json(const Json& j) {
  PrimeField field(j.at("p").get<std::uint32_t>());
  int ambient = j.at("ambient").get<int>();
  return rows_from_json(field, j.at("rows"), ambient);
}

Json subspace_to_json(const Subspace& s) {
  return Json{{"p", s.field().p()}, {"ambient", s.ambient_dim()},
              {"rows", rows_to_json(s.basis())}};
}

Subspace subspace_from_json(const Json& j) {
  return Subspace::span(matrix_from_json(j));
}

Json chain_to_json(const LinkedChain& chain) {
  Json f = Json::array();
  Json g = Json::array();
  for (const Matrix& m : chain.f) f.push_back(rows_to_json(m));
  for (const Matrix& m : chain.g) g.push_back(rows_to_json(m));
  return Json{{"p", chain.field.p()}, {"d", chain.d},     {"n", chain.n},
              {"s", chain.s},         {"f", std::move(f)}, {"g", std::move(g)}};
}

LinkedChain chain_from_json(const Json& j) {
  if (j.contains("model")) {
    if (j.at("model").get<std::string>() != "nested") {
      throw std::invalid_argument("unknown chain model: " +
                                  j.at("model").get<std::string>());
    }
    ChainSpec spec;
    spec.p = j.at("p").get<std::uint32_t>();
    spec.d = j.at("d").get<int>();
    spec.n = j.at("n").get<int>();
    for (const Json& subset : j.at("subsets")) {
      std::vector<int> s;
      for (const Json& c : subset) s.push_back(c.get<int>());
      spec.subsets.push_back(std::move(s));
    }
    if (j.contains("seed") && !j.at("seed").is_null()) {
      spec.seed = j.at("seed").get<std::uint64_t>();
    }
    return make_nested_chain(spec);
  }
  PrimeField field(j.at("p").get<std::uint32_t>());
  LinkedChain chain{field, j.at("d").get<int>(), j.at("n").get<int>(),
                    j.at("s").get<std::uint32_t>(), {}, {}};
  for (const Json& m : j.at("f")) {
    chain.f.push_back(rows_from_json(field, m, chain.d));
  }
  for (const Json& m : j.at("g")) {
    chain.g.push_back(rows_from_json(field, m, chain.d));
  }
  if (static_cast<int>(chain.f.size()) != chain.n - 1 ||
      static_cast<int>(chain.g.size()) != chain.n - 1) {
    throw std::invalid_argument("chain needs exactly n-1 maps on both sides");
  }
  for (const Matrix& m : chain.f) {
    if (m.rows() != chain.d || m.cols() != chain.d) {
      throw std::invalid_argument("chain maps must be d x d");
    }
  }
  for (const Matrix& m : chain.g) {
    if (m.rows() != chain.d || m.cols() != chain.d) {
      throw std::invalid_argument("chain maps must be d x d");
    }
  }
  return chain;
}

Json axiom_report_to_json(const AxiomReport& report) {
  Json failures = Json::array();
  for (const AxiomFailure& f : report.failures) {
    failures.push_back(Json{{"axiom", to_string(f.axiom)},
                            {"index", f.index},
                            {"witness", f.witness}});
  }
  return Json{{"pass", report.pass()},
              {"scalar_product_ok", report.scalar_product_ok},
              {"rank_complement_ok", report.rank_complement_ok},
              {"composite_rank_ok", report.composite_rank_ok},
              {"failures", std::move(failures)}};
}

Json pair_invariants_to_json(const PairInvariants& inv) {
  Json vbar1 = Json::array();
  Json vbarn = Json::array();
  for (int i = 1; i <= inv.n; ++i) {
    vbar1.push_back(subspace_to_json(inv.vbar1(i)));
    vbarn.push_back(subspace_to_json(inv.vbarn(i)));
  }
  Json interior = Json::array();
  for (int i = 2; i <= inv.n - 1; ++i) {
    interior.push_back(Json{{"i", i},
                            {"zbar_dim", inv.zbar_dim(i)},
                            {"zbar1_dim", inv.zbar1(i).dim()},
                            {"zbarn_dim", inv.zbarn(i).dim()},
                            {"zcap_dim", inv.zcap_dim(i)},
                            {"ztilde_dim", inv.ztilde_dim(i)}});
  }
  Json img_g = Json::array();
  Json img_f = Json::array();
  for (int i = 1; i <= inv.n; ++i) {
    img_g.push_back(inv.img_g_dim(i));
    img_f.push_back(inv.img_f_dim(i));
  }
  return Json{{"n", inv.n},
              {"d", inv.d},
              {"r", inv.r},
              {"vbar1", std::move(vbar1)},
              {"vbarn", std::move(vbarn)},
              {"v1n", subspace_to_json(inv.v1n())},
              {"vn1", subspace_to_json(inv.vn1())},
              {"interior", std::move(interior)},
              {"img_g_dim", std::move(img_g)},
              {"img_f_dim", std::move(img_f)},
              {"ker_f1_dim", inv.ker_f1_dim()},
              {"ker_gn1_dim", inv.ker_gn1_dim()}};
}

Json stratum_report_to_json(const StratumSpec& spec,
                            const StratumReport& report) {
  Json conditions = Json::array();
  for (std::size_t k = 0; k < report.conditions.size(); ++k) {
    const auto& ok = report.conditions[k].ok;
    conditions.push_back(Json{{"i", static_cast<int>(k) + 2},
                              {"cap_bound", ok[0]},
                              {"v1_window", ok[1]},
                              {"vn_window", ok[2]},
                              {"rank_floor", ok[3]},
                              {"next_sum_bound", ok[4]},
                              {"prev_sum_bound", ok[5]}});
  }
  Json key = Json::array();
  for (int x : spec.key()) key.push_back(x);
  return Json{{"key", std::move(key)},
              {"conditions", std::move(conditions)},
              {"nonempty", report.nonempty},
              {"dimension", report.dimension}};
}

Json pair_locus_spec_to_json(const PairLocusSpec& spec) {
  return Json{{"n", spec.n},
              {"r", spec.r},
              {"d", spec.d},
              {"dvbar1", spec.dvbar1},
              {"dvbarn", spec.dvbarn},
              {"dzbar", spec.dzbar},
              {"dv1n", spec.dv1n},
              {"dvn1", spec.dvn1},
              {"dimg_g", spec.dimg_g},
              {"dimg_f", spec.dimg_f},
              {"dztilde", spec.dztilde},
              {"dker_f1", spec.dker_f1},
              {"dker_gn1", spec.dker_gn1}};
}

Json pair_locus_report_to_json(const PairLocusReport& report) {
  Json conditions = Json::array();
  for (bool ok : report.conditions) conditions.push_back(ok);
  Json out{{"valid", report.valid},
           {"nonempty", report.nonempty},
           {"dimension", report.dimension},
           {"conditions", std::move(conditions)}};
  if (!report.valid) out["invalid_reason"] = report.invalid_reason;
  return out;
}

Json count_polynomial_to_json(const CountPolynomial& poly) {
  Json samples = Json::array();
  for (const auto& [q, c] : poly.samples) {
    samples.push_back(Json{{"q", q}, {"count", c}});
  }
  return Json{{"samples", std::move(samples)},
              {"coefficients", poly.coefficients},
              {"degree", poly.degree},
              {"exact_fit", poly.exact_fit},
              {"integer_coefficients", poly.integer_coefficients}};
}

Json census_to_json(const FiberCensus& census) {
  Json strata = Json::array();
  for (const auto& [key, count] : census.counts) {
    strata.push_back(Json{{"key", key}, {"count", count}});
  }
  return Json{{"total", census.total}, {"strata", std::move(strata)}};
}

Json verification_report_to_json(const VerificationReport& report) {
  Json models = Json::array();
  for (const ModelFinding& m : report.models) {
    Json profiles = Json::array();
    for (const ProfileFinding& pf : m.profiles) {
      Json strata = Json::array();
      for (const StratumFinding& sf : pf.strata) {
        Json counts = Json::object();
        for (const auto& [p, c] : sf.counts) {
          counts[std::to_string(p)] = c;
        }
        strata.push_back(Json{{"key", sf.key},
                              {"predicted",
                               Json{{"nonempty", sf.predicted_nonempty},
                                    {"dim", sf.predicted_dim}}},
                              {"counts", std::move(counts)},
                              {"degree", sf.degree},
                              {"exact_fit", sf.exact_fit},
                              {"witness_prime", sf.witness_prime},
                              {"verdict", sf.verdict}});
      }
      Json pair_count = Json::object();
      for (const auto& [p, c] : pf.pair_count) {
        pair_count[std::to_string(p)] = c;
      }
      Json fiber_count = Json::object();
      for (const auto& [p, c] : pf.fiber_count) {
        fiber_count[std::to_string(p)] = c;
      }
      profiles.push_back(Json{{"pair", pair_locus_spec_to_json(pf.profile)},
                              {"bound", pf.bound},
                              {"locus_nonempty", pf.locus_nonempty},
                              {"locus_dim", pf.locus_dim},
                              {"pair_count", std::move(pair_count)},
                              {"fiber_count", std::move(fiber_count)},
                              {"fiber_degree", pf.fiber_degree},
                              {"fiber_exact_fit", pf.fiber_exact_fit},
                              {"strata", std::move(strata)}});
    }
    Json lg_count = Json::object();
    for (const auto& [p, c] : m.lg_count) lg_count[std::to_string(p)] = c;
    models.push_back(Json{{"d", m.d},
                          {"n", m.n},
                          {"r", m.r},
                          {"sizes", m.sizes},
                          {"truncated", m.truncated},
                          {"truncation_reason", m.truncation_reason},
                          {"lg_count", std::move(lg_count)},
                          {"lg_degree", m.lg_degree},
                          {"lg_exact_fit", m.lg_exact_fit},
                          {"pairs", std::move(profiles)},
                          {"failures", m.failures},
                          {"warnings", m.warnings}});
  }
  const VerificationSummary& s = report.summary;
  Json primes = Json::array();
  for (std::uint32_t p : report.options.primes) primes.push_back(p);
  Json escalation = Json::array();
  for (std::uint32_t p : report.options.escalation_primes) {
    escalation.push_back(p);
  }
  Json config{{"max_d", report.options.max_d},
              {"max_n", report.options.max_n},
              {"max_r", report.options.max_r},
              {"primes", std::move(primes)},
              {"escalation_primes", std::move(escalation)},
              {"budget", report.options.budget.max_grassmannian_points}};
  if (report.options.seed) config["seed"] = *report.options.seed;
  return Json{{"config", std::move(config)},
              {"models", std::move(models)},
              {"summary", Json{{"models", s.models},
                               {"profiles", s.profiles},
                               {"strata_nonempty", s.strata_nonempty},
                               {"strata_empty", s.strata_empty},
                               {"failures", s.failures},
                               {"warnings", s.warnings},
                               {"failure_messages", s.failure_messages},
                               {"unwitnessed", s.unwitnessed}}},
              {"pass", report.pass()}};
}

Json crude_identity_to_json(const CrudeIdentityReport& report) {
  return Json{{"excess", report.excess},
              {"first_sum", report.first_sum},
              {"rprime_dprime_term", report.rprime_dprime_term},
              {"first_sum_matches", report.first_sum_matches},
              {"v_terms_vanish", report.v_terms_vanish},
              {"cap_terms_vanish", report.cap_terms_vanish},
              {"locus_ok", report.locus_ok},
              {"bound_matches_excess", report.bound_matches_excess},
              {"ok", report.ok()}};
}

Json gluing_profile_to_json(const GluingProfile& profile) {
  return Json{{"dy", profile.dy},
              {"dz", profile.dz},
              {"sums", profile.sums},
              {"within_case_split", profile.within_case_split},
              {"low_excess_shape", profile.low_excess_shape},
              {"membership_ok", profile.membership_ok},
              {"verdict", profile.verdict}};
}

Json genus0_to_json(const Genus0Result& result) {
  Json out{{"nonempty", result.nonempty}, {"rho", result.rho}};
  if (result.intersection_number) {
    out["intersection_number"] = *result.intersection_number;
  }
  return out;
}

Json genus1_to_json(const Genus1Result& result) {
  return Json{{"nonempty", result.nonempty},
              {"dimension", result.dimension},
              {"note", result.note}};
}

Json twist_dictionary_to_json(const TwistDictionary& dict) {
  return Json{{"n", dict.n_chain},
              {"r", dict.r_chain},
              {"deg_dy", dict.deg_dy},
              {"deg_dz", dict.deg_dz},
              {"d_twist", dict.d_twist},
              {"dvbar1", dict.dvbar1},
              {"dvbarn", dict.dvbarn},
              {"dimg_g", dict.dimg_g},
              {"dimg_f", dict.dimg_f},
              {"dztilde", dict.dztilde},
              {"dv1n", dict.dv1n},
              {"dvn1", dict.dvn1},
              {"dker_f1", dict.dker_f1},
              {"dker_gn1", dict.dker_gn1},
              {"margin_y", dict.margin_y},
              {"margin_z", dict.margin_z}};
}

}  // namespace lg
