#pragma once

#include <json.hpp>

#include "lg/chain.hpp"
#include "lg/limit_series.hpp"
#include "lg/oracle.hpp"

namespace lg {

using Json = nlohmann::json;

/// Matrices and subspaces travel as {"p": int, "ambient": int,
/// "rows": [[int, ...], ...]} with entries reduced to [0, p).
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

Json subspace_to_json(const Subspace& s);
/// Accepts any spanning rows; the result is canonicalized.
Subspace subspace_from_json(const Json& j);

/// Chains travel either as the nested model
///   {"model": "nested", "p":, "d":, "n":, "subsets": [[...], ...], "seed":?}
/// or explicitly as {"p":, "d":, "n":, "s":, "f": [rows, ...], "g": [...]}
/// where each map is a plain 2-d array over the chain's field.
Json chain_to_json(const LinkedChain& chain);
LinkedChain chain_from_json(const Json& j);

Json axiom_report_to_json(const AxiomReport& report);
Json pair_invariants_to_json(const PairInvariants& inv);
Json stratum_report_to_json(const StratumSpec& spec, const StratumReport& report);
Json pair_locus_spec_to_json(const PairLocusSpec& spec);
Json pair_locus_report_to_json(const PairLocusReport& report);
Json count_polynomial_to_json(const CountPolynomial& poly);
Json census_to_json(const FiberCensus& census);
Json verification_report_to_json(const VerificationReport& report);
Json crude_identity_to_json(const CrudeIdentityReport& report);
Json gluing_profile_to_json(const GluingProfile& profile);
Json genus0_to_json(const Genus0Result& result);
Json genus1_to_json(const Genus1Result& result);
Json twist_dictionary_to_json(const TwistDictionary& dict);

}  // namespace lg
