#pragma once

#include <array>
#include <string>
#include <vector>

#include "lg/invariants.hpp"

namespace lg {

/// A prescribed interior dimension vector (d_{V1,i}, d_{Vn,i}, d_{Z,i}) for
/// the middle indices i = 2..n-1, stored 0-based (entry k is index k+2).
/// The two boundary values d_{Vn,1} and d_{V1,n} are not prescribed; they
/// are read off the pair invariants.
struct StratumSpec {
  int n = 0;
  int r = 0;
  std::vector<int> dv1, dvn, dz;

  int interior() const { return n - 2; }

  /// Parses "a,b,c;a,b,c;..." with one triple per middle index.
  static StratumSpec parse(const std::string& text, int n, int r);

  /// Flattened (dv1, dvn, dz) triples; the census key of this stratum.
  std::vector<int> key() const;
  static StratumSpec from_key(const std::vector<int>& key, int n, int r);
};

/// One middle index worth of verdicts for the six non-emptiness conditions,
/// in the order they are stated in the closed-form result.
struct StratumConditions {
  std::array<bool, 6> ok{true, true, true, true, true, true};
  bool all() const {
    for (bool b : ok) {
      if (!b) return false;
    }
    return true;
  }
};

struct StratumReport {
  bool nonempty = false;
  long long dimension = 0;  // meaningful when nonempty
  std::vector<StratumConditions> conditions;  // per middle index
};

/// Evaluates the stratum non-emptiness conditions and dimension formula for
/// the given prescribed dimensions over the given pair.
StratumReport stratum_report(const PairInvariants& inv, const StratumSpec& spec);

struct PairLocusSpec;
/// Same evaluation from the numeric profile of the pair alone.
StratumReport stratum_report(const PairLocusSpec& profile,
                             const StratumSpec& spec);

/// The full numeric profile of an end pair: every dimension the pair-locus
/// dimension formula consumes. Boundary entries of the ambient image data
/// follow the formula's conventions. This is also the key under which the
/// enumeration oracle buckets pairs.
struct PairLocusSpec {
  int n = 0;
  int r = 0;
  int d = 0;                 // common dimension of the chain spaces
  std::vector<int> dvbar1;   // i = 1..n at index i-1
  std::vector<int> dvbarn;   // i = 1..n
  std::vector<int> dzbar;    // i = 2..n-1 at index i-2
  int dv1n = 0, dvn1 = 0;
  std::vector<int> dimg_g;   // i = 1..n; i = 1 holds the boundary convention
  std::vector<int> dimg_f;   // i = 1..n; i = n holds the boundary convention
  std::vector<int> dztilde;  // i = 2..n-1
  int dker_f1 = 0, dker_gn1 = 0;

  static PairLocusSpec from_invariants(const PairInvariants& inv);

  /// Derived graded dims, extended over i = 1..n with the conventions
  /// dvbar1(n+1) = dvbarn(0) = 0.
  int dzbar1(int i) const;
  int dzbarn(int i) const;
  /// dim of the intersection of the two distinguished cokernel images,
  /// i interior.
  int dzcap(int i) const;

  /// All fields flattened into one comparable vector; used to bucket pairs
  /// with identical numeric profiles.
  std::vector<int> flatten() const;

  friend bool operator==(const PairLocusSpec&, const PairLocusSpec&) = default;
};

struct PairLocusReport {
  bool valid = true;            // derived quantities all non-negative
  std::string invalid_reason;
  bool nonempty = false;
  long long dimension = 0;
  std::array<bool, 9> conditions{};  // one verdict per condition family
};

/// Evaluates the nine pair-locus condition families and the dimension
/// formula on a numeric profile.
PairLocusReport pair_locus_report(const PairLocusSpec& spec);

/// Upper bound for the dimension of the fiber over a pair with the given
/// numeric profile.
long long fiber_bound(const PairLocusSpec& spec);
long long fiber_bound(const PairInvariants& inv);

}  // namespace lg
