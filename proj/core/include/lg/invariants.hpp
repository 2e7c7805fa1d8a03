#pragma once

#include <vector>

#include "lg/chain.hpp"
#include "lg/subspace.hpp"

namespace lg {

/// A chain together with a fixed pair of end subspaces of common rank r.
/// All analysis in this module assumes s = 0 and n > 2.
struct PairConfig {
  LinkedChain chain;
  int r = 0;
  Subspace v1;
  Subspace vn;
};

void validate_pair_config(const PairConfig& cfg);

/// True when the forward composite carries v1 into vn and the backward
/// composite carries vn into v1. Necessary, but not sufficient, for the
/// pair to extend to a full linked tuple.
bool admissible(const PairConfig& cfg);

/// Everything the end pair determines: the two filtrations of v1 and vn,
/// the end images, the cokernels of the middle spaces with their two
/// distinguished images, and the ambient dimension data the closed-form
/// dimension results consume.
///
/// Indexing is 1-based to match the chain: vbar1(i) for i in [1, n],
/// interior structures for i in [2, n-1]. The ambient image dimensions at
/// the two ends (img_g_dim(1) and img_f_dim(n)) follow the bookkeeping
/// conventions of the dimension formulas rather than the literal identity
/// maps.
class PairInvariants {
 public:
  int n = 0, d = 0, r = 0;

  const Subspace& vbar1(int i) const { return vbar1_.at(i - 1); }
  const Subspace& vbarn(int i) const { return vbarn_.at(i - 1); }
  const Subspace& v1n() const { return v1n_.front(); }
  const Subspace& vn1() const { return vn1_.front(); }

  const Quotient& zbar(int i) const { return zbar_.at(i - 2); }
  const Subspace& zbar1(int i) const { return zbar1_.at(i - 2); }
  const Subspace& zbarn(int i) const { return zbarn_.at(i - 2); }

  int zbar_dim(int i) const { return zbar(i).target_dim(); }
  int zcap_dim(int i) const { return zcap_dim_.at(i - 2); }
  int ztilde_dim(int i) const { return ztilde_dim_.at(i - 2); }

  /// Graded piece dims of the two filtrations, extended to i in [1, n] with
  /// the conventions vbar1(n+1) = 0 and vbarn(0) = 0.
  int zbar1_dim_ext(int i) const;
  int zbar_n_dim_ext(int i) const;

  int img_g_dim(int i) const { return img_g_dim_.at(i - 1); }
  int img_f_dim(int i) const { return img_f_dim_.at(i - 1); }
  int ker_f1_dim() const { return ker_f1_dim_; }
  int ker_gn1_dim() const { return ker_gn1_dim_; }

  friend class PairAnalyzer;

 private:
  std::vector<Subspace> vbar1_, vbarn_;
  std::vector<Subspace> v1n_, vn1_;  // single element each
  std::vector<Quotient> zbar_;
  std::vector<Subspace> zbar1_, zbarn_;
  std::vector<int> zcap_dim_, ztilde_dim_;
  std::vector<int> img_g_dim_, img_f_dim_;
  int ker_f1_dim_ = 0, ker_gn1_dim_ = 0;
};

/// Per-point data of a full linked tuple: the dimensions of the images of
/// each V_i at the two ends and of its class in the middle cokernels.
struct PointInvariants {
  std::vector<int> v1i_dim;  // index i-1, i in [1, n]
  std::vector<int> vni_dim;
  std::vector<int> zi_dim;   // index i-2, i in [2, n-1]

  /// Interior dimension triples flattened as (v1, vn, z) per middle index;
  /// this is the stratum key of the point.
  std::vector<int> stratum_key() const;
};

/// Validates a chain once and precomputes the end composites so that pair
/// and point analysis can be run over many pairs cheaply.
class PairAnalyzer {
 public:
  PairAnalyzer(LinkedChain chain, int r);

  const LinkedChain& chain() const { return chain_; }
  int r() const { return r_; }

  /// g_{i-1,1} : E_i -> E_1 and f_{i,n-1} : E_i -> E_n, i in [1, n].
  const Matrix& g_comp(int i) const { return g_comp_.at(i - 1); }
  const Matrix& f_comp(int i) const { return f_comp_.at(i - 1); }
  const Subspace& img_g(int i) const { return img_g_.at(i - 1); }
  const Subspace& img_f(int i) const { return img_f_.at(i - 1); }

  bool admissible(const Subspace& v1, const Subspace& vn) const;
  PairInvariants invariants(const Subspace& v1, const Subspace& vn) const;

  /// Validates linkage (throws naming the violating index) and computes the
  /// point data of a tuple whose ends match the given invariants.
  PointInvariants point(const std::vector<Subspace>& tuple,
                        const PairInvariants& inv) const;

  /// The middle spaces inject into the direct sum of the two filtration
  /// members under the pair of end composites.
  bool middle_embeds_in_end_sum(const std::vector<Subspace>& tuple) const;

  /// The images of the two end-image spaces in each middle cokernel
  /// coincide (and equal the class of the tuple there).
  bool end_images_coincide(const std::vector<Subspace>& tuple,
                           const PairInvariants& inv) const;

 private:
  void validate_ends(const Subspace& v1, const Subspace& vn) const;
  void validate_tuple(const std::vector<Subspace>& tuple) const;

  LinkedChain chain_;
  int r_;
  std::vector<Matrix> g_comp_, f_comp_;
  std::vector<Subspace> img_g_, img_f_;    // column spaces of the composites
  std::vector<Subspace> joint_kernel_;     // ker(g_comp) ∩ ker(f_comp), interior
  int ker_f1_dim_ = 0, ker_gn1_dim_ = 0;
};

PairInvariants pair_invariants(const PairConfig& cfg);

PointInvariants point_invariants(const LinkedChain& chain,
                                 const std::vector<Subspace>& tuple,
                                 const PairInvariants& inv);

PointInvariants point_invariants(const LinkedChain& chain, int r,
                                 const std::vector<Subspace>& tuple);

bool middle_embeds_in_end_sum(const LinkedChain& chain, int r,
                              const std::vector<Subspace>& tuple);

bool end_images_coincide(const LinkedChain& chain, int r,
                         const std::vector<Subspace>& tuple);

}  // namespace lg
