#include "lg/invariants.hpp"

#include <sstream>

namespace lg {

namespace {

void internal_check(bool ok, const char* what) {
  if (!ok) {
    throw std::logic_error(std::string("internal invariant violated: ") + what);
  }
}

/// Rows (coords of x1 in b1 basis | coords of xn in bn basis) for all basis
/// vectors of the two given subspaces, one block at a time.
Matrix paired_coordinate_rows(const Subspace& b1, const Subspace& bn,
                              const Subspace& x1, const Subspace& xn) {
  const PrimeField& f = b1.field();
  const int w = b1.dim() + bn.dim();
  std::vector<std::vector<std::uint32_t>> rows;
  for (int r = 0; r < x1.dim(); ++r) {
    std::vector<std::uint32_t> v = x1.basis().row(r);
    internal_check(b1.contains_vector(v), "end image escapes filtration");
    std::vector<std::uint32_t> coords = b1.coordinates(v);
    coords.resize(w, 0);
    rows.push_back(std::move(coords));
  }
  for (int r = 0; r < xn.dim(); ++r) {
    std::vector<std::uint32_t> v = xn.basis().row(r);
    internal_check(bn.contains_vector(v), "end image escapes filtration");
    std::vector<std::uint32_t> c = bn.coordinates(v);
    std::vector<std::uint32_t> row(w, 0);
    for (std::size_t j = 0; j < c.size(); ++j) row[b1.dim() + j] = c[j];
    rows.push_back(std::move(row));
  }
  return Matrix::from_rows(f, rows, w);
}

}  // namespace

void validate_pair_config(const PairConfig& cfg) {
  const LinkedChain& chain = cfg.chain;
  if (chain.n <= 2) {
    throw std::invalid_argument("pair analysis requires chain length n > 2");
  }
  if (chain.field.reduce(chain.s) != 0) {
    throw std::invalid_argument("pair analysis requires s = 0");
  }
  if (cfg.r <= 0 || cfg.r >= chain.d) {
    throw std::invalid_argument("rank must satisfy 0 < r < d");
  }
  if (!axiom_report(chain).pass()) {
    throw std::invalid_argument("chain does not satisfy the linking axioms");
  }
}

int PairInvariants::zbar1_dim_ext(int i) const {
  int next = (i + 1 <= n) ? vbar1(i + 1).dim() : 0;
  return vbar1(i).dim() - next;
}

int PairInvariants::zbar_n_dim_ext(int i) const {
  int prev = (i - 1 >= 1) ? vbarn(i - 1).dim() : 0;
  return vbarn(i).dim() - prev;
}

std::vector<int> PointInvariants::stratum_key() const {
  std::vector<int> key;
  for (std::size_t k = 0; k < zi_dim.size(); ++k) {
    key.push_back(v1i_dim[k + 1]);
    key.push_back(vni_dim[k + 1]);
    key.push_back(zi_dim[k]);
  }
  return key;
}

PairAnalyzer::PairAnalyzer(LinkedChain chain, int r)
    : chain_(std::move(chain)), r_(r) {
  if (chain_.n <= 2) {
    throw std::invalid_argument("pair analysis requires chain length n > 2");
  }
  if (chain_.field.reduce(chain_.s) != 0) {
    throw std::invalid_argument("pair analysis requires s = 0");
  }
  if (r_ <= 0 || r_ >= chain_.d) {
    throw std::invalid_argument("rank must satisfy 0 < r < d");
  }
  if (!axiom_report(chain_).pass()) {
    throw std::invalid_argument("chain does not satisfy the linking axioms");
  }
  const int n = chain_.n;
  for (int i = 1; i <= n; ++i) {
    g_comp_.push_back(composite(chain_, MapKind::Backward, 1, i - 1));
    f_comp_.push_back(composite(chain_, MapKind::Forward, i, n - 1));
    img_g_.push_back(column_space(g_comp_.back()));
    img_f_.push_back(column_space(f_comp_.back()));
  }
  for (int i = 2; i <= n - 1; ++i) {
    joint_kernel_.push_back(kernel(vstack(g_comp_[i - 1], f_comp_[i - 1])));
  }
  ker_f1_dim_ = chain_.d - rank(chain_.forward(1));
  ker_gn1_dim_ = chain_.d - rank(chain_.backward(n - 1));
}

void PairAnalyzer::validate_ends(const Subspace& v1, const Subspace& vn) const {
  if (v1.ambient_dim() != chain_.d || vn.ambient_dim() != chain_.d ||
      v1.field() != chain_.field || vn.field() != chain_.field) {
    throw std::invalid_argument("end subspaces do not live in the chain spaces");
  }
  if (v1.dim() != r_ || vn.dim() != r_) {
    throw std::invalid_argument("end subspaces must have dimension r");
  }
}

bool PairAnalyzer::admissible(const Subspace& v1, const Subspace& vn) const {
  validate_ends(v1, vn);
  return vn.contains(image(f_comp(1), v1)) && v1.contains(image(g_comp(chain_.n), vn));
}

PairInvariants PairAnalyzer::invariants(const Subspace& v1,
                                        const Subspace& vn) const {
  if (!admissible(v1, vn)) {
    throw std::invalid_argument("pair is not admissible for this chain");
  }
  const PrimeField& f = chain_.field;
  const int n = chain_.n;
  const int d = chain_.d;

  PairInvariants inv;
  inv.n = n;
  inv.d = d;
  inv.r = r_;

  for (int i = 1; i <= n; ++i) {
    inv.vbar1_.push_back(intersect(v1, img_g(i)));
    inv.vbarn_.push_back(intersect(vn, img_f(i)));
  }
  inv.v1n_.push_back(image(g_comp(n), vn));
  inv.vn1_.push_back(image(f_comp(1), v1));

  for (int i = 1; i < n; ++i) {
    internal_check(inv.vbar1(i).contains(inv.vbar1(i + 1)),
                   "first filtration is not decreasing");
    internal_check(inv.vbarn(i + 1).contains(inv.vbarn(i)),
                   "second filtration is not increasing");
  }
  internal_check(inv.vbar1(n).contains(inv.v1n()), "v1n escapes filtration");
  internal_check(inv.vbarn(1).contains(inv.vn1()), "vn1 escapes filtration");

  for (int i = 2; i <= n - 1; ++i) {
    Subspace w =
        intersect(preimage(g_comp(i), v1), preimage(f_comp(i), vn));
    const Subspace& b1 = inv.vbar1(i);
    const Subspace& bn = inv.vbarn(i);
    std::vector<std::vector<std::uint32_t>> rows;
    for (int rrow = 0; rrow < w.dim(); ++rrow) {
      std::vector<std::uint32_t> wv = w.basis().row(rrow);
      std::vector<std::uint32_t> a = g_comp(i).apply(wv);
      std::vector<std::uint32_t> b = f_comp(i).apply(wv);
      internal_check(b1.contains_vector(a) && bn.contains_vector(b),
                     "middle space image escapes the filtration");
      std::vector<std::uint32_t> row = b1.coordinates(a);
      std::vector<std::uint32_t> cb = bn.coordinates(b);
      row.insert(row.end(), cb.begin(), cb.end());
      rows.push_back(std::move(row));
    }
    Subspace embedded =
        Subspace::span(Matrix::from_rows(f, rows, b1.dim() + bn.dim()));
    inv.zbar_.emplace_back(b1.dim() + bn.dim(), embedded);
    const Quotient& q = inv.zbar_.back();

    Matrix first_block(f, b1.dim(), b1.dim() + bn.dim());
    for (int k = 0; k < b1.dim(); ++k) first_block.at(k, k) = 1;
    Matrix second_block(f, bn.dim(), b1.dim() + bn.dim());
    for (int k = 0; k < bn.dim(); ++k) second_block.at(k, b1.dim() + k) = 1;
    inv.zbar1_.push_back(q.push(Subspace::span(first_block)));
    inv.zbarn_.push_back(q.push(Subspace::span(second_block)));
    internal_check(
        sum(inv.zbar1_.back(), inv.zbarn_.back()).dim() == q.target_dim(),
        "cokernel is not spanned by its two distinguished images");
    inv.zcap_dim_.push_back(
        intersect(inv.zbar1_.back(), inv.zbarn_.back()).dim());
    inv.ztilde_dim_.push_back(img_f(i).dim() + img_g(i).dim() - d);
  }

  for (int i = 2; i <= n - 1; ++i) {
    internal_check(inv.zbar1(i).dim() == inv.zbar1_dim_ext(i),
                   "graded piece mismatch on the first filtration");
    internal_check(inv.zbarn(i).dim() == inv.zbar_n_dim_ext(i),
                   "graded piece mismatch on the second filtration");
  }

  inv.ker_f1_dim_ = ker_f1_dim_;
  inv.ker_gn1_dim_ = ker_gn1_dim_;
  for (int i = 1; i <= n; ++i) {
    inv.img_g_dim_.push_back(i == 1 ? inv.vn1().dim() + ker_f1_dim_
                                    : img_g(i).dim());
    inv.img_f_dim_.push_back(i == n ? inv.v1n().dim() + ker_gn1_dim_
                                    : img_f(i).dim());
  }
  return inv;
}

void PairAnalyzer::validate_tuple(const std::vector<Subspace>& tuple) const {
  if (static_cast<int>(tuple.size()) != chain_.n) {
    throw std::invalid_argument("tuple length does not match chain length");
  }
  for (const Subspace& v : tuple) {
    if (v.ambient_dim() != chain_.d || v.dim() != r_) {
      throw std::invalid_argument("tuple member has the wrong dimensions");
    }
  }
  for (int i = 1; i <= chain_.n - 1; ++i) {
    if (!tuple[i].contains(image(chain_.forward(i), tuple[i - 1]))) {
      std::ostringstream os;
      os << "tuple is not linked: f_" << i << " image escapes V_" << i + 1;
      throw std::invalid_argument(os.str());
    }
    if (!tuple[i - 1].contains(image(chain_.backward(i), tuple[i]))) {
      std::ostringstream os;
      os << "tuple is not linked: g_" << i << " image escapes V_" << i;
      throw std::invalid_argument(os.str());
    }
  }
}

PointInvariants PairAnalyzer::point(const std::vector<Subspace>& tuple,
                                    const PairInvariants& inv) const {
  validate_tuple(tuple);
  if (!(tuple.front() == inv.vbar1(1)) ||
      !(tuple.back() == inv.vbarn(chain_.n))) {
    throw std::invalid_argument("tuple ends do not match the pair invariants");
  }
  PointInvariants out;
  const int n = chain_.n;
  for (int i = 1; i <= n; ++i) {
    out.v1i_dim.push_back(image(g_comp(i), tuple[i - 1]).dim());
    out.vni_dim.push_back(image(f_comp(i), tuple[i - 1]).dim());
  }
  for (int i = 2; i <= n - 1; ++i) {
    Subspace v1i = image(g_comp(i), tuple[i - 1]);
    Subspace vni = image(f_comp(i), tuple[i - 1]);
    Matrix rows = paired_coordinate_rows(inv.vbar1(i), inv.vbarn(i), v1i, vni);
    out.zi_dim.push_back(inv.zbar(i).push(Subspace::span(rows)).dim());
  }
  return out;
}

bool PairAnalyzer::middle_embeds_in_end_sum(
    const std::vector<Subspace>& tuple) const {
  validate_tuple(tuple);
  for (int i = 2; i <= chain_.n - 1; ++i) {
    if (intersect(joint_kernel_.at(i - 2), tuple[i - 1]).dim() != 0) {
      return false;
    }
  }
  return true;
}

bool PairAnalyzer::end_images_coincide(const std::vector<Subspace>& tuple,
                                       const PairInvariants& inv) const {
  validate_tuple(tuple);
  const PrimeField& f = chain_.field;
  for (int i = 2; i <= chain_.n - 1; ++i) {
    Subspace v1i = image(g_comp(i), tuple[i - 1]);
    Subspace vni = image(f_comp(i), tuple[i - 1]);
    const Subspace& b1 = inv.vbar1(i);
    const Subspace& bn = inv.vbarn(i);
    Subspace zero_block = Subspace::zero(f, chain_.d);
    Subspace push_left = inv.zbar(i).push(
        Subspace::span(paired_coordinate_rows(b1, bn, v1i, zero_block)));
    Subspace push_right = inv.zbar(i).push(
        Subspace::span(paired_coordinate_rows(b1, bn, zero_block, vni)));
    if (!(push_left == push_right)) return false;
    Subspace both = inv.zbar(i).push(
        Subspace::span(paired_coordinate_rows(b1, bn, v1i, vni)));
    if (!(push_left == both)) return false;
  }
  return true;
}

bool admissible(const PairConfig& cfg) {
  // a pure containment predicate: no chain validity is assumed here, only
  // compatible shapes
  const LinkedChain& chain = cfg.chain;
  if (cfg.r <= 0 || cfg.r >= chain.d) {
    throw std::invalid_argument("rank must satisfy 0 < r < d");
  }
  if (cfg.v1.ambient_dim() != chain.d || cfg.vn.ambient_dim() != chain.d ||
      cfg.v1.field() != chain.field || cfg.vn.field() != chain.field) {
    throw std::invalid_argument("end subspaces do not live in the chain spaces");
  }
  if (cfg.v1.dim() != cfg.r || cfg.vn.dim() != cfg.r) {
    throw std::invalid_argument("end subspaces must have dimension r");
  }
  Matrix fwd = composite(chain, MapKind::Forward, 1, chain.n - 1);
  Matrix bwd = composite(chain, MapKind::Backward, 1, chain.n - 1);
  return cfg.vn.contains(image(fwd, cfg.v1)) &&
         cfg.v1.contains(image(bwd, cfg.vn));
}

PairInvariants pair_invariants(const PairConfig& cfg) {
  PairAnalyzer analyzer(cfg.chain, cfg.r);
  return analyzer.invariants(cfg.v1, cfg.vn);
}

PointInvariants point_invariants(const LinkedChain& chain,
                                 const std::vector<Subspace>& tuple,
                                 const PairInvariants& inv) {
  PairAnalyzer analyzer(chain, inv.r);
  return analyzer.point(tuple, inv);
}

PointInvariants point_invariants(const LinkedChain& chain, int r,
                                 const std::vector<Subspace>& tuple) {
  PairAnalyzer analyzer(chain, r);
  PairInvariants inv = analyzer.invariants(tuple.front(), tuple.back());
  return analyzer.point(tuple, inv);
}

bool middle_embeds_in_end_sum(const LinkedChain& chain, int r,
                              const std::vector<Subspace>& tuple) {
  PairAnalyzer analyzer(chain, r);
  return analyzer.middle_embeds_in_end_sum(tuple);
}

bool end_images_coincide(const LinkedChain& chain, int r,
                         const std::vector<Subspace>& tuple) {
  PairAnalyzer analyzer(chain, r);
  PairInvariants inv = analyzer.invariants(tuple.front(), tuple.back());
  return analyzer.end_images_coincide(tuple, inv);
}

}  // namespace lg
