#include "lg/chain.hpp"

#include <algorithm>
#include <sstream>

namespace lg {

std::string to_string(ChainAxiom a) {
  switch (a) {
    case ChainAxiom::ScalarProduct:
      return "scalar-product";
    case ChainAxiom::RankComplement:
      return "rank-complement";
    case ChainAxiom::CompositeRank:
      return "composite-rank";
  }
  return "?";
}

LinkedChain make_nested_chain(const ChainSpec& spec) {
  PrimeField field(spec.p);
  if (spec.d < 1) throw std::invalid_argument("chain dimension must be >= 1");
  if (spec.n < 2) throw std::invalid_argument("chain length must be >= 2");
  if (static_cast<int>(spec.subsets.size()) != spec.n - 1) {
    throw std::invalid_argument("nested model needs exactly n-1 subsets");
  }
  std::vector<std::vector<bool>> member(spec.subsets.size(),
                                        std::vector<bool>(spec.d + 1, false));
  for (std::size_t k = 0; k < spec.subsets.size(); ++k) {
    for (int c : spec.subsets[k]) {
      if (c < 1 || c > spec.d) {
        std::ostringstream os;
        os << "subset " << k + 1 << " mentions coordinate " << c
           << " outside 1.." << spec.d;
        throw std::invalid_argument(os.str());
      }
      member[k][c] = true;
    }
  }
  for (std::size_t k = 0; k + 1 < member.size(); ++k) {
    for (int c = 1; c <= spec.d; ++c) {
      if (member[k][c] && !member[k + 1][c]) {
        std::ostringstream os;
        os << "subsets are not nested at index " << k + 2 << ": coordinate "
           << c << " is in S_" << k + 1 << " but not in S_" << k + 2;
        throw std::invalid_argument(os.str());
      }
    }
  }
  LinkedChain chain{field, spec.d, spec.n, 0, {}, {}};
  for (std::size_t k = 0; k < member.size(); ++k) {
    Matrix fk(field, spec.d, spec.d);
    Matrix gk(field, spec.d, spec.d);
    for (int c = 1; c <= spec.d; ++c) {
      if (member[k][c]) {
        fk.at(c - 1, c - 1) = 1;
      } else {
        gk.at(c - 1, c - 1) = 1;
      }
    }
    chain.f.push_back(std::move(fk));
    chain.g.push_back(std::move(gk));
  }
  if (spec.seed) return conjugate_chain(chain, *spec.seed);
  return chain;
}

AxiomReport axiom_report(const LinkedChain& chain) {
  AxiomReport report;
  const int d = chain.d;
  auto fail = [&report](ChainAxiom a, int i, std::string w) {
    report.failures.push_back({a, i, std::move(w)});
    switch (a) {
      case ChainAxiom::ScalarProduct:
        report.scalar_product_ok = false;
        break;
      case ChainAxiom::RankComplement:
        report.rank_complement_ok = false;
        break;
      case ChainAxiom::CompositeRank:
        report.composite_rank_ok = false;
        break;
    }
  };

  for (int i = 1; i <= chain.n - 1; ++i) {
    Matrix fg = chain.forward(i) * chain.backward(i);
    Matrix gf = chain.backward(i) * chain.forward(i);
    std::uint32_t s = chain.field.reduce(chain.s);
    if (!fg.is_scalar(s)) {
      fail(ChainAxiom::ScalarProduct, i, "f_i g_i != s*id: " + fg.to_string());
    }
    if (!gf.is_scalar(s)) {
      fail(ChainAxiom::ScalarProduct, i, "g_i f_i != s*id: " + gf.to_string());
    }
  }

  if (chain.field.reduce(chain.s) == 0) {
    for (int i = 1; i <= chain.n - 1; ++i) {
      int rf = rank(chain.forward(i));
      int rg = rank(chain.backward(i));
      if (rf + rg != d) {
        std::ostringstream os;
        os << "rank f_" << i << " + rank g_" << i << " = " << rf << " + " << rg
           << " != " << d;
        fail(ChainAxiom::RankComplement, i, os.str());
      }
    }
  }

  for (int i = 1; i <= chain.n - 2; ++i) {
    int rf = rank(chain.forward(i));
    int rff = rank(chain.forward(i + 1) * chain.forward(i));
    if (rff != rf) {
      std::ostringstream os;
      os << "rank(f_" << i + 1 << " f_" << i << ") = " << rff
         << " != rank f_" << i << " = " << rf;
      fail(ChainAxiom::CompositeRank, i, os.str());
    }
    int rg = rank(chain.backward(i + 1));
    int rgg = rank(chain.backward(i) * chain.backward(i + 1));
    if (rgg != rg) {
      std::ostringstream os;
      os << "rank(g_" << i << " g_" << i + 1 << ") = " << rgg
         << " != rank g_" << i + 1 << " = " << rg;
      fail(ChainAxiom::CompositeRank, i, os.str());
    }
  }
  return report;
}

Matrix composite(const LinkedChain& chain, MapKind kind, int i, int j) {
  if (j == i - 1) return Matrix::identity(chain.field, chain.d);
  if (i < 1 || j > chain.n - 1 || i > j) {
    throw std::invalid_argument("composite indices out of range");
  }
  Matrix acc = (kind == MapKind::Forward) ? chain.forward(i) : chain.backward(j);
  if (kind == MapKind::Forward) {
    for (int k = i + 1; k <= j; ++k) acc = chain.forward(k) * acc;
  } else {
    for (int k = j - 1; k >= i; --k) acc = chain.backward(k) * acc;
  }
  return acc;
}

Matrix random_invertible(PrimeField field, int d, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> dist(0, field.p() - 1);
  while (true) {
    Matrix m(field, d, d);
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) m.at(r, c) = dist(rng);
    if (rank(m) == d) return m;
  }
}

LinkedChain conjugate_chain(const LinkedChain& chain, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Matrix> a;
  std::vector<Matrix> a_inv;
  a.reserve(chain.n);
  for (int i = 0; i < chain.n; ++i) {
    a.push_back(random_invertible(chain.field, chain.d, rng));
    a_inv.push_back(inverse(a.back()));
  }
  LinkedChain out{chain.field, chain.d, chain.n, chain.s, {}, {}};
  for (int i = 1; i <= chain.n - 1; ++i) {
    out.f.push_back(a[i] * chain.forward(i) * a_inv[i - 1]);
    out.g.push_back(a[i - 1] * chain.backward(i) * a_inv[i]);
  }
  return out;
}

}  // namespace lg
