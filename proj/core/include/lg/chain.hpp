#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "lg/matrix.hpp"

namespace lg {

/// A chain of spaces E_1, ..., E_n of common dimension d over F_p with
/// forward maps f_i : E_i -> E_{i+1} and backward maps g_i : E_{i+1} -> E_i,
/// together with the scalar s of the defining product condition. The struct
/// itself is a plain carrier; validity is the business of axiom_report.
struct LinkedChain {
  PrimeField field;
  int d = 0;
  int n = 0;
  std::uint32_t s = 0;
  std::vector<Matrix> f;  // f[i-1] is f_i, i = 1..n-1
  std::vector<Matrix> g;  // g[i-1] is g_i

  const Matrix& forward(int i) const { return f.at(static_cast<std::size_t>(i) - 1); }
  const Matrix& backward(int i) const { return g.at(static_cast<std::size_t>(i) - 1); }
};

/// Explicit model: nested coordinate subsets S_1 <= ... <= S_{n-1} of
/// {1..d}. The chain takes f_i to be the coordinate projection onto S_i and
/// g_i the projection onto its complement, optionally conjugated by seeded
/// random invertible matrices (one per space), which preserves all axioms.
struct ChainSpec {
  std::uint32_t p = 2;
  int d = 0;
  int n = 0;
  std::vector<std::vector<int>> subsets;  // 1-based coordinates
  std::optional<std::uint64_t> seed;
};

LinkedChain make_nested_chain(const ChainSpec& spec);

enum class ChainAxiom {
  ScalarProduct,   // f_i g_i = g_i f_i = s * id
  RankComplement,  // at s = 0: rank f_i + rank g_i = d
  CompositeRank,   // rank(f_{i+1} f_i) = rank f_i, rank(g_i g_{i+1}) = rank g_{i+1}
};

std::string to_string(ChainAxiom a);

struct AxiomFailure {
  ChainAxiom axiom;
  int index;  // the i at which the condition failed
  std::string witness;
};

struct AxiomReport {
  bool scalar_product_ok = true;
  bool rank_complement_ok = true;
  bool composite_rank_ok = true;
  std::vector<AxiomFailure> failures;

  bool pass() const {
    return scalar_product_ok && rank_complement_ok && composite_rank_ok;
  }
};

/// Checks the three chain conditions at a field point. The rank forms of
/// the second and third conditions are the pointwise content of the
/// scheme-level statements; the second is vacuous when s != 0 (both maps
/// are then invertible).
AxiomReport axiom_report(const LinkedChain& chain);

enum class MapKind { Forward, Backward };

/// Composite map: Forward gives f_j ... f_i : E_i -> E_{j+1}; Backward
/// gives g_i ... g_j : E_{j+1} -> E_i. The empty composites (j = i - 1)
/// return the identity.
Matrix composite(const LinkedChain& chain, MapKind kind, int i, int j);

Matrix random_invertible(PrimeField field, int d, std::mt19937_64& rng);

/// Conjugates each E_i by a seeded random invertible change of basis:
/// f_i -> A_{i+1} f_i A_i^{-1}, g_i -> A_i g_i A_{i+1}^{-1}.
LinkedChain conjugate_chain(const LinkedChain& chain, std::uint64_t seed);

}  // namespace lg
