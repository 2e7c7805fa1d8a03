#include "lg/oracle.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

namespace lg {

namespace {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

void check_budget(const LinkedChain& chain, int r, const EnumBudget& budget) {
  std::uint64_t count = gaussian_binomial(chain.d, r, chain.field.p());
  if (count > budget.max_grassmannian_points) {
    std::ostringstream os;
    os << "a Grassmannian of " << count << " points exceeds the budget of "
       << budget.max_grassmannian_points;
    throw BudgetExceeded(os.str());
  }
}

void validate_enum_config(const LinkedChain& chain, int r) {
  if (r <= 0 || r >= chain.d) {
    throw std::invalid_argument("enumeration requires 0 < r < d");
  }
  if (chain.field.reduce(chain.s) != 0) {
    throw std::invalid_argument("enumeration requires s = 0");
  }
  if (!axiom_report(chain).pass()) {
    throw std::invalid_argument("chain does not satisfy the linking axioms");
  }
}

/// Depth-first extension of a partial tuple. The next space must contain
/// the forward image of the last one and map back into it; when the final
/// space is pinned it is checked instead of enumerated.
void extend_tuple(const LinkedChain& chain, int r,
                  std::vector<Subspace>& prefix, const Subspace* pinned_last,
                  const std::function<void(const std::vector<Subspace>&)>& emit) {
  const int chosen = static_cast<int>(prefix.size());
  if (chosen == chain.n) {
    emit(prefix);
    return;
  }
  const Matrix& f = chain.forward(chosen);
  const Matrix& g = chain.backward(chosen);
  Subspace forward_image = image(f, prefix.back());
  if (chosen + 1 == chain.n && pinned_last) {
    const Subspace& vn = *pinned_last;
    if (vn.contains(forward_image) && prefix.back().contains(image(g, vn))) {
      prefix.push_back(vn);
      emit(prefix);
      prefix.pop_back();
    }
    return;
  }
  SuperspaceEnumerator candidates(forward_image, r);
  while (auto cand = candidates.next()) {
    if (!prefix.back().contains(image(g, *cand))) continue;
    prefix.push_back(*cand);
    extend_tuple(chain, r, prefix, pinned_last, emit);
    prefix.pop_back();
  }
}

BigRat eval_poly(const std::vector<BigRat>& coeffs, const BigRat& x) {
  BigRat acc = 0;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    acc = acc * x + coeffs[k];
  }
  return acc;
}

}  // namespace

void walk_lg_points(const LinkedChain& chain, int r, const EnumBudget& budget,
                    const std::function<void(const std::vector<Subspace>&)>& fn) {
  validate_enum_config(chain, r);
  check_budget(chain, r, budget);
  SubspaceEnumerator first(chain.field, chain.d, r);
  std::vector<Subspace> prefix;
  prefix.reserve(chain.n);
  while (auto v1 = first.next()) {
    prefix.clear();
    prefix.push_back(*v1);
    extend_tuple(chain, r, prefix, nullptr, fn);
  }
}

std::vector<std::vector<Subspace>> enum_lg_points(const LinkedChain& chain,
                                                  int r,
                                                  const EnumBudget& budget) {
  std::vector<std::vector<Subspace>> out;
  walk_lg_points(chain, r, budget,
                 [&out](const std::vector<Subspace>& t) { out.push_back(t); });
  return out;
}

FiberResult enum_fiber(const PairAnalyzer& analyzer, const Subspace& v1,
                       const Subspace& vn, const EnumBudget& budget) {
  const LinkedChain& chain = analyzer.chain();
  check_budget(chain, analyzer.r(), budget);
  FiberResult result;
  if (!analyzer.admissible(v1, vn)) {
    result.status = FiberStatus::InadmissiblePair;
    result.diagnostic =
        "pair is inadmissible: an end image escapes the opposite end";
    return result;
  }
  std::vector<Subspace> prefix{v1};
  extend_tuple(chain, analyzer.r(), prefix, &vn,
               [&result](const std::vector<Subspace>& t) {
                 result.points.push_back(t);
               });
  return result;
}

FiberResult enum_fiber(const LinkedChain& chain, int r, const Subspace& v1,
                       const Subspace& vn, const EnumBudget& budget) {
  PairAnalyzer analyzer(chain, r);
  return enum_fiber(analyzer, v1, vn, budget);
}

FiberCensus stratify(const PairAnalyzer& analyzer, const PairInvariants& inv,
                     const std::vector<std::vector<Subspace>>& fiber) {
  FiberCensus census;
  for (const std::vector<Subspace>& tuple : fiber) {
    PointInvariants pi = analyzer.point(tuple, inv);
    ++census.counts[pi.stratum_key()];
    ++census.total;
  }
  return census;
}

std::uint64_t CountPolynomial::eval(std::uint64_t q) const {
  std::vector<BigRat> coeffs;
  for (const std::string& c : coefficients) coeffs.emplace_back(c);
  BigRat value = eval_poly(coeffs, BigRat(q));
  if (denominator(value) != 1 || value < 0) {
    throw std::domain_error("count polynomial value is not a natural number");
  }
  BigInt num = numerator(value);
  return num.convert_to<std::uint64_t>();
}

CountPolynomial fit_count_polynomial(
    const std::vector<std::pair<std::uint64_t, std::uint64_t>>& samples,
    std::optional<int> expected_degree) {
  if (samples.empty()) {
    throw std::invalid_argument("interpolation requires at least one sample");
  }
  CountPolynomial out;
  out.samples = samples;
  std::sort(out.samples.begin(), out.samples.end());
  for (std::size_t i = 1; i < out.samples.size(); ++i) {
    if (out.samples[i].first == out.samples[i - 1].first) {
      throw std::invalid_argument("interpolation requires distinct primes");
    }
  }
  const int m = static_cast<int>(out.samples.size());
  if (expected_degree && m < *expected_degree + 1) {
    std::ostringstream os;
    os << "need " << (*expected_degree + 1 - m) << " more primes";
    throw std::invalid_argument(os.str());
  }

  // Newton divided differences, then expansion to monomial coefficients.
  std::vector<BigRat> xs, dd;
  for (const auto& [q, count] : out.samples) {
    xs.emplace_back(q);
    dd.emplace_back(count);
  }
  for (int level = 1; level < m; ++level) {
    for (int i = m - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
    }
  }
  std::vector<BigRat> coeffs{dd[m - 1]};
  for (int j = m - 2; j >= 0; --j) {
    // coeffs <- coeffs * (x - xs[j]) + dd[j]
    std::vector<BigRat> next(coeffs.size() + 1, BigRat(0));
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      next[k + 1] += coeffs[k];
      next[k] -= coeffs[k] * xs[j];
    }
    next[0] += dd[j];
    coeffs = std::move(next);
  }
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();

  out.degree = static_cast<int>(coeffs.size()) - 1;
  out.exact_fit = out.degree <= m - 2;
  out.integer_coefficients = true;
  for (const BigRat& c : coeffs) {
    out.integer_coefficients =
        out.integer_coefficients && denominator(c) == 1;
    std::ostringstream os;
    os << c;
    out.coefficients.push_back(os.str());
  }
  for (const auto& [q, count] : out.samples) {
    if (eval_poly(coeffs, BigRat(q)) != BigRat(count)) {
      throw std::logic_error("interpolation failed to reproduce a sample");
    }
  }
  return out;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t model_seed(std::uint64_t base, int d, int n, int r,
                         const std::vector<int>& sizes, std::uint32_t p) {
  std::uint64_t h = base;
  h = splitmix64(h ^ static_cast<std::uint64_t>(d));
  h = splitmix64(h ^ static_cast<std::uint64_t>(n));
  h = splitmix64(h ^ static_cast<std::uint64_t>(r));
  for (int k : sizes) h = splitmix64(h ^ static_cast<std::uint64_t>(k + 1));
  h = splitmix64(h ^ p);
  return h;
}

std::vector<std::vector<int>> nested_size_profiles(int d, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(n - 1, 0);
  while (true) {
    out.push_back(cur);
    int i = n - 2;
    while (i >= 0 && cur[i] == d) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j <= n - 2; ++j) cur[j] = cur[i];
    // keep sequences non-decreasing; the reset above already ensures it
  }
  return out;
}

ChainSpec spec_for_model(int d, int n, const std::vector<int>& sizes,
                         std::uint32_t p, std::optional<std::uint64_t> seed,
                         int r) {
  ChainSpec spec;
  spec.p = p;
  spec.d = d;
  spec.n = n;
  for (int k : sizes) {
    std::vector<int> subset;
    for (int c = 1; c <= k; ++c) subset.push_back(c);
    spec.subsets.push_back(std::move(subset));
  }
  if (seed) spec.seed = model_seed(*seed, d, n, r, sizes, p);
  return spec;
}

std::string stratum_key_string(const std::vector<int>& key) {
  std::ostringstream os;
  for (std::size_t k = 0; k < key.size(); k += 3) {
    if (k) os << ';';
    os << key[k] << ',' << key[k + 1] << ',' << key[k + 2];
  }
  return os.str();
}

std::string model_label(const ModelFinding& m) {
  std::ostringstream os;
  os << "model d=" << m.d << " n=" << m.n << " r=" << m.r << " sizes=";
  for (std::size_t k = 0; k < m.sizes.size(); ++k) {
    os << (k ? "," : "") << m.sizes[k];
  }
  return os.str();
}

/// Enumerates every interior dimension vector with entries in [0, r].
std::vector<std::vector<int>> all_stratum_keys(int n, int r) {
  const int len = 3 * (n - 2);
  std::vector<std::vector<int>> out;
  std::vector<int> cur(len, 0);
  while (true) {
    out.push_back(cur);
    int i = len - 1;
    while (i >= 0 && cur[i] == r) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < len; ++j) cur[j] = 0;
  }
  return out;
}

struct ProfileData {
  PairLocusSpec profile;
  std::map<std::uint32_t, std::uint64_t> pair_count;
  std::map<std::uint32_t, FiberCensus> census;  // representative, per prime
};

StratumReport predicted_report(const PairLocusSpec& profile,
                               const StratumSpec& spec,
                               const VerifyHooks& hooks) {
  StratumReport rep = stratum_report(profile, spec);
  if (hooks.flip_min_rank_condition) {
    bool nonempty = true;
    for (auto& cond : rep.conditions) {
      cond.ok[3] = !cond.ok[3];
      nonempty = nonempty && cond.all();
    }
    rep.nonempty = nonempty;
  }
  return rep;
}

ModelFinding verify_model(int d, int n, int r, const std::vector<int>& sizes,
                          const VerifyOptions& opt, const VerifyHooks& hooks) {
  ModelFinding out;
  out.d = d;
  out.n = n;
  out.r = r;
  out.sizes = sizes;

  std::map<std::vector<int>, ProfileData> buckets;

  for (std::uint32_t p : opt.primes) {
    std::uint64_t grassmannian = 0;
    try {
      grassmannian = gaussian_binomial(d, r, p);
    } catch (const std::overflow_error&) {
      grassmannian = UINT64_MAX;
    }
    if (grassmannian > opt.budget.max_grassmannian_points) {
      out.truncated = true;
      std::ostringstream os;
      os << "prime " << p << " refused: Grassmannian of " << grassmannian
         << " points exceeds the budget";
      out.truncation_reason = os.str();
      continue;
    }
    LinkedChain chain =
        make_nested_chain(spec_for_model(d, n, sizes, p, opt.seed, r));
    PairAnalyzer analyzer(chain, r);

    std::uint64_t global_count = 0;
    walk_lg_points(chain, r, opt.budget,
                   [&global_count](const std::vector<Subspace>&) {
                     ++global_count;
                   });
    out.lg_count[p] = global_count;

    std::vector<Subspace> all;
    for_each_subspace(chain.field, d, r,
                      [&all](const Subspace& s) { all.push_back(s); });

    std::uint64_t fiber_sum = 0;
    for (const Subspace& v1 : all) {
      for (const Subspace& vn : all) {
        if (!analyzer.admissible(v1, vn)) continue;
        PairInvariants inv = analyzer.invariants(v1, vn);
        PairLocusSpec profile = PairLocusSpec::from_invariants(inv);
        FiberResult fiber = enum_fiber(analyzer, v1, vn, opt.budget);
        FiberCensus census = stratify(analyzer, inv, fiber.points);
        fiber_sum += census.total;
        std::vector<int> key = profile.flatten();
        auto [it, inserted] = buckets.try_emplace(key);
        if (inserted) it->second.profile = profile;
        ++it->second.pair_count[p];
        auto [cit, fresh] = it->second.census.try_emplace(p, census);
        if (!fresh && (cit->second.counts != census.counts ||
                       cit->second.total != census.total)) {
          out.failures.push_back(
              model_label(out) + " p=" + std::to_string(p) +
              ": two pairs with identical numeric profiles produced "
              "different fiber censuses");
        }
      }
    }
    if (fiber_sum != global_count) {
      std::ostringstream os;
      os << model_label(out) << " p=" << p << ": fibers sum to " << fiber_sum
         << " but the global walk found " << global_count << " points";
      out.failures.push_back(os.str());
    }
  }

  // fit of the total count
  {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> samples;
    for (const auto& [p, c] : out.lg_count) samples.emplace_back(p, c);
    if (samples.size() >= 2) {
      CountPolynomial fit = fit_count_polynomial(samples);
      out.lg_degree = fit.degree;
      out.lg_exact_fit = fit.exact_fit;
      long long expected = static_cast<long long>(r) * (d - r);
      if (fit.exact_fit && fit.degree >= 0 && fit.degree != expected) {
        std::ostringstream os;
        os << model_label(out) << ": total count degree " << fit.degree
           << " != r(d-r) = " << expected;
        out.failures.push_back(os.str());
      }
    }
  }

  const std::vector<std::vector<int>> keys = all_stratum_keys(n, r);

  // per-profile analysis
  std::map<std::vector<int>, std::set<std::vector<int>>> unwitnessed;
  for (auto& [flat, data] : buckets) {
    ProfileFinding pf;
    pf.profile = data.profile;
    pf.pair_count = data.pair_count;
    pf.bound = fiber_bound(data.profile);
    PairLocusReport locus = pair_locus_report(data.profile);
    pf.locus_nonempty = locus.nonempty;
    pf.locus_dim = locus.dimension;
    if (!locus.valid) {
      out.failures.push_back(model_label(out) +
                             ": realized profile rejected as invalid: " +
                             locus.invalid_reason);
    } else {
      if (!locus.nonempty) {
        out.failures.push_back(
            model_label(out) +
            ": realized profile fails the pair-locus conditions");
      }
      long long expected = static_cast<long long>(r) * (d - r);
      if (pf.bound + locus.dimension != expected) {
        std::ostringstream os;
        os << model_label(out) << ": fiber bound " << pf.bound
           << " plus pair locus dimension " << locus.dimension
           << " != r(d-r) = " << expected;
        out.failures.push_back(os.str());
      }
    }

    for (const auto& [p, census] : data.census) {
      pf.fiber_count[p] = census.total;
    }
    {
      std::vector<std::pair<std::uint64_t, std::uint64_t>> samples;
      for (const auto& [p, c] : pf.fiber_count) samples.emplace_back(p, c);
      if (samples.size() >= 2) {
        CountPolynomial fit = fit_count_polynomial(samples);
        pf.fiber_degree = fit.degree;
        pf.fiber_exact_fit = fit.exact_fit;
        // degree -1 is the empty fiber, below every bound
        if (fit.exact_fit && fit.degree >= 0 && fit.degree > pf.bound) {
          std::ostringstream os;
          os << model_label(out) << ": fiber count degree " << fit.degree
             << " exceeds the fiber bound " << pf.bound;
          out.failures.push_back(os.str());
        }
      }
    }

    for (const std::vector<int>& key : keys) {
      StratumFinding sf;
      sf.key = key;
      StratumSpec spec = StratumSpec::from_key(key, n, r);
      StratumReport rep = predicted_report(data.profile, spec, hooks);
      sf.predicted_nonempty = rep.nonempty;
      sf.predicted_dim = rep.dimension;
      for (const auto& [p, census] : data.census) {
        auto it = census.counts.find(key);
        sf.counts[p] = it == census.counts.end() ? 0 : it->second;
        if (sf.witness_prime == 0 && sf.counts[p] > 0) sf.witness_prime = p;
      }
      if (!rep.nonempty) {
        if (sf.witness_prime != 0) {
          std::ostringstream os;
          os << model_label(out) << ": stratum " << stratum_key_string(key)
             << " predicted empty but witnessed at p=" << sf.witness_prime;
          out.failures.push_back(os.str());
          sf.verdict = "empty-violated";
        } else {
          sf.verdict = "empty-confirmed";
        }
        pf.strata.push_back(std::move(sf));
        continue;
      }
      std::vector<std::pair<std::uint64_t, std::uint64_t>> samples;
      for (const auto& [p, c] : sf.counts) samples.emplace_back(p, c);
      if (samples.size() >= 2) {
        CountPolynomial fit = fit_count_polynomial(samples);
        sf.degree = fit.degree;
        sf.exact_fit = fit.exact_fit;
      }
      if (sf.witness_prime == 0) {
        unwitnessed[flat].insert(key);
        sf.verdict = "unwitnessed";  // may be upgraded by escalation
      } else {
        if (sf.exact_fit) {
          if (sf.degree != rep.dimension) {
            std::ostringstream os;
            os << model_label(out) << ": stratum " << stratum_key_string(key)
               << " count degree " << sf.degree
               << " != predicted dimension " << rep.dimension;
            out.failures.push_back(os.str());
            sf.verdict = "degree-mismatch";
          } else {
            sf.verdict = "witnessed-degree-match";
          }
          if (sf.degree > pf.bound) {
            std::ostringstream os;
            os << model_label(out) << ": stratum " << stratum_key_string(key)
               << " count degree " << sf.degree
               << " exceeds the fiber bound " << pf.bound;
            out.failures.push_back(os.str());
          }
        } else {
          sf.verdict = "witnessed-no-fit";
        }
        if (rep.dimension > pf.bound) {
          std::ostringstream os;
          os << model_label(out) << ": realized stratum "
             << stratum_key_string(key) << " has predicted dimension "
             << rep.dimension << " above the fiber bound " << pf.bound;
          out.failures.push_back(os.str());
        }
      }
      pf.strata.push_back(std::move(sf));
    }
    out.profiles.push_back(std::move(pf));
  }

  // hunt for witnesses of the still-unseen strata over larger primes
  for (std::uint32_t p : opt.escalation_primes) {
    if (unwitnessed.empty()) break;
    std::uint64_t grassmannian = 0;
    try {
      grassmannian = gaussian_binomial(d, r, p);
    } catch (const std::overflow_error&) {
      grassmannian = UINT64_MAX;
    }
    if (grassmannian > opt.budget.max_grassmannian_points) {
      out.warnings.push_back("escalation prime " + std::to_string(p) +
                             " refused by the budget");
      continue;
    }
    LinkedChain chain =
        make_nested_chain(spec_for_model(d, n, sizes, p, opt.seed, r));
    PairAnalyzer analyzer(chain, r);
    std::vector<Subspace> all;
    for_each_subspace(chain.field, d, r,
                      [&all](const Subspace& s) { all.push_back(s); });
    for (const Subspace& v1 : all) {
      if (unwitnessed.empty()) break;
      for (const Subspace& vn : all) {
        if (unwitnessed.empty()) break;
        if (!analyzer.admissible(v1, vn)) continue;
        PairInvariants inv = analyzer.invariants(v1, vn);
        std::vector<int> flat = PairLocusSpec::from_invariants(inv).flatten();
        auto it = unwitnessed.find(flat);
        if (it == unwitnessed.end()) continue;
        FiberResult fiber = enum_fiber(analyzer, v1, vn, opt.budget);
        FiberCensus census = stratify(analyzer, inv, fiber.points);
        for (auto kit = it->second.begin(); kit != it->second.end();) {
          auto cit = census.counts.find(*kit);
          if (cit != census.counts.end() && cit->second > 0) {
            for (ProfileFinding& pf : out.profiles) {
              if (pf.profile.flatten() != flat) continue;
              for (StratumFinding& sf : pf.strata) {
                if (sf.key == *kit) {
                  sf.witness_prime = p;
                  sf.verdict = "witnessed-by-escalation";
                }
              }
            }
            kit = it->second.erase(kit);
          } else {
            ++kit;
          }
        }
        if (it->second.empty()) unwitnessed.erase(it);
      }
    }
  }

  for (const auto& [flat, keys_left] : unwitnessed) {
    for (const std::vector<int>& key : keys_left) {
      std::ostringstream os;
      os << model_label(out) << ": stratum " << stratum_key_string(key)
         << " predicted non-empty but never witnessed (profile ";
      const std::vector<int>& f = flat;
      for (std::size_t k = 0; k < f.size(); ++k) os << (k ? "," : "") << f[k];
      os << ")";
      out.warnings.push_back(os.str());
    }
  }
  return out;
}

}  // namespace

VerificationReport verify_configuration(const VerifyOptions& options,
                                        const VerifyHooks& hooks) {
  for (std::uint32_t p : options.primes) {
    if (!is_prime(p)) {
      throw std::invalid_argument("census list contains a non-prime");
    }
  }
  for (std::uint32_t p : options.escalation_primes) {
    if (!is_prime(p)) {
      throw std::invalid_argument("escalation list contains a non-prime");
    }
  }
  if (options.primes.empty()) {
    throw std::invalid_argument("at least one census prime is required");
  }
  VerificationReport report;
  report.options = options;
  for (int d = 2; d <= options.max_d; ++d) {
    for (int n = 3; n <= options.max_n; ++n) {
      for (int r = 1; r <= std::min(options.max_r, d - 1); ++r) {
        for (const std::vector<int>& sizes : nested_size_profiles(d, n)) {
          report.models.push_back(
              verify_model(d, n, r, sizes, options, hooks));
        }
      }
    }
  }
  VerificationSummary& s = report.summary;
  s.models = report.models.size();
  for (const ModelFinding& m : report.models) {
    s.profiles += m.profiles.size();
    for (const ProfileFinding& pf : m.profiles) {
      for (const StratumFinding& sf : pf.strata) {
        if (sf.predicted_nonempty) {
          ++s.strata_nonempty;
        } else {
          ++s.strata_empty;
        }
        if (sf.verdict == "unwitnessed") {
          s.unwitnessed.push_back(model_label(m) + " stratum " +
                                  stratum_key_string(sf.key));
        }
      }
    }
    s.failures += m.failures.size();
    s.warnings += m.warnings.size();
    for (const std::string& f : m.failures) s.failure_messages.push_back(f);
  }
  return report;
}

}  // namespace lg
