#include "lg/strata.hpp"

#include <sstream>

namespace lg {

StratumSpec StratumSpec::parse(const std::string& text, int n, int r) {
  StratumSpec spec;
  spec.n = n;
  spec.r = r;
  std::stringstream blocks(text);
  std::string block;
  while (std::getline(blocks, block, ';')) {
    if (block.empty()) continue;
    std::stringstream items(block);
    std::string item;
    std::vector<int> triple;
    while (std::getline(items, item, ',')) triple.push_back(std::stoi(item));
    if (triple.size() != 3) {
      throw std::invalid_argument(
          "stratum spec blocks must be triples dV1,dVn,dZ");
    }
    spec.dv1.push_back(triple[0]);
    spec.dvn.push_back(triple[1]);
    spec.dz.push_back(triple[2]);
  }
  if (static_cast<int>(spec.dv1.size()) != n - 2) {
    std::ostringstream os;
    os << "stratum spec needs " << n - 2 << " triples, got " << spec.dv1.size();
    throw std::invalid_argument(os.str());
  }
  for (int k = 0; k < n - 2; ++k) {
    if (spec.dv1[k] < 0 || spec.dv1[k] > r || spec.dvn[k] < 0 ||
        spec.dvn[k] > r || spec.dz[k] < 0 || spec.dz[k] > r) {
      throw std::invalid_argument("stratum spec entries must lie in [0, r]");
    }
  }
  return spec;
}

std::vector<int> StratumSpec::key() const {
  std::vector<int> key;
  for (int k = 0; k < interior(); ++k) {
    key.push_back(dv1[k]);
    key.push_back(dvn[k]);
    key.push_back(dz[k]);
  }
  return key;
}

StratumSpec StratumSpec::from_key(const std::vector<int>& key, int n, int r) {
  if (static_cast<int>(key.size()) != 3 * (n - 2)) {
    throw std::invalid_argument("stratum key has the wrong length");
  }
  StratumSpec spec;
  spec.n = n;
  spec.r = r;
  for (int k = 0; k < n - 2; ++k) {
    spec.dv1.push_back(key[3 * k]);
    spec.dvn.push_back(key[3 * k + 1]);
    spec.dz.push_back(key[3 * k + 2]);
  }
  return spec;
}

StratumReport stratum_report(const PairLocusSpec& profile,
                             const StratumSpec& spec) {
  if (spec.n != profile.n || spec.r != profile.r ||
      static_cast<int>(spec.dv1.size()) != profile.n - 2 ||
      static_cast<int>(spec.dvn.size()) != profile.n - 2 ||
      static_cast<int>(spec.dz.size()) != profile.n - 2) {
    throw std::invalid_argument("stratum spec does not match the pair");
  }
  const int n = profile.n;
  const long long r = profile.r;

  // prescribed dims with the boundary conventions: dv1[n] is the dimension
  // of the backward end image, dvn[1] of the forward end image
  auto dv1 = [&](int i) -> long long {
    if (i == n) return profile.dv1n;
    return spec.dv1.at(i - 2);
  };
  auto dvn = [&](int i) -> long long {
    if (i == 1) return profile.dvn1;
    return spec.dvn.at(i - 2);
  };
  auto dz = [&](int i) -> long long { return spec.dz.at(i - 2); };

  StratumReport report;
  report.conditions.assign(n - 2, StratumConditions{});
  long long dimension = 0;
  bool nonempty = true;
  for (int i = 2; i <= n - 1; ++i) {
    StratumConditions& c = report.conditions[i - 2];
    long long zcap = profile.dzcap(i);
    long long vbar1_next = profile.dvbar1.at(i);      // dim at index i+1
    long long vbarn_prev = profile.dvbarn.at(i - 2);  // dim at index i-1
    c.ok[0] = dz(i) <= zcap;
    c.ok[1] = vbar1_next >= dv1(i) - dz(i) && dv1(i) - dz(i) >= dv1(i + 1);
    c.ok[2] = vbarn_prev >= dvn(i) - dz(i) && dvn(i) - dz(i) >= dvn(i - 1);
    c.ok[3] = dv1(i) + dvn(i) - dz(i) >= r;
    c.ok[4] = r >= dv1(i + 1) + dvn(i);
    c.ok[5] = r >= dv1(i) + dvn(i - 1);
    nonempty = nonempty && c.all();

    dimension += dz(i) * (zcap - dz(i));
    dimension += (dv1(i) - dv1(i + 1)) * (vbar1_next - dv1(i) + dz(i));
    dimension += (dvn(i) - dvn(i - 1)) * (vbarn_prev - dvn(i) + dz(i));
    dimension +=
        (r - dv1(i + 1) - dvn(i - 1)) * (dv1(i) + dvn(i) - dz(i) - r);
  }
  report.nonempty = nonempty;
  report.dimension = dimension;
  return report;
}

StratumReport stratum_report(const PairInvariants& inv,
                             const StratumSpec& spec) {
  return stratum_report(PairLocusSpec::from_invariants(inv), spec);
}

PairLocusSpec PairLocusSpec::from_invariants(const PairInvariants& inv) {
  PairLocusSpec spec;
  spec.n = inv.n;
  spec.r = inv.r;
  spec.d = inv.d;
  for (int i = 1; i <= inv.n; ++i) {
    spec.dvbar1.push_back(inv.vbar1(i).dim());
    spec.dvbarn.push_back(inv.vbarn(i).dim());
    spec.dimg_g.push_back(inv.img_g_dim(i));
    spec.dimg_f.push_back(inv.img_f_dim(i));
  }
  for (int i = 2; i <= inv.n - 1; ++i) {
    spec.dzbar.push_back(inv.zbar_dim(i));
    spec.dztilde.push_back(inv.ztilde_dim(i));
  }
  spec.dv1n = inv.v1n().dim();
  spec.dvn1 = inv.vn1().dim();
  spec.dker_f1 = inv.ker_f1_dim();
  spec.dker_gn1 = inv.ker_gn1_dim();
  return spec;
}

int PairLocusSpec::dzbar1(int i) const {
  int cur = dvbar1.at(i - 1);
  int next = (i + 1 <= n) ? dvbar1.at(i) : 0;
  return cur - next;
}

int PairLocusSpec::dzbarn(int i) const {
  int cur = dvbarn.at(i - 1);
  int prev = (i - 1 >= 1) ? dvbarn.at(i - 2) : 0;
  return cur - prev;
}

int PairLocusSpec::dzcap(int i) const {
  return dzbar1(i) + dzbarn(i) - dzbar.at(i - 2);
}

std::vector<int> PairLocusSpec::flatten() const {
  std::vector<int> v{n, r, d, dv1n, dvn1, dker_f1, dker_gn1};
  v.insert(v.end(), dvbar1.begin(), dvbar1.end());
  v.insert(v.end(), dvbarn.begin(), dvbarn.end());
  v.insert(v.end(), dzbar.begin(), dzbar.end());
  v.insert(v.end(), dimg_g.begin(), dimg_g.end());
  v.insert(v.end(), dimg_f.begin(), dimg_f.end());
  v.insert(v.end(), dztilde.begin(), dztilde.end());
  return v;
}

PairLocusReport pair_locus_report(const PairLocusSpec& spec) {
  PairLocusReport report;
  const int n = spec.n;
  if (static_cast<int>(spec.dvbar1.size()) != n ||
      static_cast<int>(spec.dvbarn.size()) != n ||
      static_cast<int>(spec.dimg_g.size()) != n ||
      static_cast<int>(spec.dimg_f.size()) != n ||
      static_cast<int>(spec.dzbar.size()) != n - 2 ||
      static_cast<int>(spec.dztilde.size()) != n - 2) {
    throw std::invalid_argument("pair locus spec has inconsistent lengths");
  }
  if (spec.dvbar1.front() != spec.r || spec.dvbarn.back() != spec.r) {
    report.valid = false;
    report.invalid_reason = "end filtration members must have dimension r";
    return report;
  }
  for (int i = 1; i <= n; ++i) {
    if (spec.dzbar1(i) < 0 || spec.dzbarn(i) < 0) {
      report.valid = false;
      report.invalid_reason = "a graded piece has negative dimension";
      return report;
    }
  }
  for (int i = 2; i <= n - 1; ++i) {
    if (spec.dzcap(i) < 0) {
      report.valid = false;
      report.invalid_reason =
          "the intersection of the cokernel images has negative dimension";
      return report;
    }
  }

  auto& c = report.conditions;
  c.fill(true);
  for (int i = 2; i <= n - 1; ++i) {
    long long z1 = spec.dzbar1(i), zn = spec.dzbarn(i);
    long long zc = spec.dzcap(i), zt = spec.dztilde.at(i - 2);
    c[0] = c[0] && (zc <= z1 && z1 <= zt);
    c[1] = c[1] && (zc <= zn && zn <= zt);
    c[2] = c[2] && (z1 + zn <= zt + zc);
    c[5] = c[5] && (spec.dvbar1.at(i) <= spec.dvbar1.at(i - 1) &&
                    spec.dvbar1.at(i - 1) <= spec.dimg_g.at(i - 1) + z1 - zt);
    c[6] = c[6] && (spec.dvbarn.at(i - 2) <= spec.dvbarn.at(i - 1) &&
                    spec.dvbarn.at(i - 1) <= spec.dimg_f.at(i - 1) + zn - zt);
  }
  c[3] = spec.dvn1 <= spec.dvbarn.front() &&
         spec.dvbarn.front() <= spec.dimg_f.front();
  c[4] = spec.dv1n <= spec.dvbar1.back() &&
         spec.dvbar1.back() <= spec.dimg_g.back();
  c[7] = spec.dvbar1.at(1) + spec.dvn1 <= spec.dvbar1.at(0) &&
         spec.dvbar1.at(0) <= spec.dimg_g.at(0);
  c[8] = spec.dvbarn.at(n - 2) + spec.dv1n <= spec.dvbarn.at(n - 1) &&
         spec.dvbarn.at(n - 1) <= spec.dimg_f.at(n - 1);

  report.nonempty = true;
  for (bool ok : c) report.nonempty = report.nonempty && ok;

  long long dimension = 0;
  for (int i = 1; i <= n; ++i) {
    dimension += static_cast<long long>(spec.dzbar1(i)) *
                 (spec.dimg_g.at(i - 1) - spec.dvbar1.at(i - 1));
    dimension += static_cast<long long>(spec.dzbarn(i)) *
                 (spec.dimg_f.at(i - 1) - spec.dvbarn.at(i - 1));
  }
  dimension += static_cast<long long>(spec.dv1n) *
               (spec.dvbar1.back() - spec.dv1n);
  dimension += static_cast<long long>(spec.dvn1) *
               (spec.dvbarn.front() - spec.dvn1);
  for (int i = 2; i <= n - 1; ++i) {
    dimension -= static_cast<long long>(spec.dzcap(i)) *
                 (spec.dztilde.at(i - 2) - spec.dzbar.at(i - 2));
  }
  report.dimension = dimension;
  return report;
}

long long fiber_bound(const PairLocusSpec& spec) {
  const int n = spec.n;
  long long bound = static_cast<long long>(spec.r) * (spec.d - spec.r);
  bound -= static_cast<long long>(spec.dv1n) * (spec.dvbar1.back() - spec.dv1n);
  bound -= static_cast<long long>(spec.dvn1) * (spec.dvbarn.front() - spec.dvn1);
  for (int i = 2; i <= n - 1; ++i) {
    bound += static_cast<long long>(spec.dzcap(i)) *
             (spec.dztilde.at(i - 2) - spec.dzbar.at(i - 2));
  }
  for (int i = 1; i <= n; ++i) {
    bound -= static_cast<long long>(spec.dzbar1(i)) *
             (spec.dimg_g.at(i - 1) - spec.dvbar1.at(i - 1));
    bound -= static_cast<long long>(spec.dzbarn(i)) *
             (spec.dimg_f.at(i - 1) - spec.dvbarn.at(i - 1));
  }
  return bound;
}

long long fiber_bound(const PairInvariants& inv) {
  return fiber_bound(PairLocusSpec::from_invariants(inv));
}

}  // namespace lg
