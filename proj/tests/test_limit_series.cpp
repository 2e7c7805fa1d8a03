#include <doctest.h>

#include <random>

#include "lg/limit_series.hpp"
#include "oracle_helpers.hpp"

using namespace lg;

namespace {

EHPair pair_of(int r, int d, std::vector<int> ay, std::vector<int> az,
               int gy = 0, int gz = 0) {
  EHPair pair;
  pair.r = r;
  pair.d = d;
  pair.gy = gy;
  pair.gz = gz;
  pair.ay.a = std::move(ay);
  pair.az.a = std::move(az);
  validate_eh_pair(pair);
  return pair;
}

}  // namespace

TEST_CASE("expected dimension arithmetic") {
  CHECK(rho(0, 1, 2, {}) == 2);
  CHECK(rho(0, 1, 3, {{0, 1}, {0, 1}, {0, 1}, {0, 1}}) == 0);
  CHECK(rho(0, 2, 2, {}) == 0);
  CHECK(rho(2, 1, 4, {}) == 2 * 3 - 2);
  CHECK_THROWS_AS(rho(-1, 1, 2, {}), std::invalid_argument);
  CHECK_THROWS_AS(rho(0, 1, 2, {{1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(rho(0, 1, 2, {{0, 2}}), std::invalid_argument);
}

TEST_CASE("vanishing and ramification sequences convert both ways") {
  VanishingSeq seq;
  seq.a = {1, 3};
  CHECK(seq.ramification() == std::vector<int>{1, 2});
  CHECK(VanishingSeq::from_ramification({1, 2}).a == std::vector<int>{1, 3});
  CHECK_THROWS_AS(validate_vanishing(VanishingSeq{{3, 1}}, 1, 4),
                  std::invalid_argument);
  CHECK_THROWS_AS(validate_vanishing(VanishingSeq{{1, 5}}, 1, 4),
                  std::invalid_argument);
}

TEST_CASE("node compatibility classification") {
  CHECK(eh_classify(pair_of(1, 4, {1, 3}, {1, 3})) == EHClass::Refined);
  CHECK(crude_excess(pair_of(1, 4, {1, 3}, {1, 3})) == 0);

  CHECK(eh_classify(pair_of(1, 4, {2, 3}, {1, 3})) == EHClass::Crude);
  CHECK(crude_excess(pair_of(1, 4, {2, 3}, {1, 3})) == 1);

  CHECK(eh_classify(pair_of(0, 4, {1}, {2})) == EHClass::Incompatible);
}

TEST_CASE("the dictionary reproduces the worked example") {
  EHPair pair = pair_of(1, 2, {0, 2}, {0, 2}, 1, 1);
  TwistDictionary dict = translate(pair, 7, 7);
  CHECK(dict.n_chain == 3);
  CHECK(dict.r_chain == 2);
  CHECK(dict.d_twist == 15);
  CHECK(dict.dvbar1 == std::vector<int>{2, 1, 1});
  CHECK(dict.dvbarn == std::vector<int>{1, 1, 2});
  CHECK(dict.dvn1 == 1);
  CHECK(dict.dv1n == 1);
  CHECK(dict.dztilde == std::vector<int>{1});
  CHECK(dict.dimg_g == std::vector<int>{9, 8, 7});
  CHECK(dict.dimg_f == std::vector<int>{7, 8, 9});
  CHECK(dict.margin_y == 1);
  CHECK(dict.margin_z == 1);

  SUBCASE("positive first vanishing order kills the end image") {
    EHPair shifted = pair_of(1, 2, {1, 2}, {0, 2}, 1, 1);
    TwistDictionary d2 = translate(shifted, 7, 7);
    CHECK(d2.dvn1 == 0);
  }

  SUBCASE("twist degrees below the threshold are rejected") {
    CHECK_THROWS_WITH_AS(translate(pair, 5, 7), doctest::Contains("deg D^Y"),
                         std::invalid_argument);
  }

  SUBCASE("incompatible pairs are rejected") {
    CHECK_THROWS_AS(translate(pair_of(0, 4, {1}, {2}), 20, 20),
                    std::invalid_argument);
  }
}

TEST_CASE("bound through the dictionary equals the excess") {
  SUBCASE("refined pairs have bound zero and an exact identity") {
    EHPair pair = pair_of(1, 2, {0, 2}, {0, 2}, 1, 1);
    CHECK(fiber_bound_eh(pair, 7, 7) == 0);
    CrudeIdentityReport rep = verify_crude_identity(pair, 7, 7);
    CHECK(rep.ok());
    CHECK(rep.first_sum == 26);
    CHECK(rep.rprime_dprime_term == 26);
  }

  SUBCASE("the worked crude pair has bound one") {
    EHPair pair = pair_of(1, 4, {2, 3}, {1, 3});
    CHECK(fiber_bound_eh(pair, 9, 9) == 1);
  }

  SUBCASE("seeded sweep of the identity") {
    std::mt19937_64 rng(7);
    for (int k = 0; k < 250; ++k) {
      EHPair pair = random_compatible_pair(rng, 3, 8, 3);
      int dy = 2 * pair.d + pair.gy + 1 + static_cast<int>(rng() % 4);
      int dz = 2 * pair.d + pair.gz + 1 + static_cast<int>(rng() % 4);
      CrudeIdentityReport rep = verify_crude_identity(pair, dy, dz);
      CHECK(rep.ok());
      CHECK(fiber_bound_eh(pair, dy, dz) == crude_excess(pair));
    }
  }

  SUBCASE("filtration shadows are monotone") {
    std::mt19937_64 rng(8);
    for (int k = 0; k < 100; ++k) {
      EHPair pair = random_compatible_pair(rng, 3, 8, 3);
      TwistDictionary dict =
          translate(pair, 2 * pair.d + pair.gy + 1, 2 * pair.d + pair.gz + 1);
      for (std::size_t i = 1; i < dict.dvbar1.size(); ++i) {
        CHECK(dict.dvbar1[i] <= dict.dvbar1[i - 1]);
        CHECK(dict.dvbarn[i] >= dict.dvbarn[i - 1]);
      }
    }
  }
}

TEST_CASE("additivity of the expected dimension across a node") {
  SUBCASE("refined node data adds exactly") {
    RhoAdditivityReport rep =
        rho_additivity(1, 4, 1, 1, {}, {}, {0, 1}, {2, 3});
    CHECK(rep.node_excess == 0);
    CHECK(rep.exact);
    CHECK(rep.rho_x == rep.rho_y + rep.rho_z);
  }

  SUBCASE("one unit of excess shifts the sum by one") {
    RhoAdditivityReport rep =
        rho_additivity(1, 4, 1, 1, {}, {}, {0, 2}, {2, 3});
    CHECK(rep.node_excess == 1);
    CHECK(rep.exact);
  }

  SUBCASE("seeded sweep is exact, including marked points") {
    std::mt19937_64 rng(9);
    for (int k = 0; k < 250; ++k) {
      EHPair pair = random_compatible_pair(rng, 3, 8, 3);
      std::vector<std::vector<int>> ram_y, ram_z;
      for (int m = static_cast<int>(rng() % 3); m-- > 0;) {
        ram_y.push_back(std::vector<int>(pair.r + 1, 0));
        ram_y.back().back() = static_cast<int>(rng() % 2);
      }
      for (int m = static_cast<int>(rng() % 3); m-- > 0;) {
        ram_z.push_back(std::vector<int>(pair.r + 1, 1));
      }
      RhoAdditivityReport rep = rho_additivity(
          pair.r, pair.d, pair.gy, pair.gz, ram_y, ram_z,
          pair.ay.ramification(), pair.az.ramification());
      CHECK(rep.exact);
      CHECK(rep.node_excess == crude_excess(pair));
    }
  }
}

TEST_CASE("strip multiplication against the tableau-counting oracle") {
  SUBCASE("the classical two-by-two value") {
    Genus0Result result = genus0_nonempty(1, 3, 4);
    CHECK(result.nonempty);
    CHECK(result.rho == 0);
    REQUIRE(result.intersection_number.has_value());
    CHECK(*result.intersection_number == 2);
  }

  SUBCASE("single-box strips fill every box like standard fillings") {
    for (auto [rows, cols] : std::vector<std::pair<int, int>>{
             {2, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 3}}) {
      SchubertClass cls{{BoxPartition{}, 1}};
      for (int k = 0; k < rows * cols; ++k) {
        cls = pieri_multiply(cls, 1, rows, cols);
        // every coefficient positive, every partition of the right weight
        for (const auto& [lambda, coeff] : cls) {
          CHECK(coeff > 0);
          int weight = 0;
          for (int part : lambda) weight += part;
          CHECK(weight == k + 1);
        }
      }
      BoxPartition full(rows, cols);
      REQUIRE(cls.count(full) == 1);
      CHECK(cls.at(full) == testing::count_box_tableaux(rows, cols));
    }
  }

  SUBCASE("negative expected dimension is empty") {
    Genus0Result result = genus0_nonempty(1, 3, 5);
    CHECK(result.rho < 0);
    CHECK_FALSE(result.nonempty);
  }

  SUBCASE("no marked points leave the full Grassmannian") {
    Genus0Result result = genus0_nonempty(2, 5, 0);
    CHECK(result.nonempty);
    CHECK(result.rho == 9);
  }

  SUBCASE("non-negative expected dimension stays non-empty in this shape") {
    for (int r = 1; r <= 3; ++r) {
      for (int d = r + 1; d <= 6; ++d) {
        int box = (r + 1) * (d - r);
        for (int m = 0; m * r <= box; ++m) {
          Genus0Result result = genus0_nonempty(r, d, m);
          CHECK(result.nonempty == (result.rho >= 0));
        }
      }
    }
  }

  SUBCASE("other ramification shapes are out of scope") {
    CHECK_THROWS_WITH_AS(genus0_nonempty(2, 5, {{0, 2, 2}}),
                         doctest::Contains("out of scope"),
                         std::invalid_argument);
    CHECK(genus0_nonempty(2, 5, {{0, 1, 1}, {0, 1, 1}}).nonempty);
  }
}

TEST_CASE("the one-point genus-one case") {
  SUBCASE("the excluded tail") {
    Genus1Result result = genus1_case(VanishingSeq{{3, 4}}, 1, 4);
    CHECK_FALSE(result.nonempty);
  }

  SUBCASE("small sequences are fine") {
    Genus1Result result = genus1_case(VanishingSeq{{0, 1}}, 1, 4);
    CHECK(result.nonempty);
    CHECK(result.dimension == 2 * 3 - 1);
  }

  SUBCASE("gap before the top avoids the exclusion") {
    Genus1Result result = genus1_case(VanishingSeq{{2, 4}}, 1, 4);
    CHECK(result.nonempty);
    CHECK(result.dimension == 0);
  }

  SUBCASE("exhaustive scan of the exclusion") {
    for (int r = 1; r <= 2; ++r) {
      for (int d = r; d <= 6; ++d) {
        // enumerate strictly increasing sequences in [0, d]
        std::vector<int> idx(r + 1);
        for (int j = 0; j <= r; ++j) idx[j] = j;
        while (true) {
          VanishingSeq seq;
          seq.a = idx;
          long long value = rho(1, r, d, {seq.ramification()});
          Genus1Result result = genus1_case(seq, r, d);
          bool excluded = idx[r] == d && idx[r - 1] == d - 1;
          if (value < 0) {
            CHECK_FALSE(result.nonempty);
          } else {
            CHECK(result.nonempty == !excluded);
            if (result.nonempty) CHECK(result.dimension == value);
          }
          int j = r;
          while (j >= 0 && idx[j] == d - r + j) --j;
          if (j < 0) break;
          ++idx[j];
          for (int k = j + 1; k <= r; ++k) idx[k] = idx[k - 1] + 1;
        }
      }
    }
  }
}

TEST_CASE("gluing profiles and the uniqueness verdict") {
  SUBCASE("refined pairs reproduce the case split") {
    std::mt19937_64 rng(10);
    for (int k = 0; k < 100; ++k) {
      EHPair pair = random_refined_pair(rng, 3, 8, 3);
      GluingProfile profile = gluing_profile(pair);
      CHECK(profile.within_case_split);
      CHECK(profile.verdict == "unique");
      for (int i = 0; i <= pair.d; ++i) {
        bool doubled = false;
        for (int j = 0; j <= pair.r; ++j) {
          doubled = doubled || (pair.ay.a[j] == i &&
                                pair.d - pair.az.a[pair.r - j] == i);
        }
        CHECK(profile.sums[i] == pair.r + 1 + (doubled ? 1 : 0));
      }
    }
  }

  SUBCASE("one unit of excess still forces uniqueness") {
    std::mt19937_64 rng(11);
    for (int k = 0; k < 100; ++k) {
      EHPair pair = random_excess_one_pair(rng, 3, 8, 3);
      CHECK(crude_excess(pair) == 1);
      CHECK(unique_smoothing(pair));
    }
  }

  SUBCASE("the concentrated excess-two example is not claimed") {
    EHPair pair = pair_of(1, 4, {2, 4}, {1, 3});
    CHECK(crude_excess(pair) == 2);
    GluingProfile profile = gluing_profile(pair);
    CHECK(profile.verdict == "not-established");
    CHECK_FALSE(unique_smoothing(pair));
    CHECK(profile.sums == std::vector<int>{2, 3, 3, 3, 3});
  }

  SUBCASE("incompatible pairs are rejected") {
    CHECK_THROWS_AS(gluing_profile(pair_of(0, 4, {1}, {2})),
                    std::invalid_argument);
  }
}
