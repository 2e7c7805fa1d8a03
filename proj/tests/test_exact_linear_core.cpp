#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "lg/enumerate.hpp"
#include "lg/subspace.hpp"
#include "oracle_helpers.hpp"

using namespace lg;

namespace {

Matrix mat(std::uint32_t p, std::vector<std::vector<std::uint32_t>> rows,
           int cols = -1) {
  return Matrix::from_rows(PrimeField(p), rows, cols);
}

Subspace line(std::uint32_t p, std::vector<std::uint32_t> v) {
  return Subspace::span(
      Matrix::from_rows(PrimeField(p), {v}, static_cast<int>(v.size())));
}

Matrix random_matrix(PrimeField f, int rows, int cols, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> dist(0, f.p() - 1);
  Matrix m(f, rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.at(r, c) = dist(rng);
  return m;
}

}  // namespace

TEST_CASE("field arithmetic basics") {
  PrimeField f(7);
  CHECK(f.add(3, 5) == 1);
  CHECK(f.sub(3, 5) == 5);
  CHECK(f.mul(3, 5) == 1);
  CHECK(f.mul(f.inv(4), 4) == 1);
  CHECK(f.reduce(-1) == 6);
  CHECK_THROWS_AS(PrimeField(6), std::invalid_argument);
  CHECK_THROWS_AS(PrimeField(1 << 16), std::invalid_argument);
  CHECK_THROWS_AS(f.inv(0), std::domain_error);
}

TEST_CASE("rref fixed points and duplicate rows") {
  Matrix id = Matrix::identity(PrimeField(2), 2);
  CHECK(rref(id) == id);

  Matrix dup = mat(2, {{1, 1}, {1, 1}});
  Matrix red = rref(dup);
  CHECK(red(0, 0) == 1);
  CHECK(red(0, 1) == 1);
  CHECK(red(1, 0) == 0);
  CHECK(red(1, 1) == 0);
  CHECK(rank(dup) == 1);
}

TEST_CASE("rref rank agrees with minor expansion on random 4x4 over F_3") {
  std::mt19937_64 rng(101);
  PrimeField f(3);
  for (int trial = 0; trial < 50; ++trial) {
    Matrix m = random_matrix(f, 4, 4, rng);
    CHECK(rank(m) == testing::rank_by_minors(m));
    CHECK(rref(rref(m)) == rref(m));
  }
}

TEST_CASE("image, kernel and preimage on the hand examples") {
  Matrix proj = mat(2, {{1, 0}, {0, 0}});
  Subspace diag_line = line(2, {1, 1});
  CHECK(image(proj, diag_line) == line(2, {1, 0}));

  Matrix zero = mat(2, {{0, 0}, {0, 0}});
  CHECK(kernel(zero) == Subspace::full(PrimeField(2), 2));

  CHECK(preimage(proj, line(2, {1, 0})) == Subspace::full(PrimeField(2), 2));

  CHECK_THROWS_AS(image(proj, Subspace::full(PrimeField(2), 3)),
                  std::invalid_argument);
  CHECK_THROWS_AS(preimage(proj, Subspace::full(PrimeField(3), 2)),
                  std::invalid_argument);
}

TEST_CASE("sum and intersection of lines in the plane") {
  Subspace e1 = line(2, {1, 0});
  Subspace mixed = line(2, {1, 1});
  CHECK(intersect(e1, mixed).dim() == 0);
  CHECK(sum(e1, mixed) == Subspace::full(PrimeField(2), 2));
  CHECK(intersect(e1, e1) == e1);
  CHECK(sum(e1, e1) == e1);
  CHECK_THROWS_AS(sum(e1, Subspace::full(PrimeField(2), 3)),
                  std::invalid_argument);
}

TEST_CASE("modular dimension law on random pairs in F_3^4") {
  std::mt19937_64 rng(7);
  PrimeField f(3);
  std::uniform_int_distribution<int> dim_dist(0, 4);
  for (int trial = 0; trial < 100; ++trial) {
    Subspace a = Subspace::span(random_matrix(f, dim_dist(rng), 4, rng));
    Subspace b = Subspace::span(random_matrix(f, dim_dist(rng), 4, rng));
    Subspace meet = intersect(a, b);
    Subspace join = sum(a, b);
    CHECK(a.dim() + b.dim() == join.dim() + meet.dim());
    CHECK(a.contains(meet));
    CHECK(b.contains(meet));
    CHECK(join.contains(a));
    CHECK(join.contains(b));
  }
}

TEST_CASE("modular dimension law, exhaustive over all pairs in F_2^4") {
  PrimeField f(2);
  std::vector<Subspace> all;
  for (int r = 0; r <= 4; ++r) {
    for_each_subspace(f, 4, r, [&all](const Subspace& s) { all.push_back(s); });
  }
  REQUIRE(all.size() == 67);  // 1 + 15 + 35 + 15 + 1
  for (const Subspace& a : all) {
    for (const Subspace& b : all) {
      CHECK(a.dim() + b.dim() ==
            sum(a, b).dim() + intersect(a, b).dim());
    }
  }
}

TEST_CASE("canonical form is independent of the spanning set") {
  std::mt19937_64 rng(11);
  PrimeField f(5);
  for (int trial = 0; trial < 50; ++trial) {
    Matrix basis = random_matrix(f, 3, 5, rng);
    Subspace s = Subspace::span(basis);
    // remix the rows by a random invertible transformation
    Matrix mix(f, 3, 3);
    do {
      mix = random_matrix(f, 3, 3, rng);
    } while (rank(mix) != 3);
    Subspace t = Subspace::span(mix * basis);
    CHECK(s == t);
    CHECK(testing::vector_set(s.basis()) == testing::vector_set(basis));
  }
}

TEST_CASE("quotient by a kernel pushes dimensions correctly") {
  PrimeField f(2);

  SUBCASE("full kernel collapses everything") {
    Quotient q(2, Subspace::full(f, 2));
    CHECK(q.target_dim() == 0);
    CHECK(q.push(line(2, {1, 1})).dim() == 0);
  }

  SUBCASE("zero kernel is injective") {
    Quotient q(2, Subspace::zero(f, 2));
    CHECK(q.target_dim() == 2);
    CHECK(q.push(line(2, {1, 1})).dim() == 1);
    CHECK(q.push(Subspace::full(f, 2)).dim() == 2);
  }

  SUBCASE("line kernel in the plane") {
    Quotient q(2, line(2, {1, 0}));
    CHECK(q.target_dim() == 1);
    CHECK(q.push(line(2, {1, 0})).dim() == 0);
    CHECK(q.push(line(2, {1, 1})).dim() == 1);
  }

  SUBCASE("kernel must live inside the ambient space") {
    CHECK_THROWS_AS(Quotient(3, Subspace::full(f, 2)), std::invalid_argument);
  }
}

TEST_CASE("quotient dimension identity on random data") {
  std::mt19937_64 rng(13);
  PrimeField f(3);
  std::uniform_int_distribution<int> dim_dist(0, 4);
  for (int trial = 0; trial < 60; ++trial) {
    Subspace ker = Subspace::span(random_matrix(f, dim_dist(rng), 4, rng));
    Subspace s = Subspace::span(random_matrix(f, dim_dist(rng), 4, rng));
    Quotient q(4, ker);
    CHECK(q.push(ker).dim() == 0);
    CHECK(q.push(s).dim() == s.dim() - intersect(s, ker).dim());
  }
}

TEST_CASE("image and preimage adjunction, exhaustive on F_2^3") {
  std::mt19937_64 rng(17);
  PrimeField f(2);
  std::vector<Subspace> all;
  for (int r = 0; r <= 3; ++r) {
    for_each_subspace(f, 3, r, [&all](const Subspace& s) { all.push_back(s); });
  }
  for (int trial = 0; trial < 10; ++trial) {
    Matrix m = random_matrix(f, 3, 3, rng);
    Subspace full_image = image(m, Subspace::full(f, 3));
    CHECK(full_image == column_space(m));
    for (const Subspace& s : all) {
      CHECK(preimage(m, image(m, s)).contains(s));
      CHECK(s.contains(image(m, preimage(m, s))));
      CHECK(image(m, preimage(m, s)) == intersect(s, full_image));
      CHECK(preimage(m, s).contains(kernel(m)));
    }
  }
}

TEST_CASE("subspace enumeration matches the hand lists") {
  PrimeField f(2);
  std::vector<Subspace> lines;
  for_each_subspace(f, 2, 1, [&](const Subspace& s) { lines.push_back(s); });
  REQUIRE(lines.size() == 3);
  CHECK(std::count(lines.begin(), lines.end(), line(2, {1, 0})) == 1);
  CHECK(std::count(lines.begin(), lines.end(), line(2, {0, 1})) == 1);
  CHECK(std::count(lines.begin(), lines.end(), line(2, {1, 1})) == 1);

  SUBCASE("rank zero yields exactly the zero subspace") {
    std::vector<Subspace> zeros;
    for_each_subspace(f, 3, 0, [&](const Subspace& s) { zeros.push_back(s); });
    REQUIRE(zeros.size() == 1);
    CHECK(zeros.front().dim() == 0);
  }

  SUBCASE("G(2, F_2^4) has 35 points") {
    std::size_t count = 0;
    for_each_subspace(f, 4, 2, [&](const Subspace&) { ++count; });
    CHECK(count == 35);
    CHECK(gaussian_binomial(4, 2, 2) == 35);
    CHECK(testing::q_binomial_product(4, 2, 2) == 35);
  }

  SUBCASE("bad ranks are rejected") {
    CHECK_THROWS_AS(gaussian_binomial(2, 3, 2), std::invalid_argument);
    CHECK_THROWS_AS(SubspaceEnumerator(f, 2, 3), std::invalid_argument);
  }

  SUBCASE("counts beyond 64 bits are refused, not wrapped") {
    CHECK_THROWS_AS(gaussian_binomial(64, 32, 13), std::overflow_error);
  }
}

TEST_CASE("enumeration yields each subspace exactly once with the predicted count") {
  for (std::uint32_t p : {2u, 3u}) {
    PrimeField f(p);
    for (int d = 0; d <= 5; ++d) {
      for (int r = 0; r <= d; ++r) {
        if (gaussian_binomial(d, r, p) > 2000) continue;
        std::set<std::vector<std::uint32_t>> seen;
        std::uint64_t count = 0;
        for_each_subspace(f, d, r, [&](const Subspace& s) {
          ++count;
          CHECK(s.dim() == r);
          // flatten the canonical basis as the identity of the subspace
          std::vector<std::uint32_t> flat;
          for (int i = 0; i < s.dim(); ++i) {
            auto row = s.basis().row(i);
            flat.insert(flat.end(), row.begin(), row.end());
          }
          CHECK(seen.insert(flat).second);
        });
        CHECK(count == gaussian_binomial(d, r, p));
        CHECK(count == testing::q_binomial_product(d, r, p));
      }
    }
  }
}

TEST_CASE("superspace enumeration lists exactly the containers") {
  PrimeField f(3);
  Subspace base = line(3, {1, 2, 0});
  SuperspaceEnumerator en(base, 2);
  std::vector<Subspace> supers;
  while (auto s = en.next()) supers.push_back(*s);
  CHECK(supers.size() == en.count());
  CHECK(en.count() == gaussian_binomial(2, 1, 3));
  for (const Subspace& s : supers) {
    CHECK(s.dim() == 2);
    CHECK(s.contains(base));
  }
  // and they are pairwise distinct
  for (std::size_t i = 0; i < supers.size(); ++i) {
    for (std::size_t j = i + 1; j < supers.size(); ++j) {
      CHECK_FALSE(supers[i] == supers[j]);
    }
  }
}
