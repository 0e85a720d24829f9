#include <doctest.h>

#include "cfrag/errors.hpp"
#include "cfrag/verma.hpp"

using namespace cfrag;

namespace {

Rational q(long p, long d = 1) {
  Rational r(p, d);
  r.canonicalize();
  return r;
}

}  // namespace

TEST_CASE("partitions") {
  CHECK(partitions(0).size() == 1);
  CHECK(partitions(4).size() == 5);
  CHECK(partitions(8).size() == 22);
  CHECK(partitions(3).front() == Partition{3});
  CHECK(level(Partition{3, 1, 1}) == 5);
}

TEST_CASE("lowest weight relations") {
  const VermaModule v(q(1, 2), q(1, 16));
  const auto vac = v.vacuum();
  CHECK(v.act(0, vac) == q(1, 16) * vac);
  CHECK(v.act(1, vac).is_zero());
  CHECK(v.act(2, vac).is_zero());
  CHECK(v.act(1, v.act(-1, vac)) == q(1, 8) * vac);
  // L0 on level d is h + d.
  const auto s = VermaState::basis({2, 1});
  CHECK(v.act(0, s) == (q(1, 16) + 3) * s);
}

TEST_CASE("bracket on the lowest weight vector") {
  const Rational c = q(7, 3), h = q(5, 4);
  const VermaModule v(c, h);
  const auto vac = v.vacuum();
  const auto lhs2 = v.act(2, v.act(-2, vac)) - v.act(-2, v.act(2, vac));
  CHECK(lhs2 == (4 * h + c / 2) * vac);
  const auto lhs3 = v.act(3, v.act(-3, vac)) - v.act(-3, v.act(3, vac));
  CHECK(lhs3 == (6 * h + 2 * c) * vac);
  CHECK(v.commutator_check(3, -3, vac));
  CHECK(v.commutator_check(1, 2, vac));
  CHECK(v.commutator_check(-1, -2, vac));
  // L_{-1} L_{-2} |h> - L_{-2} L_{-1} |h> = L_{-3} |h>, in normal order.
  const auto ordered = v.act(-1, v.act(-2, vac)) - v.act(-2, v.act(-1, vac));
  CHECK(ordered == VermaState::basis({3}));
}

TEST_CASE("all brackets up to the truncation") {
  for (const auto& [c, h] : {std::pair{q(1, 2), q(0)}, {q(1, 2), q(1, 16)}, {q(1), q(1)}, {q(26), q(3, 2)}}) {
    const VermaModule v(c, h, 8);
    for (int m = -4; m <= 4; ++m)
      for (int n = -4; n <= 4; ++n)
        for (int d = 0; d <= 8 - std::abs(m) - std::abs(n); ++d)
          for (const auto& p : partitions(d)) CHECK(v.commutator_check(m, n, VermaState::basis(p)));
  }
}

TEST_CASE("truncation is enforced") {
  const VermaModule v(q(1), q(1), 4);
  CHECK_THROWS_AS(v.act(-5, v.vacuum()), TruncationError);
  CHECK_THROWS_AS(v.commutator_check(-3, -2, v.vacuum()), TruncationError);
  CHECK_THROWS_AS(v.gram_matrix(5), TruncationError);
}

TEST_CASE("Gram matrices") {
  CHECK(VermaModule(q(1, 2), q(1, 16)).gram_matrix(1) == std::vector<std::vector<Rational>>{{q(1, 8)}});
  CHECK(VermaModule(q(1, 2), q(0)).gram_matrix(1)[0][0] == 0);
  // Level 2, basis (2), (1,1): [[4h + c/2, 6h], [6h, 4h(2h + 1)]].
  const Rational c = q(3, 5), h = q(2, 7);
  const auto g = VermaModule(c, h).gram_matrix(2);
  CHECK(g[0][0] == 4 * h + c / 2);
  CHECK(g[0][1] == 6 * h);
  CHECK(g[1][0] == 6 * h);
  CHECK(g[1][1] == 4 * h * (2 * h + 1));
  CHECK(determinant(g) == 2 * h * (16 * h * h + 2 * h * c - 10 * h + c));
  CHECK(determinant(VermaModule(q(1), q(1)).gram_matrix(2)) == 18);
  // (1/2, 1/16) carries a level-2 singular vector.
  CHECK(determinant(VermaModule(q(1, 2), q(1, 16)).gram_matrix(2)) == 0);
  const auto g4 = VermaModule(q(26), q(3, 2)).gram_matrix(4);
  for (std::size_t i = 0; i < g4.size(); ++i)
    for (std::size_t j = 0; j < g4.size(); ++j) CHECK(g4[i][j] == g4[j][i]);
}

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("3/6") == q(1, 2));
  CHECK(parse_rational("-2") == q(-2));
  CHECK(parse_rational("0.0625") == q(1, 16));
  CHECK(to_string(q(6, 4)) == "3/2");
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
}
