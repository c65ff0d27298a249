#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "geodt/autiso.hpp"
#include "geodt/errors.hpp"
#include "geodt/families.hpp"
#include "geodt/field.hpp"
#include "geodt/psl2.hpp"

using namespace geodt;

namespace
{

// Schoolbook product in F_p[x]/(f), on coefficient vectors.
std::vector<std::uint32_t> naive_mul(std::uint32_t p,
                                     std::vector<std::uint32_t> const &f,
                                     std::vector<std::uint32_t> a,
                                     std::vector<std::uint32_t> b)
{
  std::size_t e = f.size() - 1;
  std::vector<std::uint64_t> c(2 * e, 0);
  for (std::size_t i = 0; i < e; ++i)
    for (std::size_t j = 0; j < e; ++j)
      c[i + j] += std::uint64_t{a[i]} * b[j];
  for (std::size_t k = c.size(); k-- > e;) {
    std::uint64_t lead = c[k] % p;
    for (std::size_t i = 0; i <= e; ++i)
      c[k - e + i] += (p - lead) * f[i];
  }
  std::vector<std::uint32_t> out(e);
  for (std::size_t i = 0; i < e; ++i)
    out[i] = static_cast<std::uint32_t>(c[i] % p);
  return out;
}

std::set<EnumeratedGroup::Element> as_set(std::vector<std::uint32_t> const &v)
{
  return {v.begin(), v.end()};
}

} // namespace

TEST_CASE("prime test")
{
  std::vector<std::uint64_t> primes;
  for (std::uint64_t n = 0; n < 60; ++n)
    if (is_prime(n))
      primes.push_back(n);
  CHECK(primes == std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23,
                                             29, 31, 37, 41, 43, 47, 53, 59});
}

TEST_CASE("GF(9) with modulus x^2 + 1")
{
  auto f = FiniteField::make(3, 2, std::vector<std::uint32_t>{1, 0, 1});
  CHECK(f.order() == 9);
  auto sq = f.squares();
  CHECK(sq == std::vector<FiniteField::Element>{1, 2, 3, 6});
  std::vector<std::string> names;
  for (auto s : sq)
    names.push_back(f.format(s));
  CHECK(names == std::vector<std::string>{"1", "2", "x", "2x"});
  CHECK(f.format(0) == "0");
  CHECK(f.format(7) == "2x+1");
  CHECK(f.nonsquares().size() == 4);

  // x * x = -1
  CHECK(f.mul(3, 3) == f.neg(1));
  CHECK(f.from_int(-1) == 2);
}

TEST_CASE("prime fields")
{
  auto f13 = FiniteField::make(13, 1);
  CHECK(f13.primitive_element() == 2);
  CHECK(f13.squares() ==
        std::vector<FiniteField::Element>{1, 3, 4, 9, 10, 12});
  CHECK(FiniteField::make(17, 1).primitive_element() == 3);
  CHECK(FiniteField::make(7, 1).primitive_element() == 3);
  CHECK(FiniteField::make(2, 1).primitive_element() == 1);

  for (std::uint32_t q : {3u, 5u, 7u, 9u, 11u, 13u, 25u, 27u, 29u, 49u}) {
    std::uint32_t p = 0, e = 0;
    for (std::uint32_t cand = 2; cand <= q; ++cand)
      if (q % cand == 0) {
        p = cand;
        break;
      }
    for (std::uint32_t r = 1; r < q; r *= p)
      ++e;
    auto f = FiniteField::make(p, e);
    CHECK(f.is_square(f.neg(1)) == (q % 4 == 1));
    CHECK(f.squares().size() == (q - 1) / 2);
  }
}

TEST_CASE("field construction errors")
{
  CHECK_THROWS_AS(FiniteField::make(4, 1), InputError);
  CHECK_THROWS_AS(FiniteField::make(3, 0), InputError);
  CHECK_THROWS_AS(FiniteField::make(3, 2, std::vector<std::uint32_t>{1, 2, 1}),
                  InputError); // (x+1)^2
  CHECK_THROWS_AS(FiniteField::make(3, 2, std::vector<std::uint32_t>{1, 0, 2}),
                  InputError); // not monic
  CHECK_THROWS_AS(FiniteField::make(3, 2, std::vector<std::uint32_t>{1, 1}),
                  InputError);
  CHECK_THROWS_AS(FiniteField::make(2, 17), InputError);
  auto f = FiniteField::make(5, 1);
  CHECK_THROWS_AS(f.inv(0), InputError);
}

TEST_CASE("multiplication agrees with schoolbook arithmetic")
{
  for (auto [p, e] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
         {2, 3}, {3, 2}, {5, 2}, {2, 4}, {3, 3}}) {
    auto f = FiniteField::make(p, e);
    for (FiniteField::Element a = 0; a < f.order(); ++a)
      for (FiniteField::Element b = 0; b < f.order(); ++b)
        REQUIRE(f.coefficients(f.mul(a, b)) ==
                naive_mul(p, f.modulus(), f.coefficients(a),
                          f.coefficients(b)));
  }
}

TEST_CASE("field axioms on random triples")
{
  std::mt19937_64 rng(2024);
  for (auto [p, e] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
         {13, 1}, {3, 2}, {2, 5}, {7, 2}, {41, 1}}) {
    auto f = FiniteField::make(p, e);
    std::uniform_int_distribution<FiniteField::Element> pick(0, f.order() - 1);
    for (int trial = 0; trial < 100; ++trial) {
      auto a = pick(rng), b = pick(rng), c = pick(rng);
      CHECK(f.add(a, b) == f.add(b, a));
      CHECK(f.mul(a, b) == f.mul(b, a));
      CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
      CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
      CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      CHECK(f.add(a, f.neg(a)) == f.zero());
      CHECK(f.sub(a, b) == f.add(a, f.neg(b)));
      if (a != 0) {
        CHECK(f.mul(a, f.inv(a)) == f.one());
        CHECK(f.pow(a, f.order() - 1) == f.one());
      }
      CHECK(f.frobenius(f.add(a, b)) ==
            f.add(f.frobenius(a), f.frobenius(b)));
    }
  }
}

TEST_CASE("primitive element has exact order q - 1")
{
  for (auto [p, e] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
         {2, 4}, {3, 2}, {5, 2}, {13, 1}, {2, 6}}) {
    auto f = FiniteField::make(p, e);
    auto w = f.primitive_element();
    std::set<FiniteField::Element> powers;
    auto x = f.one();
    for (std::uint32_t k = 0; k + 1 < f.order(); ++k) {
      powers.insert(x);
      x = f.mul(x, w);
    }
    CHECK(powers.size() == f.order() - 1);
    // no smaller element generates
    for (FiniteField::Element a = 1; a < w; ++a) {
      std::size_t ord = 1;
      for (auto y = a; y != f.one(); y = f.mul(y, a))
        ++ord;
      CHECK(ord < f.order() - 1);
    }
  }
}

TEST_CASE("PSL(2,p) orders and normalization")
{
  CHECK(Psl2(5).group().order() == 60);
  CHECK(Psl2(13).group().order() == 1092);
  CHECK(Psl2(17).group().order() == 2448);
  CHECK_THROWS_AS(Psl2(4), InputError);
  CHECK_THROWS_AS(Psl2(2), InputError);
  CHECK_THROWS_AS(Psl2(43), InputError);

  auto id = ProjectiveMatrix::make(7, 1, 0, 0, 1);
  CHECK(ProjectiveMatrix::make(7, -1, 0, 0, -1) == id);
  CHECK(ProjectiveMatrix::make(7, 6, 0, 0, 6) == id);
  CHECK_THROWS_AS(ProjectiveMatrix::make(7, 2, 0, 0, 1), InputError);

  Psl2 g(7);
  CHECK(g.group().order() == 168);
  CHECK(g.matrix(g.group().identity()) == id);
  auto s = g.element(0, 1, -1, 0);
  CHECK(g.group().element_order(s) == 2);
  auto t = g.element(1, 1, 0, 1);
  CHECK(g.group().element_order(t) == 7);
  CHECK(g.group().mul(t, g.group().inverse(t)) == g.group().identity());
  CHECK(g.index_of(multiply(7, g.matrix(s), g.matrix(t))) ==
        g.group().mul(s, t));
}

TEST_CASE("coset graphs")
{
  auto s3 = EnumeratedGroup::from_permutations(
    {Permutation::from_cycles(3, {{0, 1}}),
     Permutation::from_cycles(3, {{0, 1, 2}})});
  REQUIRE(s3.order() == 6);
  auto e = s3.identity();
  auto t01 = *s3.find("(0 1)");
  auto t02 = *s3.find("(0 2)");
  auto c = *s3.find("(0 1 2)");
  std::vector<EnumeratedGroup::Element> h{e, t01};
  std::sort(h.begin(), h.end());

  auto k3 = coset_graph(s3, h, t02);
  CHECK(k3.order() == 3);
  CHECK(k3.size() == 3);

  // errors: not a subgroup, g^2 outside H, <H, g> proper
  std::vector<EnumeratedGroup::Element> not_closed{e, t01, t02};
  CHECK_THROWS_AS(coset_graph(s3, not_closed, t02), InputError);
  std::vector<EnumeratedGroup::Element> no_identity{t01};
  CHECK_THROWS_AS(coset_graph(s3, no_identity, t02), InputError);
  CHECK_THROWS_AS(coset_graph(s3, h, c), InputError);
  std::vector<EnumeratedGroup::Element> trivial{e};
  CHECK_THROWS_AS(coset_graph(s3, trivial, t01), ConnectivityError);
}

TEST_CASE("antipodal double covers from PSL(2,p)")
{
  for (std::uint32_t p : {5u, 13u, 17u}) {
    auto tc = taylor_construction(p);
    CHECK(tc.graph.order() == 2 * p + 2);
    CHECK(tc.H.size() == p * (p - 1) / 4);
    auto const &grp = tc.group->group();
    CHECK(grp.element_order(tc.a) == p);
    CHECK(grp.element_order(tc.b) == (p - 1) / 2);
    CHECK(grp.element_order(tc.g) == 2);
    auto m = metrics(tc.graph);
    REQUIRE(m.valency);
    CHECK(*m.valency == p);
    CHECK(m.diameter == 3);
    auto fibres = antipodal_fibres(tc.graph);
    REQUIRE(fibres);
    CHECK(fibres->size() == p + 1);
  }
  auto tc = taylor_construction(13);
  CHECK(tc.primitive_root == 2);
  CHECK(tc.group->matrix(tc.g) == ProjectiveMatrix::make(13, 0, 1, -1, 0));
  CHECK(tc.group->matrix(tc.a) == ProjectiveMatrix::make(13, 1, 1, 0, 1));

  CHECK_THROWS_AS(taylor_construction(7), InputError);
  CHECK_THROWS_AS(taylor_construction(9), InputError);
  CHECK_THROWS_AS(taylor_construction(3), InputError);
}

TEST_CASE("the involution choice does not change the graph")
{
  for (std::uint32_t p : {5u, 13u}) {
    auto base = canonical_form(taylor_construction(p, 0).graph).certificate;
    for (std::uint32_t i = 1; i < (p - 1) / 2; ++i) {
      auto alt = taylor_construction(p, i);
      CHECK(alt.group->group().element_order(alt.involution) == 2);
      CHECK(canonical_form(alt.graph).certificate == base);
    }
  }
}

TEST_CASE("H meets its conjugate by g in a subgroup of index p")
{
  auto tc = taylor_construction(13);
  auto const &grp = tc.group->group();
  auto h = as_set(tc.H);
  std::set<EnumeratedGroup::Element> meet;
  auto gi = grp.inverse(tc.g);
  for (auto x : tc.H) {
    auto y = grp.mul(grp.mul(gi, x), tc.g);
    if (h.count(y))
      meet.insert(y);
  }
  CHECK(h.size() / meet.size() == 13);
  CHECK(h.size() % meet.size() == 0);
}
