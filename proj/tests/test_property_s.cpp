#include <catch2/catch_amalgamated.hpp>

#include "schurvec/corpus.hpp"
#include "schurvec/property_s.hpp"

using namespace schurvec;

namespace {

Partition P(const std::string& s) { return Partition::parse(s); }

SuperMap diag_even(std::vector<int> entries) {
  int n = static_cast<int>(entries.size());
  SuperMap f = SuperMap::zero(make_space(n, 0), make_space(n, 0));
  for (int i = 0; i < n; ++i) f.even_block(i, i) = entries[i];
  return f;
}

}  // namespace

TEST_CASE("a mono passes with an exact retraction") {
  SuperMap f = SuperMap::zero(make_space(1, 0), make_space(2, 0));
  f.even_block(0, 0) = 1;
  PropertySVerdict v = check_property_S(f);
  CHECK(v.is_mono);
  CHECK(v.consistent);
  CHECK_FALSE(v.inconclusive);
  CHECK_FALSE(v.witness.has_value());
  CHECK(v.bound == 2);  // minimal vanishing partition of 1|0 is the column
  CHECK(v.certification.find("retraction") == 0);
}

TEST_CASE("the zero map on a line is killed by the single box") {
  SuperMap z = SuperMap::zero(make_space(1, 0), make_space(1, 0));
  PropertySVerdict v = check_property_S(z);
  CHECK_FALSE(v.is_mono);
  CHECK(v.consistent);
  REQUIRE(v.witness.has_value());
  CHECK(*v.witness == P("1"));
  CHECK(v.bound == 1);
}

TEST_CASE("a rank-one endomorphism of the plane is killed by the column") {
  SuperMap f = diag_even({1, 0});
  PropertySVerdict v = check_property_S(f);
  CHECK_FALSE(v.is_mono);
  CHECK(v.consistent);
  REQUIRE(v.witness.has_value());
  CHECK(*v.witness == P("1,1"));
  CHECK(v.sweep_max_size >= 1);
}

TEST_CASE("a too-small bound is reported, not silently passed") {
  SuperMap f = diag_even({1, 0});  // witness (1,1) has size 2
  PropertySVerdict v = check_property_S(f, 1);
  CHECK(v.inconclusive);
  CHECK_FALSE(v.consistent);
  CHECK_FALSE(v.witness.has_value());
  CHECK(v.certification.find("inconclusive") == 0);
}

TEST_CASE("split decomposition recomposes on random maps") {
  Rng rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    SuperSpace a = random_space(rng, 3, 3);
    SuperSpace b = random_space(rng, 3, 3);
    SuperMap f = random_map(rng, a, b);
    SplitDecomposition sd = split_map(f);
    CHECK(sd.rank_dims == rank_dims(f));
    CHECK(compose(sd.u, compose(sd.middle, sd.v)) == f);
    CHECK(is_iso(sd.v));
    CHECK(is_iso(sd.u));
  }
}

TEST_CASE("retraction of a random mono composes to the identity") {
  Rng rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    SuperSpace a = random_space(rng, 2, 2);
    SuperSpace b = make_space(a.dim.even + rng.uniform(0, 2),
                              a.dim.odd + rng.uniform(0, 2));
    SuperMap f = random_mono(rng, a, b);
    SuperMap g = retraction_of_mono(f);
    CHECK(compose(g, f) == SuperMap::identity(a));
  }
  SuperMap z = SuperMap::zero(make_space(1, 0), make_space(1, 0));
  CHECK_THROWS_AS(retraction_of_mono(z), precondition_error);
}

TEST_CASE("verdicts are consistent across a random corpus") {
  auto corpus = map_corpus(43, 60, 3, 2);
  for (const SuperMap& f : corpus) {
    PropertySVerdict v = check_property_S(f);
    if (v.inconclusive) continue;
    CHECK(v.consistent);
    CHECK(v.is_mono == is_mono(f));
    CHECK(v.is_mono != v.witness.has_value());
    if (v.witness)
      CHECK(graded_dimension(*v.witness, rank_dims(f)).is_zero());
  }
}

TEST_CASE("the dual check reports epi") {
  SuperMap p = SuperMap::zero(make_space(2, 0), make_space(1, 0));
  p.even_block(0, 0) = 1;
  PropertySVerdict v = check_property_S_op(p);
  CHECK(v.is_mono);  // the field carries is_epi of the original map
  CHECK(v.consistent);
  SuperMap z = SuperMap::zero(make_space(1, 0), make_space(1, 0));
  PropertySVerdict vz = check_property_S_op(z);
  CHECK_FALSE(vz.is_mono);
  REQUIRE(vz.witness.has_value());
  CHECK(*vz.witness == P("1"));
}
