#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "credfusion/cases.hpp"
#include "credfusion/combination.hpp"
#include "credfusion/errors.hpp"
#include "oracles.hpp"

using namespace credfusion;

TEST_CASE("frame labels") {
  const auto f = FrameOfDiscernment::numbered(4);
  CHECK(f.size() == 4);
  CHECK(f.label(2) == "A3");
  CHECK(f.index_of("A4") == 3);
  CHECK(f.full().bits == 0b1111U);
  CHECK(f.nonempty_subset_count() == 15);
  CHECK(f.parse_subset("A1,A3").bits == 0b0101U);
  CHECK(f.parse_subset(" A2 , A4 ").bits == 0b1010U);
  CHECK(f.format_subset(Subset(0b1001)) == "A1,A4");
  CHECK_THROWS_AS(f.index_of("B1"), InvalidFrame);
  CHECK_THROWS_AS(f.parse_subset("A1,,A2"), InvalidFrame);

  CHECK_THROWS_AS(FrameOfDiscernment({}), InvalidFrame);
  CHECK_THROWS_AS(FrameOfDiscernment({"x", "x"}), InvalidFrame);
  CHECK_THROWS_AS(FrameOfDiscernment({"a,b"}), InvalidFrame);
  CHECK_THROWS_AS(FrameOfDiscernment::numbered(21), InvalidFrame);
  CHECK_NOTHROW(FrameOfDiscernment::numbered(20));

  CHECK(FrameOfDiscernment::numbered(3) == FrameOfDiscernment({"A1", "A2", "A3"}));
  CHECK_FALSE(FrameOfDiscernment::numbered(3) == FrameOfDiscernment({"A1", "A3", "A2"}));
}

TEST_CASE("mass function validation") {
  const auto f = FrameOfDiscernment::numbered(3);
  using E = std::vector<MassEntry>;

  auto kind = [&](const E& e) { return validate(f, e)->kind; };
  CHECK(kind({{Subset(1), -0.1}, {Subset(2), 1.1}}) == MassViolation::Kind::NegativeMass);
  CHECK(kind({{Subset(1), 0.5}, {Subset(2), 0.4}}) == MassViolation::Kind::NotNormalized);
  CHECK(kind({{Subset(0), 0.1}, {Subset(2), 0.9}}) == MassViolation::Kind::EmptySetFocal);
  CHECK(kind({{Subset(8), 1.0}}) == MassViolation::Kind::OutsideFrame);
  CHECK_FALSE(validate(f, E{{Subset(1), 0.5}, {Subset(1), 0.5}}).has_value());
  CHECK_FALSE(validate(f, E{{Subset(0), 0.0}, {Subset(7), 1.0}}).has_value());

  CHECK_THROWS_AS(MassFunction(f, {{Subset(1), 0.5}}), InvalidMass);
  CHECK_THROWS_AS(MassFunction::from_labels(f, {{"A9", 1.0}}), InvalidFrame);

  const auto m = MassFunction::from_labels(f, {{"A1", 0.25}, {"A1", 0.25}, {"A2,A3", 0.5}, {"A3", 0.0}});
  CHECK(m.focal_count() == 2);
  CHECK(m.mass(Subset(1)) == doctest::Approx(0.5));
  CHECK(m.mass(Subset(4)) == 0.0);
  const auto d = m.dense();
  CHECK(d.size() == 8);
  CHECK(d.sum() == doctest::Approx(1.0));

  CHECK(MassFunction::vacuous(f).mass(f.full()) == 1.0);
  CHECK(MassFunction::categorical(f, Subset(2)).mass(Subset(2)) == 1.0);
  CHECK_THROWS_AS(MassFunction::categorical(f, Subset()), InvalidMass);
}

TEST_CASE("belief and plausibility against brute force") {
  std::mt19937_64 rng(11);
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto f = FrameOfDiscernment::numbered(n);
    for (int trial = 0; trial < 20; ++trial) {
      const auto m = oracle::random_bba(f, rng);
      const auto d = oracle::dense(m);
      const auto bv = belief_vector(m);
      const auto pv = plausibility_vector(m);
      for (std::uint32_t a = 1; a < d.size(); ++a) {
        CHECK(belief(m, Subset(a)) == doctest::Approx(oracle::bel(d, a)).epsilon(1e-12));
        CHECK(plausibility(m, Subset(a)) == doctest::Approx(oracle::pl(d, a)).epsilon(1e-12));
        CHECK(bv[a] == doctest::Approx(oracle::bel(d, a)).epsilon(1e-12));
        CHECK(pv[a] == doctest::Approx(oracle::pl(d, a)).epsilon(1e-12));
        CHECK(bv[a] <= pv[a] + 1e-12);
      }
      CHECK(pv[d.size() - 1] == doctest::Approx(1.0));
      CHECK(bv[0] == 0.0);
    }
  }
}

TEST_CASE("pignistic distribution") {
  std::mt19937_64 rng(12);
  const auto f = FrameOfDiscernment::numbered(5);
  for (int trial = 0; trial < 50; ++trial) {
    const auto m = oracle::random_bba(f, rng);
    const auto bet = pignistic(m);
    const auto expected = oracle::betp(oracle::dense(m), 5);
    for (Eigen::Index j = 0; j < 5; ++j) CHECK(bet.probs[j] == doctest::Approx(expected[j]).epsilon(1e-12));
    CHECK(bet.probs.sum() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK((bet.probs.array() >= 0.0).all());
  }
  const auto tie = MassFunction::from_labels(f, {{"A2,A4", 1.0}});
  CHECK(pignistic(tie).argmax() == 1);
  CHECK(pignistic(MassFunction::vacuous(f)).argmax() == 0);
}

TEST_CASE("event evidence") {
  const auto f = FrameOfDiscernment::numbered(3);
  const auto e = event_evidence(f, 2);
  CHECK(e.focal_count() == 1);
  CHECK(e.mass(Subset(4)) == 1.0);
  CHECK_THROWS_AS(event_evidence(f, 3), InvalidArgument);
}

TEST_CASE("dempster combination against brute force") {
  std::mt19937_64 rng(13);
  for (std::size_t n = 2; n <= 5; ++n) {
    const auto f = FrameOfDiscernment::numbered(n);
    for (int trial = 0; trial < 40; ++trial) {
      const auto a = oracle::random_bba(f, rng);
      const auto b = oracle::random_bba(f, rng);
      const auto da = oracle::dense(a);
      const auto db = oracle::dense(b);
      const double k = oracle::conflict(da, db);
      CHECK(conflict(a, b) == doctest::Approx(k).epsilon(1e-12));
      if (k >= 1.0 - 1e-9) {
        CHECK_THROWS_AS(dcr_pair(a, b), TotalConflict);
        continue;
      }
      const auto expected = oracle::dempster(da, db);
      const auto got = dcr_pair(a, b).dense();
      for (std::size_t s = 0; s < expected.size(); ++s) {
        CHECK(got[static_cast<Eigen::Index>(s)] == doctest::Approx(expected[s]).epsilon(1e-10));
      }
    }
  }
}

TEST_CASE("dempster combination algebra") {
  std::mt19937_64 rng(14);
  const auto f = FrameOfDiscernment::numbered(4);
  const auto vac = MassFunction::vacuous(f);
  int checked = 0;
  while (checked < 100) {
    const auto a = oracle::random_bba(f, rng);
    const auto b = oracle::random_bba(f, rng);
    const auto c = oracle::random_bba(f, rng);
    CHECK(max_abs_difference(dcr_pair(a, vac), a) <= 1e-12);
    try {
      const auto left = dcr_pair(dcr_pair(a, b), c);
      const auto right = dcr_pair(a, dcr_pair(b, c));
      CHECK(max_abs_difference(dcr_pair(a, b), dcr_pair(b, a)) <= 1e-12);
      CHECK(max_abs_difference(left, right) <= 1e-12);
      std::vector<MassFunction> list{a, b, c};
      std::vector<MassFunction> perm{c, a, b};
      CHECK(max_abs_difference(dcr_n(list), dcr_n(perm)) <= 1e-12);
      ++checked;
    } catch (const TotalConflict&) {
    }
  }
}

TEST_CASE("total conflict") {
  const auto f = FrameOfDiscernment::numbered(2);
  const auto a = MassFunction::from_labels(f, {{"A1", 1.0}});
  const auto b = MassFunction::from_labels(f, {{"A2", 1.0}});
  CHECK(conflict(a, b) == 1.0);
  try {
    dcr_pair(a, b);
    FAIL("expected TotalConflict");
  } catch (const TotalConflict& e) {
    CHECK(e.conflict() == 1.0);
  }
  const auto c = FrameOfDiscernment::numbered(3);
  CHECK_THROWS_AS(dcr_pair(a, MassFunction::vacuous(c)), FrameMismatch);
}

TEST_CASE("self fusion") {
  const auto report = cases::sensor_fault_report();
  const auto& m = report.front();
  CHECK(max_abs_difference(self_fuse(m, 1), m) == 0.0);
  CHECK(max_abs_difference(self_fuse(m, 3), dcr_pair(dcr_pair(m, m), m)) <= 1e-15);
  CHECK_THROWS_AS(self_fuse(m, 0), InvalidArgument);
}

TEST_CASE("sensor fault report under plain combination") {
  const auto fused = dcr_n(cases::sensor_fault_report());
  CHECK(fused.mass(Subset(1)) == doctest::Approx(0.0).epsilon(1e-4));
  CHECK(fused.mass(Subset(2)) == doctest::Approx(0.3443).epsilon(1e-4));
  CHECK(fused.mass(Subset(4)) == doctest::Approx(0.6557).epsilon(1e-4));
  CHECK(fused.mass(Subset(7)) == 0.0);
}
