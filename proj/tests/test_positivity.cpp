#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "qmod/eig.hpp"
#include "qmod/error.hpp"
#include "qmod/positivity.hpp"
#include "qmod/sampler.hpp"

using namespace qmod;

namespace {

Carrier z2() { return Carrier::group_ring(FiniteGroup::cyclic(2)); }
Carrier z4() { return Carrier::group_ring(FiniteGroup::cyclic(4)); }
Carrier s3() { return Carrier::group_ring(FiniteGroup::symmetric(3)); }

StarElement g_elem(const Carrier& c, uint32_t idx) { return StarElement::group_element(c, idx); }

StarElement rat_scalar(const Carrier& c, const Rational& q) {
  return StarElement::scalar(c, GaussianRational(q));
}

double norm_of(const StarElement& a, const AMModel& m) { return seminorm(a, m).upper; }

}  // namespace

TEST_CASE("build_AM_model on C[Z2]") {
  Carrier c = z2();
  SUBCASE("S = {} keeps both characters") {
    AMModel m = build_AM_model(ModulePresentation(c, {}));
    CHECK(m.irreps.size() == 2);
    for (const Representation& r : m.irreps) CHECK(r.dim() == 1);
  }
  SUBCASE("S = {g} keeps only the trivial character") {
    AMModel m = build_AM_model(ModulePresentation(c, {g_elem(c, 1)}));
    REQUIRE(m.irreps.size() == 1);
    CHECK(std::abs(m.irreps[0].apply(g_elem(c, 1)).at(0, 0) - cplx(1.0)) < 1e-9);
  }
  SUBCASE("S = {-1} has no M-positive representations") {
    CHECK_THROWS_WITH_AS(build_AM_model(ModulePresentation(c, {-StarElement::one(c)})),
                         "no M-positive representations", Error);
  }
  SUBCASE("a marginal character is excluded from the model") {
    // phi_-(s) = -5e-8 puts the sign character in the marginal band
    Rational big(100000000);
    StarElement s = rat_scalar(c, (big - 5) / (2 * big)) +
                    GaussianRational((big + 5) / (2 * big)) * g_elem(c, 1);
    AMModel m = build_AM_model(ModulePresentation(c, {s}));
    CHECK(m.irreps.size() == 1);
  }
}

TEST_CASE("seminorm exact-mode oracles") {
  SUBCASE("zero element") {
    AMModel m = build_AM_model(ModulePresentation(z2(), {}));
    NormEstimate est = seminorm(StarElement::zero(z2()), m);
    CHECK(est.lower == 0.0);
    CHECK(est.upper == 0.0);
    CHECK(est.exact);
  }
  SUBCASE("1 + g on C[Z2] has norm 2") {
    Carrier c = z2();
    AMModel m = build_AM_model(ModulePresentation(c, {}));
    NormEstimate est = seminorm(StarElement::one(c) + g_elem(c, 1), m);
    CHECK(est.upper == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(est.exact);
    CHECK(est.lower_witness.has_value());
  }
  SUBCASE("diag(3, -4) on Mat2 over scalars has norm 4") {
    Carrier sc = Carrier::group_ring(FiniteGroup::trivial());
    Carrier mc = Carrier::matrix_ring(2, sc);
    StarElement a = matrix_unit(2, 0, 0, rat_scalar(sc, 3)) +
                    matrix_unit(2, 1, 1, rat_scalar(sc, -4));
    AMModel m = build_AM_model(ModulePresentation(mc, {}));
    CHECK(seminorm(a, m).upper == doctest::Approx(4.0).epsilon(1e-10));
  }
}

TEST_CASE("exact seminorm equals the regular representation norm") {
  Sampler smp(515);
  for (const Carrier& c : {z4(), s3()}) {
    AMModel m = build_AM_model(ModulePresentation(c, {}));
    Representation reg = regular_rep(c);
    for (int t = 0; t < 20; ++t) {
      StarElement a = smp.element(c, 4, 1);
      double lhs = seminorm(a, m).upper;
      double rhs = operator_norm(reg.apply(a));
      CHECK(std::fabs(lhs - rhs) <= 1e-7 * std::max(1.0, rhs));
    }
  }
}

TEST_CASE("classify_bounded") {
  SUBCASE("the unit is bounded with norm 1") {
    Carrier c = z2();
    CHECK(classify_bounded(StarElement::one(c), ModulePresentation(c, {})) ==
          Boundedness::bounded);
  }
  SUBCASE("1 - g is infinitesimal when only the trivial character survives") {
    Carrier c = z2();
    ModulePresentation pres(c, {g_elem(c, 1)});
    StarElement a = StarElement::one(c) - g_elem(c, 1);
    CHECK(classify_bounded(a, pres) == Boundedness::infinitesimal);
    // I(M) is an ideal: products with arbitrary elements stay infinitesimal
    Sampler smp(606);
    for (int t = 0; t < 10; ++t) {
      StarElement b = smp.element(c, 3, 1);
      CHECK(classify_bounded(a * b, pres) == Boundedness::infinitesimal);
      CHECK(classify_bounded(b * a, pres) == Boundedness::infinitesimal);
    }
  }
  SUBCASE("a free letter with S = {} is unknown") {
    Carrier c = Carrier::free_star(1);
    CHECK(classify_bounded(StarElement::letter(c, 0), ModulePresentation(c, {})) ==
          Boundedness::unknown);
  }
}

TEST_CASE("arch_membership bands") {
  Carrier c = z2();
  ModulePresentation pres(c, {});
  AMModel m = build_AM_model(pres);
  CHECK(arch_membership_model(StarElement::one(c), m) == ArchStatus::interior);
  CHECK(arch_membership_model(StarElement::zero(c), m) == ArchStatus::boundary_arch);
  CHECK(arch_membership_model(g_elem(c, 1), m) == ArchStatus::outside);
  CHECK(arch_membership(g_elem(c, 1), pres) == ArchStatus::outside);
  // -5e-8 eigenvalue: between -tol and -10 tol, so no definitive answer
  Rational big(100000000);
  StarElement x = rat_scalar(c, (big - 5) / (2 * big)) +
                  GaussianRational((big + 5) / (2 * big)) * g_elem(c, 1);
  CHECK(arch_membership_model(x, m) == ArchStatus::unknown);
  // non-symmetric input is rejected
  Carrier f = Carrier::free_star(1);
  CHECK_THROWS_AS(arch_membership(StarElement::letter(f, 0), ModulePresentation(f, {})), Error);
}

TEST_CASE("arch_membership on a free carrier") {
  Carrier c = Carrier::free_star(1);
  StarElement x = StarElement::letter(c, 0);
  ModulePresentation pres(c, {rat_scalar(c, 4) - x * x.star()});
  CHECK(arch_membership(-StarElement::one(c), pres) == ArchStatus::outside);
  CHECK(arch_membership(StarElement::one(c), pres) == ArchStatus::unknown);
}

TEST_CASE("character_space oracles") {
  SUBCASE("C[Z2], S = {}: two self-conjugate characters") {
    CharacterSpace xm = character_space(ModulePresentation(z2(), {}));
    REQUIRE(xm.points.size() == 2);
    for (size_t i = 0; i < 2; ++i) {
      CHECK(xm.points[i].conj_index == i);
      CHECK_FALSE(xm.points[i].boundary);
    }
  }
  SUBCASE("C[Z4], S = {}: four characters, i and -i conjugation-paired") {
    CharacterSpace xm = character_space(ModulePresentation(z4(), {}));
    REQUIRE(xm.points.size() == 4);
    size_t idx_i = SIZE_MAX, idx_mi = SIZE_MAX;
    for (size_t k = 0; k < 4; ++k) {
      if (std::abs(xm.points[k].values[1] - cplx(0, 1)) < 1e-9) idx_i = k;
      if (std::abs(xm.points[k].values[1] - cplx(0, -1)) < 1e-9) idx_mi = k;
    }
    REQUIRE(idx_i != SIZE_MAX);
    REQUIRE(idx_mi != SIZE_MAX);
    CHECK(xm.points[idx_i].conj_index == idx_mi);
    CHECK(xm.points[idx_mi].conj_index == idx_i);
  }
  SUBCASE("C[Z4], S = {g + g^3}: three characters survive, two at the boundary") {
    // phi(g) = -1 gives phi(g + g^3) = -2 and is excluded; g -> +-i give 0.
    Carrier c = z4();
    ModulePresentation pres(c, {g_elem(c, 1) + g_elem(c, 3)});
    CharacterSpace xm = character_space(pres);
    REQUIRE(xm.points.size() == 3);
    int boundary_count = 0;
    for (const Character& ch : xm.points) {
      if (ch.boundary) ++boundary_count;
      if (!ch.boundary) CHECK(std::abs(ch.values[1] - cplx(1.0)) < 1e-9);
    }
    CHECK(boundary_count == 2);
  }
  SUBCASE("non-abelian carriers are rejected") {
    CHECK_THROWS_AS(character_space(ModulePresentation(s3(), {})), Error);
  }
}

TEST_CASE("theorem1_audit") {
  SUBCASE("zero violations on honest presentations") {
    Carrier c4 = z4();
    for (const ModulePresentation& pres :
         {ModulePresentation(z2(), {}), ModulePresentation(c4, {g_elem(c4, 1) + g_elem(c4, 3)}),
          ModulePresentation(Carrier::group_ring(FiniteGroup::cyclic(6)), {})}) {
      AuditReport rep = theorem1_audit(pres, 60, 99);
      CHECK(rep.passed());
    }
  }
  SUBCASE("degenerate presentation reports as such instead of failing") {
    Carrier c = z2();
    AuditReport rep = theorem1_audit(ModulePresentation(c, {-StarElement::one(c)}), 10, 1);
    CHECK(rep.passed());
    REQUIRE(rep.checks.size() == 1);
    CHECK(rep.checks[0].status == "info");
  }
}

TEST_CASE("corollary8_audit") {
  SUBCASE("C[Z2], S = {}: all four conditions pass") {
    AMModel m = build_AM_model(ModulePresentation(z2(), {}));
    AuditReport rep = corollary8_audit(m, 40, 5);
    CHECK(rep.passed());
    CHECK(rep.checks.size() == 4);
  }
  SUBCASE("S = {g, -g} is degenerate on C[Z2]") {
    Carrier c = z2();
    CHECK_THROWS_WITH_AS(
        build_AM_model(ModulePresentation(c, {g_elem(c, 1), -g_elem(c, 1)})),
        "no M-positive representations", Error);
  }
  SUBCASE("an empty model reports vacuous") {
    AMModel empty{ModulePresentation(z2(), {}), {}, {}, 0};
    AuditReport rep = corollary8_audit(empty, 10, 1);
    REQUIRE(rep.checks.size() == 1);
    CHECK(rep.checks[0].status == "info");
    CHECK(rep.checks[0].witness.find("vacuous") != std::string::npos);
  }
}

TEST_CASE("evaluation_map_audit") {
  Carrier c = s3();
  ModulePresentation pres(c, {});
  SUBCASE("a = 1: all residuals zero") {
    AuditReport rep = evaluation_map_audit(pres, StarElement::one(c), 20, 5, 3);
    CHECK(rep.passed());
    for (const AuditCheck& ch : rep.checks)
      if (ch.status != "info") CHECK(ch.residual <= ch.tolerance);
  }
  SUBCASE("random element") {
    Sampler smp(77);
    AuditReport rep = evaluation_map_audit(pres, smp.element(c, 4, 1), 40, 10, 4);
    CHECK(rep.passed());
  }
  SUBCASE("isometry value on C[Z2] for 1 + g") {
    Carrier c2 = z2();
    AuditReport rep =
        evaluation_map_audit(ModulePresentation(c2, {}), StarElement::one(c2) + g_elem(c2, 1));
    CHECK(rep.passed());
  }
  SUBCASE("non-real coefficients skip the conjugation check") {
    AuditReport rep = evaluation_map_audit(
        pres, GaussianRational::i() * StarElement::group_element(c, 1), 10, 3, 5);
    CHECK(rep.passed());
    bool skipped = false;
    for (const AuditCheck& ch : rep.checks)
      if (ch.status == "info" && ch.witness.find("skipped") != std::string::npos) skipped = true;
    CHECK(skipped);
  }
}

TEST_CASE("example9_audit on C[Z2]") {
  AuditReport rep = example9_audit(ModulePresentation(z2(), {}), 12, 6);
  CHECK(rep.passed());
  CHECK(rep.checks.size() == 5);
}

TEST_CASE("Theorem 4 seminorm laws on C[S3]") {
  Carrier c = s3();
  AMModel m = build_AM_model(ModulePresentation(c, {}));
  Sampler smp(404);
  for (int t = 0; t < 25; ++t) {
    StarElement a = smp.element(c, 3, 1);
    StarElement b = smp.element(c, 3, 1);
    const double na = norm_of(a, m);
    const double nb = norm_of(b, m);
    CHECK(norm_of(a * b, m) <= na * nb + 1e-6);
    CHECK(norm_of(a + b, m) <= na + nb + 1e-6);
    CHECK(std::fabs(norm_of(a.star(), m) - na) <= 1e-7 * std::max(1.0, na));
    const double naa = norm_of(a * a.star(), m);
    CHECK(std::fabs(naa - na * na) <= 1e-6 * std::max(1.0, na * na));
    Rational tq = smp.rational();
    GaussianRational tg(tq);
    CHECK(std::fabs(norm_of(tg * a, m) - std::fabs(to_double(tq)) * na) <=
          1e-7 * std::max(1.0, na));
    CHECK(na * na <= norm_of(a * a.star() + b * b.star(), m) + 1e-6);
  }
}

TEST_CASE("free carrier seminorm sandwich") {
  Carrier c = Carrier::free_star(2);
  StarElement x1 = StarElement::letter(c, 0);
  StarElement x2 = StarElement::letter(c, 1);
  // ball constraint 4 - (x1 x1* + x2 x2*) makes each letter norm exactly 2
  ModulePresentation pres(
      c, {rat_scalar(c, 4) - x1 * x1.star() - x2 * x2.star()});
  SUBCASE("letter: certificate upper bound meets the sampled lower bound") {
    NormEstimate est = seminorm(x1, pres, 7, 48);
    CHECK(est.upper == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(est.lower >= 2.0 - 1e-6);
    CHECK(est.lower <= est.upper + 1e-7 * std::max(1.0, est.lower));
    CHECK_FALSE(est.exact);
    CHECK(est.lower_witness.has_value());
  }
  SUBCASE("polynomial: bounds bracket and stay ordered") {
    StarElement a = x1 * x2.star() + rat_scalar(c, Rational(1, 2));
    NormEstimate est = seminorm(a, pres, 9, 48);
    CHECK(est.upper <= 4.5 + 1e-9);  // l1-style propagation: 2*2 + 1/2
    CHECK(est.lower > 0.0);
    CHECK(est.lower <= est.upper + 1e-7 * std::max(1.0, est.lower));
  }
  SUBCASE("uncovered letters give an infinite upper bound with a note") {
    ModulePresentation partial(c, {rat_scalar(c, 4) - x1 * x1.star()});
    NormEstimate est = seminorm(x2, partial, 3, 8);
    CHECK(std::isinf(est.upper));
    CHECK_FALSE(est.note.empty());
  }
  SUBCASE("zero element short-circuits") {
    NormEstimate est = seminorm(StarElement::zero(c), pres, 3, 8);
    CHECK(est.upper == 0.0);
    CHECK(est.exact);
  }
}

TEST_CASE("shift squeeze: n(x) is the least r with r +- x in Arch(M)") {
  Carrier c = s3();
  Sampler smp(505);
  StarElement sym_gen = smp.symmetric_element(c, 3, 1);
  for (const ModulePresentation& pres :
       {ModulePresentation(c, {}), ModulePresentation(c, {sym_gen * sym_gen.star()})}) {
    AMModel m = build_AM_model(pres);
    for (int t = 0; t < 25; ++t) {
      StarElement x = smp.symmetric_element(c, 4, 1);
      const double n = seminorm(x, m).upper;
      // shifting just above the seminorm lands in Arch(M) on both sides
      StarElement up = rat_scalar(c, Rational(n + 1e-6));
      for (const StarElement& y : {up - x, up + x}) {
        ArchStatus st = arch_membership_model(y, m);
        CHECK((st == ArchStatus::interior || st == ArchStatus::boundary_arch));
      }
      // shifting below it leaves at least one side outside
      if (n > 1e-3) {
        StarElement dn = rat_scalar(c, Rational(n - 1e-4));
        ArchStatus minus = arch_membership_model(dn - x, m);
        ArchStatus plus = arch_membership_model(dn + x, m);
        CHECK((minus == ArchStatus::outside || plus == ArchStatus::outside));
      }
    }
  }
}
