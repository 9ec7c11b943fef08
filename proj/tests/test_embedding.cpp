#include "doctest.h"
#include "lpl/embedding.hpp"
#include "lpl/errors.hpp"
#include "support/testkit.hpp"

using namespace lpl;
using testkit::span;
using testkit::vec;

namespace {

const Subspace kGl2H = span(4, {{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
const Subspace kOffDiagonal = span(4, {{0, 1, 0, 0}, {0, 0, 1, 0}});
const Subspace kDiagonal = span(4, {{1, 0, 0, 0}, {0, 0, 0, 1}});

AffineSubspace gl2_punctured() { return {testkit::gl2(), kGl2H, vec({1, 0, 0, 0})}; }

}  // namespace

TEST_SUITE("choose_R and extend") {
  TEST_CASE("gl2 greedy complement is the d-axis") {
    const auto c = gl2_punctured();
    CHECK(choose_R(c) == span(4, {{0, 0, 0, 1}}));
    const Extension e = build_extension(c);
    CHECK(e.ptilde.direction() == kDiagonal);
    CHECK(e.p == kOffDiagonal);
    CHECK(e.sampled_evidence_only);
    CHECK(e.ptilde.contains(c.base()));
  }

  TEST_CASE("coisotropic C extends to the whole dual") {
    const AffineSubspace c(testkit::sl2(), span(3, {{1, 0, 0}, {0, 1, -1}}), zero_vector(3));
    const Extension e = build_extension(c);
    CHECK(e.ptilde.direction().is_full());
    CHECK(e.p.is_zero());
    CHECK_FALSE(e.sampled_evidence_only);
  }

  TEST_CASE("a point of sl2* accepts any transversal slice") {
    const AffineSubspace pt(testkit::sl2(), Subspace::full(3), vec({0, 0, 1}));
    // The leaf through (0,0,1) is tangent to the (e1,e2)-plane there.
    CHECK(choose_R(pt) == span(3, {{0, 0, 1}}));
    const Subspace slice = span(3, {{1, 1, 1}});
    CHECK(choose_R(pt, {}, slice) == slice);
    CHECK_THROWS_AS(choose_R(pt, {}, span(3, {{1, 0, 0}})), std::invalid_argument);
    const AffineSubspace origin(testkit::sl2(), Subspace::full(3), zero_vector(3));
    CHECK(choose_R(origin).is_full());
  }

  TEST_CASE("refuses when the rank is not constant") {
    const AffineSubspace c(testkit::gl2(), kGl2H, zero_vector(4));
    CHECK_THROWS_AS(choose_R(c), Refusal);
    CHECK_THROWS_AS(build_extension(c), Refusal);
  }

  TEST_CASE("extend rejects non-complements") {
    CHECK_THROWS_AS(extend(gl2_punctured(), span(4, {{0, 1, 0, 0}})), std::invalid_argument);
    CHECK_THROWS_AS(extend(gl2_punctured(), Subspace::zero(4)), std::invalid_argument);
  }
}

TEST_SUITE("cosymplectic_locus") {
  TEST_CASE("gl2 plane fails exactly on a = d") {
    const Extension e = build_extension(gl2_punctured());
    const std::vector<Vector> extra = {vec({1, 0, 0, 1}), vec({-2, 0, 0, -2}), vec({0, 0, 0, 0}),
                                       vec({3, 0, 0, 1})};
    const auto locus = cosymplectic_locus(e, {64, 5}, extra);
    CHECK_FALSE(locus.never_cosymplectic);
    CHECK(locus.points.size() == 1 + 64 + extra.size());
    std::size_t on_line = 0;
    for (const auto& p : locus.points) {
      CHECK(p.cosymplectic == (p.x[0] != p.x[3]));
      on_line += p.x[0] == p.x[3];
    }
    CHECK(locus.failures == on_line);
    CHECK(locus.failures >= 3);
    CHECK(locus.nonempty());
  }

  TEST_CASE("abelian algebra with p nonzero fails everywhere") {
    const auto ab = testkit::abelian3();
    const AffineSubspace c(ab, span(3, {{1, 0, 0}, {0, 1, 0}}), zero_vector(3));
    const Subspace p = span(3, {{1, 0, 0}, {0, 1, 0}});
    const Extension e{c, Subspace::zero(3), AffineSubspace(ab, p, zero_vector(3)), p, false};
    const auto locus = cosymplectic_locus(e, {16, 1});
    CHECK_FALSE(locus.never_cosymplectic);
    CHECK(locus.failures == locus.points.size());
    CHECK_FALSE(locus.nonempty());
  }

  TEST_CASE("odd dimensional p is never cosymplectic") {
    const auto he = testkit::heisenberg();
    const AffineSubspace c(he, span(3, {{1, 0, 0}}), vec({0, 0, 1}));
    const Subspace p = span(3, {{1, 0, 0}});
    const Extension e{c, Subspace::zero(3), AffineSubspace(he, p, vec({0, 0, 1})), p, false};
    const auto locus = cosymplectic_locus(e, {16, 1});
    CHECK(locus.never_cosymplectic);
    CHECK_FALSE(locus.nonempty());
  }

  TEST_CASE("sl2 line {(0,t,t+1)} is already cosymplectic") {
    // T C + #N*C is all of sl2*, so the complement is zero and P~ = C.
    const AffineSubspace c(testkit::sl2(), span(3, {{1, 0, 0}, {0, 1, -1}}), vec({0, 0, 1}));
    const Extension e = build_extension(c);
    CHECK(e.r.is_zero());
    CHECK(e.ptilde.direction() == c.direction());
    const auto locus = cosymplectic_locus(e, {16, 1});
    CHECK(locus.failures == 0);
    CHECK(locus.nonempty());
  }
}

TEST_SUITE("constant_sharp_conormal") {
  TEST_CASE("gl2 with the d-axis is certified with off-diagonal k°") {
    const Extension e = build_extension(gl2_punctured());
    const auto r = constant_sharp_conormal(e);
    CHECK(r.certified);
    CHECK(r.k_annihilator == kOffDiagonal);
    CHECK_FALSE(r.witness_p.has_value());
  }

  TEST_CASE("gl2 with the alternative complement is not constant") {
    const Extension e = build_extension(gl2_punctured(), {}, span(4, {{0, 0, 1, 1}}));
    const auto r = constant_sharp_conormal(e);
    CHECK_FALSE(r.certified);
    REQUIRE(r.witness_p.has_value());
    REQUIRE(r.witness_image.has_value());
    CHECK(e.p.contains(*r.witness_p));
    CHECK_FALSE(r.k_annihilator.contains(*r.witness_image));
    CHECK_THROWS_AS(symmetric_pair_analysis(e, r), Refusal);
  }

  TEST_CASE("abelian algebra is certified with k° = 0") {
    const AffineSubspace c(testkit::abelian3(), span(3, {{1, 1, 0}}), vec({1, 2, 3}));
    const Extension e = build_extension(c);
    const auto r = constant_sharp_conormal(e);
    CHECK(r.certified);
    CHECK(r.k_annihilator.is_zero());
  }

  TEST_CASE("certified k° and p give a direct sum whenever the locus is nonempty") {
    testkit::Gen gen(401);
    int checked = 0;
    for (const auto& g : testkit::algebra_catalog())
      for (int s = 0; s < 30; ++s) {
        const Subspace h = gen.subspace(g.dim(), static_cast<std::size_t>(gen.integer(1, 3)));
        const AffineSubspace c(g, h, gen.vector(g.dim()));
        if (pre_poisson_check(c, {16, 1}).verdict == RankVerdict::NotConstant) continue;
        const Extension e = build_extension(c, {16, 1});
        const auto r = constant_sharp_conormal(e, {16, 1});
        if (!r.certified || !cosymplectic_locus(e, {16, 1}).nonempty()) continue;
        const auto pair = symmetric_pair_analysis(e, r);
        CHECK(pair.direct_sum);
        CHECK(pair.k.dim() + pair.p.dim() == g.dim());
        CHECK(intersect(pair.k, pair.p).is_zero());
        ++checked;
      }
    CHECK(checked > 20);
  }
}

TEST_SUITE("symmetric pairs") {
  TEST_CASE("gl2 gives the diagonal subalgebra and a symmetric pair") {
    const Extension e = build_extension(gl2_punctured());
    const auto pair = symmetric_pair_analysis(e, constant_sharp_conormal(e));
    CHECK(pair.k == kDiagonal);
    CHECK(pair.k_subalgebra);
    CHECK(pair.kp_in_p);
    CHECK(pair.pp_in_k);
    CHECK(pair.symmetric_pair());
    const LieAlgebra induced = induced_structure(testkit::gl2(), pair.k, pair.p);
    CHECK(induced.dim() == 2);
    CHECK(induced.is_abelian());
  }

  TEST_CASE("trivial decomposition k = g") {
    for (const auto& g : testkit::algebra_catalog()) {
      const auto r = decomposition_check(g, Subspace::full(g.dim()), Subspace::zero(g.dim()));
      CHECK(r.symmetric_pair());
      const LieAlgebra induced = induced_structure(g, Subspace::full(g.dim()), Subspace::zero(g.dim()));
      CHECK(induced.structure_constants().size() == g.structure_constants().size());
      for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t j = 0; j < g.dim(); ++j)
          CHECK(induced.basis_bracket(i, j) == g.basis_bracket(i, j));
    }
  }

  TEST_CASE("gl2 = sl2 + centre") {
    const auto gl = testkit::gl2();
    const Subspace k = span(4, {{1, 0, 0, -1}, {0, 1, 0, 0}, {0, 0, 1, 0}});
    const Subspace p = span(4, {{1, 0, 0, 1}});
    const auto r = decomposition_check(gl, k, p);
    CHECK(r.direct_sum);
    CHECK(r.k_subalgebra);
    CHECK(r.kp_in_p);
    CHECK(r.pp_in_k);
    const LieAlgebra induced = induced_structure(gl, k, p);
    CHECK(validate_jacobi(induced).ok);
    // Canonical basis of k: k1 = a - d, k2 = b, k3 = c.
    CHECK(induced.basis_bracket(0, 1) == vec({0, 2, 0}));
    CHECK(induced.basis_bracket(0, 2) == vec({0, 0, -2}));
    CHECK(induced.basis_bracket(1, 2) == vec({1, 0, 0}));
  }

  TEST_CASE("induced structure refuses non-subalgebras and non-complements") {
    const auto gl = testkit::gl2();
    CHECK_THROWS_AS(induced_structure(gl, kGl2H, span(4, {{1, 0, 0, 0}})), Refusal);
    CHECK_THROWS_AS(induced_structure(gl, kDiagonal, span(4, {{0, 1, 0, 0}})), Refusal);
  }

  TEST_CASE("induced structure on random decompositions satisfies Jacobi") {
    testkit::Gen gen(411);
    int checked = 0;
    for (const auto& e : testkit::subalgebra_catalog())
      for (int s = 0; s < 10; ++s) {
        // Random complement of the subalgebra e.h.
        const Subspace p = choose_complement(
            e.h, sum(e.h, Subspace::span(e.g.dim(), {gen.vector(e.g.dim()), gen.vector(e.g.dim()),
                                                     gen.vector(e.g.dim()), gen.vector(e.g.dim())})));
        if (sum(e.h, p).dim() != e.g.dim()) continue;
        const Subspace q = Subspace::span(e.g.dim(), [&] {
          std::vector<Vector> gens;
          for (const auto& b : p.basis()) gens.push_back(add(b, gen.element(e.h)));
          return gens;
        }());
        const LieAlgebra induced = induced_structure(e.g, e.h, q);
        CHECK(validate_jacobi(induced).ok);
        CHECK(induced.dim() == e.h.dim());
        // k is a subalgebra, so the projection along q is the identity on [k,k].
        for (std::size_t i = 0; i < e.h.dim(); ++i)
          for (std::size_t j = 0; j < e.h.dim(); ++j) {
            const Vector direct = e.g.bracket(e.h.basis()[i], e.h.basis()[j]);
            CHECK(e.h.coordinates(direct) == induced.basis_bracket(i, j));
          }
        ++checked;
      }
    CHECK(checked > 50);
  }
}

TEST_SUITE("injectivity_at") {
  TEST_CASE("examples") {
    CHECK_FALSE(injectivity_at(testkit::abelian3(), span(3, {{1, 0, 0}}), vec({1, 1, 1})));
    CHECK(injectivity_at(testkit::gl2(), kOffDiagonal, vec({1, 0, 0, 0})));
    CHECK_FALSE(injectivity_at(testkit::gl2(), kOffDiagonal, vec({1, 0, 0, 1})));
    CHECK(injectivity_at(testkit::gl2(), Subspace::zero(4), vec({1, 0, 0, 1})));
  }

  TEST_CASE("injective on p exactly where the diagonal plane is cosymplectic") {
    const Extension e = build_extension(gl2_punctured());
    for (const auto& x : e.ptilde.sample_points({40, 9}))
      CHECK(injectivity_at(testkit::gl2(), e.p, x) == cosymplectic_at(e, x));
  }
}

TEST_SUITE("coisotropic_in_extension") {
  TEST_CASE("C is coisotropic in the gl2 plane at cosymplectic points") {
    const auto c = gl2_punctured();
    const Extension e = build_extension(c);
    for (long a : {1L, -2L, 5L}) CHECK(coisotropic_in_extension(e, vec({a, 0, 0, 0})));
    CHECK_THROWS_AS(coisotropic_in_extension(e, vec({0, 0, 0, 0})), std::invalid_argument);
    CHECK_THROWS_AS(coisotropic_in_extension(e, vec({1, 0, 0, 1})), std::invalid_argument);
  }

  TEST_CASE("holds at every cosymplectic sample point of random extensions") {
    testkit::Gen gen(421);
    int checked = 0;
    for (const auto& g : testkit::algebra_catalog())
      for (int s = 0; s < 20; ++s) {
        const Subspace h = gen.subspace(g.dim(), static_cast<std::size_t>(gen.integer(1, 4)));
        const AffineSubspace c(g, h, gen.vector(g.dim()));
        if (pre_poisson_check(c, {16, 2}).verdict == RankVerdict::NotConstant) continue;
        const Extension e = build_extension(c, {16, 2});
        for (const auto& x : c.sample_points({6, 3})) {
          if (!cosymplectic_at(e, x)) continue;
          CHECK(coisotropic_in_extension(e, x));
          // T P~ and the characteristic space of P~ are complementary there.
          const auto flags = pointwise_flags(e.ptilde, x);
          CHECK(flags.cosymplectic);
          CHECK(flags.sharp_rank + e.ptilde.dim() == g.dim());
          ++checked;
        }
      }
    CHECK(checked > 50);
  }
}
