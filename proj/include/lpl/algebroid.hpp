#pragma once

#include <optional>

#include "lpl/submanifold.hpp"

namespace lpl {

struct AlgebroidFiber {
  Subspace d;
  bool is_subalgebra = false;
};

/// d = h ∩ { v : (coad_v lambda)|_h = 0 }, the fibre of N*C ∩ #^{-1}TC.
/// Throws Refusal if h is not a subalgebra.
AlgebroidFiber algebroid_fiber_d(const AffineSubspace& c);

/// g_x = { v : <x, [v, w]> = 0 for all w }, the conormal space of the
/// coadjoint orbit through x.
Subspace isotropy_algebra(const LieAlgebra& g, std::span<const Rational> x);

struct OrbitSample {
  Vector x;
  std::size_t orbit_dim = 0;
  std::size_t isotropy_dim = 0;
  bool transversal = false;  ///< T_xC ∩ T_xO = {0}
};

struct AlgebroidFiberReport {
  std::optional<AlgebroidFiber> fiber;  ///< only when h is a subalgebra
  std::vector<OrbitSample> samples;     ///< base point first
  bool constant_orbit_dim = true;
  bool all_transversal = true;
};

/// Orbit dimension and transversality at lambda and at `spec.count` sample
/// points of C.
AlgebroidFiberReport transversal_orbit_report(const AffineSubspace& c, const SampleSpec& spec = {});

}  // namespace lpl
