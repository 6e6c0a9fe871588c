#pragma once

// Random instances and same-fiber partners shared by the suites and `gen`.

#include <string>
#include <utility>

#include "dualpairs/pairs_common.hpp"
#include "dualpairs/rng.hpp"

namespace dualpairs::harness {

// fiber_left: x' = g . x (same j_right, recovered by witness_left).
// fiber_right: x' = x . g (same j_left, recovered by witness_right).
// normal_form_*: both points rebuilt from a shared normal form with
// independent group factors on the named side.
enum class PartnerMode { none, fiber_left, fiber_right, normal_form_left, normal_form_right };

// none | fiber-left | fiber-right | normal-form (= normal-form-left) | normal-form-right
PartnerMode parse_partner(const std::string& s);
std::string partner_name(PartnerMode p);
// Side whose witness relates the two points.
Side witness_side(PartnerMode p);

/// Largest m for a given n: n for the unitary and GL pairs, 2n for the symplectic one.
Index max_m(PairId pair, Index n);
/// Throws InputError unless 1 <= n <= 16 and 1 <= m <= max_m(pair, n).
void require_valid_dims(PairId pair, Index n, Index m);

/// n uniform in [1, max_n], m uniform in [1, max_m(pair, n)] (capped at max_n).
std::pair<Index, Index> random_dims(PairId pair, Index max_n, CounterRng& rng);

/// Gaussian point (full rank almost surely; resampled otherwise).
DualPairInstance random_instance(PairId pair, Index n, Index m, CounterRng& rng);

/// A pair of points in the same fiber. The first point of a normal-form pair
/// is itself built from random orbit data: W Sigma V (unitary), S D O
/// (symplectic), or the canonical (Q, P) of random integer Jordan data moved by
/// a unimodular integer matrix (GL, so both points are exact).
std::pair<DualPairInstance, DualPairInstance> fiber_pair(PairId pair, Index n, Index m, PartnerMode mode, CounterRng& rng);

/// Random valid Jordan data with integer eigenvalues (complex ones a + bi, b > 0).
gl::JordanData random_jordan_data(Index n, Index m, CounterRng& rng);

/// Random sigmas for the symplectic pair: p in [max(0, m - n), m / 2], sigmas in [0.5, 2.5].
symplectic::OrbitInvariants random_orbit_invariants(Index n, Index m, CounterRng& rng);

}  // namespace dualpairs::harness
