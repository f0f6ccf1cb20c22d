// The graded semigroup of dominant coweights below multiples of gamma:
// level sets, the finite membership test through the dual basis, the
// dual-cone description of the weight-side semigroup, and Hilbert-basis
// generators with a bounded freeness certificate.

#pragma once

#include "oneadm/admissible.hpp"

namespace oneadm {

struct GradedLevelSet {
    i64 k = 0;
    std::vector<Coweight> elements;  // sorted, all of degree k and <= k*gamma
};

struct DualConeVerdict {
    bool ok = true;
    // basis members pairing negatively with some w0(lambda)
    std::vector<Weight> bad_basis;
    // lattice points passing the inequality test but outside the Z+-span
    std::vector<Weight> outside_span;
};

struct HilbertBasisReport {
    std::vector<std::pair<Coweight, i64>> generators;  // with degrees
    i64 verified_up_to = 0;
    bool is_free = false;
    std::vector<Coweight> representation_failures;  // elements with != 1 representation
};

GradedLevelSet level_set(const AdmissibleDatum& a, i64 k);

// membership of a dominant mu via the finite pairing test
bool contains(const AdmissibleDatum& a, const Coweight& mu);

// coordinates of lc in the (omega0, omega_i) basis are all nonnegative
bool dual_cone_contains(const AdmissibleDatum& a, const Weight& lc);

// checks both inclusions of the dual-cone description on enumerated
// data: level sets up to k_max against a candidate basis, and a box of
// lattice points against the Z+-span.  The default basis is the datum's.
DualConeVerdict dual_cone_verify(const AdmissibleDatum& a, i64 k_max);
DualConeVerdict dual_cone_verify(const AdmissibleDatum& a, i64 k_max, const Weight& omega0,
                                 const std::vector<Weight>& omega_i);

HilbertBasisReport hilbert_basis(const AdmissibleDatum& a, i64 k_max);

}  // namespace oneadm
