// Standard Levi subgroups of an admissible datum: the Levi-positive
// coweight monoid and its weight-side counterpart, the degree-one level
// (M-dominant orbit elements of gamma), decomposition certificates, and
// the pigeonhole vanishing bound for a proper parabolic.

#pragma once

#include <optional>

#include "oneadm/admissible.hpp"
#include "oneadm/semigroup.hpp"

namespace oneadm {

struct LeviDatum {
    AdmissibleDatum parent;
    std::vector<int> subset;  // Dynkin indices of M
    RootDatum m;              // same lattices, M's simple (co)roots only
    WeylElement w0m;          // longest element of W_M
    Weight two_rho_m;         // sum of M-positive roots
    AbelianQuotient quotient;  // Lambda / Z-span of M's simple coroots
};

struct ThetaLevel {
    std::vector<Coweight> elements;  // M-dominant members of the orbit of gamma
    std::vector<Vec> images;         // their classes in the Levi quotient
};

struct LemmaCheck {
    bool ok = true;
    std::vector<std::string> violations;
};

LeviDatum restrict_to_levi(const AdmissibleDatum& a, const std::vector<int>& subset);

// membership of an M-dominant lambda in the Levi-positive monoid: some
// full-Weyl translate lands in the semigroup
bool contains_M_S(const LeviDatum& L, const Coweight& lambda);

// enumerates the level, certifying each element M-minuscule and the
// map to the quotient injective; throws std::logic_error on violation
ThetaLevel theta_level(const LeviDatum& L);

// a tuple from the theta level, one per degree, whose sum dominates
// lambda in the M-order; nullopt means the decomposition lemma failed
std::optional<std::vector<Coweight>> decompose_certificate(const LeviDatum& L,
                                                           const Coweight& lambda);

// cross-checks the four membership characterizations of the
// Levi-positive monoids (coweight and weight side) on test sets
// enumerated up to degree k_max
LemmaCheck verify_levi_lemma(const LeviDatum& L, i64 k_max);

// pigeonhole bound: sum over the theta level of r*(2g-2)*dim U^lambda
i64 vanishing_bound(const LeviDatum& L, i64 genus, i64 r);

}  // namespace oneadm
