// Minuscule-coweight detection and certification of admissible data:
// a connected one-dimensional center, an infinite cyclic fundamental
// group generated by the class of gamma, gamma minuscule, and the orbit
// of gamma spanning the coweight lattice.  Also the distinguished dual
// basis (omega-check_0, omega-check_i) and the central coweight omega.

#pragma once

#include <optional>
#include <string>
#include <utility>

#include "oneadm/root_datum.hpp"

namespace oneadm {

struct MinusculeCheck {
    bool ok = false;
    std::optional<Coweight> strictly_smaller;  // witness when not minimal
    std::string detail;
};

struct ConditionVerdict {
    bool ok = false;
    std::string detail;
};

struct AdmissibilityReport {
    ConditionVerdict center;             // character group of Z(G) free of rank 1
    ConditionVerdict fundamental_group;  // pi_1 free of rank 1
    ConditionVerdict minuscule_generator;  // gamma minuscule, class generates pi_1
    ConditionVerdict faithful;           // Z-span of the orbit of gamma is Lambda
    // sanity: minimal dominant elements found below gamma, and whether
    // their pi_1 classes are pairwise distinct
    std::vector<Coweight> degree_one_minuscule;
    bool injective_to_pi1 = true;
    bool overall = false;
};

struct AdmissibleDatum {
    RootDatum datum;
    Coweight gamma;
    Weight omega0;                // orthogonal to coroots, <gamma, omega0> = 1
    std::vector<Weight> omega_i;  // one per simple root
    Coweight omega;               // generator of the root-orthogonal line
    i64 d_omega = 0;              // degree of omega; omega <= d_omega * gamma
    std::vector<int> J;           // simple i with <gamma, root_i> = 0

    i64 degree(const Coweight& x) const { return pairing(x, omega0); }
};

// gamma must be dominant (throws std::invalid_argument otherwise)
MinusculeCheck is_minuscule(const RootDatum& d, const Coweight& gamma);

AdmissibilityReport check_one_admissible(const RootDatum& d, const Coweight& gamma);

// (omega0, omega_i); throws std::runtime_error if the defining linear
// systems have no integral solution or the result is not a lattice basis
std::pair<Weight, std::vector<Weight>> special_weight_basis(const RootDatum& d,
                                                            const Coweight& gamma);

// (omega, d_omega); throws std::runtime_error if the root-orthogonal
// lattice is not of rank 1 or d_omega*gamma - omega fails to be a
// nonnegative coroot combination
std::pair<Coweight, i64> central_coweight(const RootDatum& d, const Coweight& gamma);

// runs the full certification; throws std::invalid_argument when it fails
AdmissibleDatum make_admissible(const RootDatum& d, const Coweight& gamma);

}  // namespace oneadm
