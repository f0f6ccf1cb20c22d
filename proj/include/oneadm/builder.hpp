// Constructing rank-one-center groups from a simply connected simple
// datum H with cyclic center of order h and a distinguished coweight
// gamma_H: the lattice pushout of H x GL_1 by the diagonal mu_h, realized
// exactly over the integers by scaling coweight coordinates by h.
//
// H lives in coroot-basis coordinates: the coweight lattice is Z^n with
// simple coroot alpha_i = e_i, and simple root alpha-check_j is the j-th
// column of the pairing matrix <alpha_i, alpha-check_j>.

#pragma once

#include "oneadm/admissible.hpp"

namespace oneadm {

struct SimplyConnectedDatum {
    RootDatum h_datum;  // rank n, coweights in the coroot basis
    i64 h = 0;          // order of the (cyclic) center
    // columns: h-scaled basis of Q_H = { x : <x, root lattice> integral }
    Mat q_h_scaled;
};

struct GammaHVerdict {
    bool in_q_h = false;
    bool minuscule = false;   // for the adjoint group (or the rank-0 branch)
    bool generates = false;   // class generates Q_H / Lambda_H
    bool faithful = false;    // orbit spans Q_H over Z
    bool ok = false;
    std::string detail;
};

struct BuiltGroup {
    RootDatum g;     // rank n+1
    Coweight gamma;
    i64 h = 0;
    // columns: images of the chosen basis vectors in h-scaled
    // (Q_H x Z)-coordinates, coweight and weight side
    Mat coweight_basis;
    Mat weight_basis;
};

// type in {'A','B','C','D','E'}; n = 0 with 'A' gives the rank-0 datum.
// Throws std::invalid_argument for unknown types, even-n type D (center
// not cyclic) and E8 (trivial center).
SimplyConnectedDatum catalog_simply_connected(char type, int n);

// h-scaled fundamental coweight of the adjoint group at node k
Vec fundamental_coweight_scaled(const SimplyConnectedDatum& H, int k);

// gamma_h_scaled is h * gamma_H in coroot-basis coordinates
GammaHVerdict validate_gamma_h(const SimplyConnectedDatum& H, const Vec& gamma_h_scaled);

// builds the quotient group's root datum and gamma = (gamma_H, 1/h);
// throws std::invalid_argument when validate_gamma_h fails and
// std::logic_error when the certification of the result fails
BuiltGroup build_admissible_group(const SimplyConnectedDatum& H, const Vec& gamma_h_scaled);

// unimodular change of basis matching simple coroots (up to a diagram
// automorphism), the central line, and gamma when both are supplied
std::optional<Mat> root_datum_isomorphism(const RootDatum& from, const RootDatum& to);
std::optional<Mat> root_datum_isomorphism(const RootDatum& from, const Coweight& gamma_from,
                                          const RootDatum& to, const Coweight& gamma_to);

}  // namespace oneadm
