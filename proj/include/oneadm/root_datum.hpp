// Based root data over Z^N with the dot-product pairing, and the Weyl
// group machinery built on them: dominance, orbits, longest elements,
// lattice quotients.

#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "oneadm/intmat.hpp"

namespace oneadm {

// Coweights live in Lambda, weights in the dual lattice.  The tags exist
// so the two slots of the pairing cannot be swapped by accident.
struct Coweight {
    Vec c;
    auto operator<=>(const Coweight&) const = default;
};

struct Weight {
    Vec c;
    auto operator<=>(const Weight&) const = default;
};

inline i64 pairing(const Coweight& cw, const Weight& w) { return dot(cw.c, w.c); }

inline Coweight operator+(const Coweight& a, const Coweight& b) { return {add(a.c, b.c)}; }
inline Coweight operator-(const Coweight& a, const Coweight& b) { return {sub(a.c, b.c)}; }
inline Coweight operator*(i64 k, const Coweight& a) { return {scale(k, a.c)}; }
inline Coweight operator-(const Coweight& a) { return {negate(a.c)}; }
inline Weight operator+(const Weight& a, const Weight& b) { return {add(a.c, b.c)}; }
inline Weight operator-(const Weight& a, const Weight& b) { return {sub(a.c, b.c)}; }
inline Weight operator*(i64 k, const Weight& a) { return {scale(k, a.c)}; }
inline Weight operator-(const Weight& a) { return {negate(a.c)}; }

// Stored as matrices on both lattices; equality is matrix equality, the
// word is bookkeeping only.
struct WeylElement {
    Mat on_coweights;          // acts on Lambda coordinates
    Mat on_weights;            // contragredient action
    std::vector<int> word;     // simple-reflection indices, not canonical

    Coweight apply(const Coweight& x) const { return {mat_apply(on_coweights, x.c)}; }
    Weight apply(const Weight& x) const { return {mat_apply(on_weights, x.c)}; }
    bool operator==(const WeylElement& o) const { return on_coweights == o.on_coweights; }
};

// Z^N / column-span, described by its Smith normal form.
struct AbelianQuotient {
    std::vector<i64> torsion;  // invariant factors > 1
    int free_rank = 0;
    Mat proj;                  // rows: torsion coords first, then free coords

    // coordinates of the class of x: torsion entries reduced mod factor
    Vec project(const Vec& x) const;
    bool is_free_rank_one() const { return torsion.empty() && free_rank == 1; }
    bool is_trivial() const { return torsion.empty() && free_rank == 0; }
};

struct RootDatum {
    int rank = 0;
    std::vector<Weight> simple_roots;     // alpha-check_i
    std::vector<Coweight> simple_coroots; // alpha_i
    std::vector<std::string> labels;

    Mat cartan;  // cartan[i][j] = <alpha_i, alpha-check_j>
    std::vector<Weight> positive_roots;
    std::vector<Coweight> positive_coroots;
    Weight two_rho;         // sum of positive roots
    Coweight two_rho_dual;  // sum of positive coroots
    RatMat fundamental_weight_rat;  // row j: omega-check_j in Lambda-check tensor Q

    int num_simple() const { return static_cast<int>(simple_roots.size()); }

    bool is_dominant(const Coweight& x) const;
    bool is_dominant_weight(const Weight& x) const;

    Coweight reflect(int i, const Coweight& x) const;
    Weight reflect(int i, const Weight& x) const;

    WeylElement identity_element() const;
    WeylElement simple_reflection(int i) const;
    // returns (dominant representative, w) with w(input) = representative
    std::pair<Coweight, WeylElement> dominantize(const Coweight& x) const;

    std::vector<Coweight> weyl_orbit(const Coweight& x, size_t cap = 10'000'000) const;
    std::vector<Weight> weyl_orbit(const Weight& x, size_t cap = 10'000'000) const;

    // longest element of the parabolic W_M; empty subset -> identity
    WeylElement longest_element(const std::vector<int>& subset) const;
    WeylElement longest_element() const;

    size_t weyl_order(size_t cap = 10'000'000) const;

    // mu = sum c_i alpha_i with c_i in Z_+, or nullopt
    std::optional<Vec> pos_part_decompose(const Coweight& mu) const;
    bool in_pos_span(const Coweight& mu) const { return pos_part_decompose(mu).has_value(); }

    // all dominant mu with lambda - mu in Lambda^pos (lambda itself included)
    std::vector<Coweight> dominant_below(const Coweight& lambda) const;

    AbelianQuotient pi1() const;           // Lambda / span(simple coroots)
    AbelianQuotient center_chars() const;  // Lambda-check / span(simple roots)

    // roles of roots and coroots swapped; representation theory of the
    // dual group happens on this datum
    RootDatum dual() const;
    // same lattices, only the simple roots/coroots indexed by `subset`
    RootDatum levi(const std::vector<int>& subset) const;
};

struct DatumSpec {
    int rank = 0;
    std::vector<Vec> simple_roots;
    std::vector<Vec> simple_coroots;
    std::vector<std::string> labels;
};

// Validates and caches: Cartan matrix, positive (co)roots, rho data.
// Throws std::invalid_argument on a malformed spec and std::runtime_error
// when the Weyl group fails to close within the cap.
RootDatum build_root_datum(const DatumSpec& spec, size_t orbit_cap = 10'000'000);

AbelianQuotient lattice_quotient(int rank, const std::vector<Vec>& span);

}  // namespace oneadm
