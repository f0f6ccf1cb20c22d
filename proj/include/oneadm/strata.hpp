// Stratification bookkeeping: partitions of graded-monoid elements,
// decompositions in the Levi quotient with the general-position flag,
// orbit-stratum and fibration-fiber dimensions, the Whittaker support
// predicate, local transition data for the degree-raising operator, and
// dimension expressions with opaque stack-dimension symbols.

#pragma once

#include "oneadm/levi.hpp"

namespace oneadm {

// integer constant plus formal multiples of three opaque symbols;
// comparable only when the symbol coefficients agree
struct AffineDim {
    i64 constant = 0;
    i64 d_n = 0;
    i64 d_g = 0;
    i64 d_m = 0;

    bool operator==(const AffineDim&) const = default;
    bool comparable(const AffineDim& o) const {
        return d_n == o.d_n && d_g == o.d_g && d_m == o.d_m;
    }
};

inline AffineDim operator+(const AffineDim& a, const AffineDim& b) {
    return {a.constant + b.constant, a.d_n + b.d_n, a.d_g + b.d_g, a.d_m + b.d_m};
}
inline AffineDim operator-(const AffineDim& a, const AffineDim& b) {
    return {a.constant - b.constant, a.d_n - b.d_n, a.d_g - b.d_g, a.d_m - b.d_m};
}

// sign of a - b, or nullopt when the symbols differ
std::optional<int> affine_compare(const AffineDim& a, const AffineDim& b);

// a multiset presentation d*gamma + w0(mu) = sum_k (d_k*gamma + w0(mu_k))
// with every part a nonzero monoid element
struct TauPartition {
    std::vector<std::pair<i64, Coweight>> parts;  // (d_k, mu_k), canonical order
    i64 d = 0;
    Coweight mu;
    AffineDim dim;  // m + <d*gamma - mu, 2 rho-check> + d_N

    i64 length() const { return static_cast<i64>(parts.size()); }
};

struct MuPart {
    i64 n = 0;      // multiplicity
    Vec image;      // class in the Levi quotient
    i64 degree = 0;

    auto operator<=>(const MuPart&) const = default;
};

struct MuDecomposition {
    std::vector<MuPart> parts;      // distinct classes, canonical order
    bool general_position = false;  // sum of multiplicities equals the degree
};

struct HeckeTransition {
    Coweight mu_prime;
    bool contributes = false;
};

// all partitions of d*gamma + w0(mu); requires mu in Lambda^pos and the
// total dominant
std::vector<TauPartition> tau_partitions(const AdmissibleDatum& a, i64 d, const Coweight& mu);

// all ways to write the class of mu as sum n_k * mu_k with distinct
// nonzero classes of the Levi monoid; requires the class to lie in it
std::vector<MuDecomposition> mu_decompositions(const LeviDatum& L, const Coweight& mu);

// <gamma + w(gamma), rho-check> for an orbit element; asserts parity
i64 orbit_stratum_dim(const AdmissibleDatum& a, const Coweight& wgamma);

// maximum of the above over the W_M-orbit of wgamma; when wgamma is
// M-dominant the maximum is attained at wgamma itself (asserted)
i64 orbit_stratum_dim(const LeviDatum& L, const Coweight& wgamma);

// <gamma + w(gamma), rho-check> - <w(gamma), 2 rho-check_M> for an
// M-dominant orbit element; asserts nonnegativity
i64 fibration_fiber_dim(const LeviDatum& L, const Coweight& wgamma);

// <d*gamma, rho-check> + sum <n_k lambda_k, rho-check - 2 rho-check_M>
// over a general-position decomposition; lambda_k is the degree-one
// level element mapping to the class mu_k
i64 convolution_dim(const LeviDatum& L, const MuDecomposition& dec);

// every nu_k = -w0(gamma) d_k - mu_k is dominant
bool whittaker_support(const AdmissibleDatum& a,
                       const std::vector<std::pair<i64, Coweight>>& parts);

// mu' = mu + w0(w gamma) - w0(gamma); contributes when the conductor
// -w0(gamma) d_x - mu_x is dominant and d_x*gamma + w0(mu_x) + w(gamma)
// is dominant
HeckeTransition hecke_transition(const AdmissibleDatum& a, const Coweight& mu,
                                 const Coweight& wgamma, i64 d_x, const Coweight& mu_x);

// m + <d*gamma - mu, 2 rho-check> + d_N; the open stratum is m = d, mu = 0
AffineDim y_dimension(const AdmissibleDatum& a, i64 d, const Coweight& mu, i64 m);

}  // namespace oneadm
