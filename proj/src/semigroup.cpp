#include "oneadm/semigroup.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace oneadm {

GradedLevelSet level_set(const AdmissibleDatum& a, i64 k) {
    if (k < 0) throw std::invalid_argument("level_set: k >= 0 required");
    GradedLevelSet ls;
    ls.k = k;
    ls.elements = a.datum.dominant_below(k * a.gamma);
    return ls;
}

bool contains(const AdmissibleDatum& a, const Coweight& mu) {
    if (!a.datum.is_dominant(mu))
        throw std::invalid_argument("contains: mu must be dominant");
    Coweight w0mu = a.datum.longest_element().apply(mu);
    if (pairing(w0mu, a.omega0) < 0) return false;
    for (const Weight& oi : a.omega_i)
        if (pairing(w0mu, oi) < 0) return false;
    return true;
}

static std::optional<Vec> basis_coords(const AdmissibleDatum& a, const Weight& lc) {
    Mat cols(a.datum.rank, Vec(a.datum.rank));
    for (int i = 0; i < a.datum.rank; ++i) {
        cols[i][0] = a.omega0.c[i];
        for (size_t j = 0; j < a.omega_i.size(); ++j) cols[i][j + 1] = a.omega_i[j].c[i];
    }
    auto sol = solve_rational(cols, lc.c);
    if (!sol) return std::nullopt;
    Vec out(a.datum.rank);
    for (int i = 0; i < a.datum.rank; ++i) {
        if ((*sol)[i].denominator() != 1) return std::nullopt;  // unimodular basis: unreachable
        out[i] = (*sol)[i].numerator();
    }
    return out;
}

bool dual_cone_contains(const AdmissibleDatum& a, const Weight& lc) {
    auto c = basis_coords(a, lc);
    if (!c) return false;
    for (i64 x : *c)
        if (x < 0) return false;
    return true;
}

DualConeVerdict dual_cone_verify(const AdmissibleDatum& a, i64 k_max) {
    return dual_cone_verify(a, k_max, a.omega0, a.omega_i);
}

DualConeVerdict dual_cone_verify(const AdmissibleDatum& a, i64 k_max, const Weight& omega0,
                                 const std::vector<Weight>& omega_i) {
    DualConeVerdict v;
    const RootDatum& d = a.datum;
    WeylElement w0 = d.longest_element();
    std::vector<Coweight> w0_lambdas;
    for (i64 k = 0; k <= k_max; ++k)
        for (const Coweight& l : level_set(a, k).elements)
            w0_lambdas.push_back(w0.apply(l));

    std::vector<Weight> basis{omega0};
    basis.insert(basis.end(), omega_i.begin(), omega_i.end());

    // inclusion (a): every basis member pairs >= 0 with each w0(lambda)
    for (const Weight& b : basis)
        for (const Coweight& wl : w0_lambdas)
            if (pairing(wl, b) < 0) {
                v.bad_basis.push_back(b);
                v.ok = false;
                break;
            }

    // inclusion (b): box of integer combinations of the basis; any point
    // that is dominant and passes all inequalities must have nonnegative
    // coefficients throughout
    const i64 box = 3;
    Vec c(basis.size(), -box);
    while (true) {
        Weight cand{Vec(d.rank, 0)};
        for (size_t j = 0; j < basis.size(); ++j) cand = cand + c[j] * basis[j];
        bool dominant = true;
        for (const Coweight& cr : d.simple_coroots)
            if (pairing(cr, cand) < 0) {
                dominant = false;
                break;
            }
        if (dominant) {
            bool passes = true;
            for (const Coweight& wl : w0_lambdas)
                if (pairing(wl, cand) < 0) {
                    passes = false;
                    break;
                }
            bool nonneg = std::all_of(c.begin(), c.end(), [](i64 x) { return x >= 0; });
            if (passes && !nonneg) {
                v.outside_span.push_back(cand);
                v.ok = false;
            }
        }
        size_t j = 0;
        while (j < c.size() && c[j] == box) c[j++] = -box;
        if (j == c.size()) break;
        ++c[j];
    }
    return v;
}

namespace {

// number of Z+-representations of target by the generator list
i64 count_reps(const std::vector<Coweight>& gens, size_t idx, const Coweight& target,
               const AdmissibleDatum& a,
               std::map<std::pair<size_t, Vec>, i64>& memo) {
    if (is_zero(target.c)) return 1;
    if (idx == gens.size()) return 0;
    auto key = std::make_pair(idx, target.c);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    i64 total = 0;
    Coweight rest = target;
    while (true) {
        total += count_reps(gens, idx + 1, rest, a, memo);
        rest = rest - gens[idx];
        if (a.degree(rest) < 0) break;
    }
    memo[key] = total;
    return total;
}

}  // namespace

HilbertBasisReport hilbert_basis(const AdmissibleDatum& a, i64 k_max) {
    if (k_max < 1) throw std::invalid_argument("hilbert_basis: k_max >= 1 required");
    HilbertBasisReport rep;
    rep.verified_up_to = k_max;

    std::set<Coweight> members;
    std::vector<Coweight> elements;  // nonzero, by (degree, lex)
    for (i64 k = 1; k <= k_max; ++k)
        for (const Coweight& l : level_set(a, k).elements)
            if (!is_zero(l.c) && members.insert(l).second) elements.push_back(l);

    std::vector<Coweight> gens;
    for (const Coweight& mu : elements) {
        bool reducible = false;
        for (const Coweight& x : elements) {
            if (a.degree(x) >= a.degree(mu)) continue;
            Coweight diff = mu - x;
            if (!is_zero(diff.c) && members.count(diff)) {
                reducible = true;
                break;
            }
        }
        if (!reducible) gens.push_back(mu);
    }

    rep.is_free = true;
    std::map<std::pair<size_t, Vec>, i64> memo;
    for (const Coweight& mu : elements) {
        i64 n = count_reps(gens, 0, mu, a, memo);
        if (n != 1) {
            rep.is_free = false;
            rep.representation_failures.push_back(mu);
        }
    }
    for (const Coweight& g : gens) rep.generators.emplace_back(g, a.degree(g));
    std::sort(rep.generators.begin(), rep.generators.end(),
              [](const auto& x, const auto& y) {
                  return std::tie(x.second, x.first) < std::tie(y.second, y.first);
              });
    return rep;
}

}  // namespace oneadm
