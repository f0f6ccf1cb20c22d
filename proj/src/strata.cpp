#include "oneadm/strata.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace oneadm {

std::optional<int> affine_compare(const AffineDim& a, const AffineDim& b) {
    if (!a.comparable(b)) return std::nullopt;
    if (a.constant < b.constant) return -1;
    if (a.constant > b.constant) return 1;
    return 0;
}

namespace {

bool rev_lex_before(const Coweight& a, const Coweight& b) {
    for (size_t i = a.c.size(); i-- > 0;)
        if (a.c[i] != b.c[i]) return a.c[i] < b.c[i];
    return false;
}

// class addition in the quotient: componentwise sum with torsion
// coordinates reduced
Vec class_add(const AbelianQuotient& q, Vec a, const Vec& b) {
    for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    for (size_t i = 0; i < q.torsion.size(); ++i) {
        a[i] %= q.torsion[i];
        if (a[i] < 0) a[i] += q.torsion[i];
    }
    return a;
}

}  // namespace

std::vector<TauPartition> tau_partitions(const AdmissibleDatum& a, i64 d, const Coweight& mu) {
    const RootDatum& g = a.datum;
    if (d < 0 || !g.in_pos_span(mu))
        throw std::invalid_argument("tau_partitions: need d >= 0 and mu in Lambda^pos");
    WeylElement w0 = g.longest_element();
    Coweight total = d * a.gamma + w0.apply(mu);
    if (!g.is_dominant(total))
        throw std::invalid_argument("tau_partitions: d*gamma + w0(mu) is not dominant");

    // candidate parts: nonzero monoid elements of degree 1..d
    std::vector<std::pair<i64, Coweight>> cand;  // (degree, part)
    for (i64 e = 1; e <= d; ++e)
        for (const Coweight& v : level_set(a, e).elements)
            if (!is_zero(v.c)) cand.emplace_back(e, v);
    std::sort(cand.begin(), cand.end(), [](const auto& x, const auto& y) {
        if (x.first != y.first) return x.first < y.first;
        return rev_lex_before(x.second, y.second);
    });

    std::vector<TauPartition> out;
    std::vector<std::pair<i64, Coweight>> chosen;
    auto emit = [&]() {
        TauPartition t;
        t.d = d;
        t.mu = mu;
        for (const auto& [e, v] : chosen)
            t.parts.emplace_back(e, w0.apply(v - e * a.gamma));
        t.dim = y_dimension(a, d, mu, t.length());
        out.push_back(std::move(t));
    };
    auto search = [&](auto&& self, size_t from, i64 left, const Coweight& rest) -> void {
        if (left == 0) {
            if (is_zero(rest.c)) emit();
            return;
        }
        for (size_t i = from; i < cand.size(); ++i) {
            if (cand[i].first > left) break;
            chosen.push_back(cand[i]);
            self(self, i, left - cand[i].first, rest - cand[i].second);
            chosen.pop_back();
        }
    };
    search(search, 0, d, total);
    if (d == 0) {
        // the empty partition of zero
        out.clear();
        TauPartition t;
        t.d = 0;
        t.mu = mu;
        t.dim = y_dimension(a, 0, mu, 0);
        out.push_back(std::move(t));
    }
    return out;
}

std::vector<MuDecomposition> mu_decompositions(const LeviDatum& L, const Coweight& mu) {
    i64 d = L.parent.degree(mu);
    if (d < 0) throw std::invalid_argument("mu_decompositions: negative degree");
    Vec target = L.quotient.project(mu.c);
    if (d == 0) {
        if (!is_zero(target))
            throw std::invalid_argument("mu_decompositions: class not in the Levi monoid");
        return {MuDecomposition{{}, true}};
    }
    ThetaLevel t = theta_level(L);

    // classes of each degree up to d, as sums of degree-one classes
    std::vector<std::set<Vec>> by_degree(d + 1);
    for (const Vec& v : t.images) by_degree[1].insert(v);
    for (i64 e = 2; e <= d; ++e)
        for (const Vec& x : by_degree[e - 1])
            for (const Vec& v : t.images) by_degree[e].insert(class_add(L.quotient, x, v));
    if (!by_degree[d].count(target))
        throw std::invalid_argument("mu_decompositions: class not in the Levi monoid");

    std::vector<std::pair<i64, Vec>> cand;  // (degree, class)
    for (i64 e = 1; e <= d; ++e)
        for (const Vec& v : by_degree[e]) cand.emplace_back(e, v);

    std::vector<MuDecomposition> out;
    std::vector<MuPart> chosen;
    auto search = [&](auto&& self, size_t from, i64 left, const Vec& acc) -> void {
        if (left == 0) {
            if (acc != target) return;
            i64 total_n = 0;
            for (const MuPart& p : chosen) total_n += p.n;
            out.push_back(MuDecomposition{chosen, total_n == d});
            return;
        }
        for (size_t i = from; i < cand.size(); ++i) {
            const auto& [e, v] = cand[i];
            for (i64 n = 1; n * e <= left; ++n) {
                Vec next = acc;
                for (i64 j = 0; j < n; ++j) next = class_add(L.quotient, next, v);
                chosen.push_back(MuPart{n, v, e});
                self(self, i + 1, left - n * e, next);
                chosen.pop_back();
            }
        }
    };
    search(search, 0, d, Vec(target.size(), 0));
    return out;
}

namespace {

i64 halved_pairing(const Coweight& x, const Weight& doubled) {
    i64 p = pairing(x, doubled);
    if (p % 2 != 0) throw std::logic_error("orbit stratum dimension is not integral");
    return p / 2;
}

void require_orbit(const AdmissibleDatum& a, const Coweight& wgamma) {
    std::vector<Coweight> orbit = a.datum.weyl_orbit(a.gamma);
    if (std::find(orbit.begin(), orbit.end(), wgamma) == orbit.end())
        throw std::invalid_argument("coweight is not in the orbit of gamma");
}

}  // namespace

i64 orbit_stratum_dim(const AdmissibleDatum& a, const Coweight& wgamma) {
    require_orbit(a, wgamma);
    i64 v = halved_pairing(a.gamma + wgamma, a.datum.two_rho);
    if (v < 0) throw std::logic_error("orbit stratum dimension is negative");
    return v;
}

i64 orbit_stratum_dim(const LeviDatum& L, const Coweight& wgamma) {
    const AdmissibleDatum& a = L.parent;
    require_orbit(a, wgamma);
    i64 best = -1;
    std::set<Coweight> seen{wgamma};
    std::vector<Coweight> frontier{wgamma};
    while (!frontier.empty()) {
        std::vector<Coweight> next;
        for (const Coweight& x : frontier) {
            best = std::max(best, halved_pairing(a.gamma + x, a.datum.two_rho));
            for (int i : L.subset) {
                Coweight y = a.datum.reflect(i, x);
                if (seen.insert(y).second) next.push_back(y);
            }
        }
        frontier = std::move(next);
    }
    if (L.m.is_dominant(wgamma) &&
        best != halved_pairing(a.gamma + wgamma, a.datum.two_rho))
        throw std::logic_error("maximum not attained at the M-dominant element");
    return best;
}

i64 fibration_fiber_dim(const LeviDatum& L, const Coweight& wgamma) {
    const AdmissibleDatum& a = L.parent;
    require_orbit(a, wgamma);
    if (!L.m.is_dominant(wgamma))
        throw std::invalid_argument("fibration_fiber_dim: element must be M-dominant");
    i64 p = pairing(a.gamma + wgamma, a.datum.two_rho) - 2 * pairing(wgamma, L.two_rho_m);
    if (p % 2 != 0) throw std::logic_error("fiber dimension is not integral");
    if (p < 0) throw std::logic_error("fiber dimension is negative");
    return p / 2;
}

i64 convolution_dim(const LeviDatum& L, const MuDecomposition& dec) {
    if (!dec.general_position)
        throw std::invalid_argument("convolution_dim: decomposition must be in general position");
    ThetaLevel t = theta_level(L);
    const RootDatum& g = L.parent.datum;
    i64 d = 0;
    Coweight weighted{Vec(g.rank, 0)};  // sum n_k * lambda_k
    for (const MuPart& p : dec.parts) {
        if (p.degree != 1)
            throw std::invalid_argument("convolution_dim: parts must have degree one");
        auto it = std::find(t.images.begin(), t.images.end(), p.image);
        if (it == t.images.end())
            throw std::invalid_argument("convolution_dim: class has no degree-one level element");
        weighted = weighted + p.n * t.elements[it - t.images.begin()];
        d += p.n;
    }
    i64 twice = pairing(d * L.parent.gamma, g.two_rho) + pairing(weighted, g.two_rho) -
                2 * pairing(weighted, L.two_rho_m);
    if (twice % 2 != 0) throw std::logic_error("convolution dimension is not integral");
    if (twice < 0) throw std::logic_error("convolution dimension is negative");
    return twice / 2;
}

bool whittaker_support(const AdmissibleDatum& a,
                       const std::vector<std::pair<i64, Coweight>>& parts) {
    const RootDatum& g = a.datum;
    Coweight w0g = g.longest_element().apply(a.gamma);
    for (const auto& [dk, muk] : parts) {
        if (dk < 0 || !g.in_pos_span(muk))
            throw std::invalid_argument("whittaker_support: need d_k >= 0, mu_k in Lambda^pos");
        if (!g.is_dominant(-(dk * w0g) - muk)) return false;
    }
    return true;
}

HeckeTransition hecke_transition(const AdmissibleDatum& a, const Coweight& mu,
                                 const Coweight& wgamma, i64 d_x, const Coweight& mu_x) {
    const RootDatum& g = a.datum;
    require_orbit(a, wgamma);
    if (d_x < 0 || !g.in_pos_span(mu) || !g.in_pos_span(mu_x))
        throw std::invalid_argument("hecke_transition: need d_x >= 0, mu and mu_x in Lambda^pos");
    WeylElement w0 = g.longest_element();
    Coweight w0g = w0.apply(a.gamma);
    HeckeTransition out;
    out.mu_prime = mu + w0.apply(wgamma) - w0g;
    bool conductor_dominant = g.is_dominant(-(d_x * w0g) - mu_x);
    bool local_dominant = g.is_dominant(d_x * a.gamma + w0.apply(mu_x) + wgamma);
    out.contributes = conductor_dominant && local_dominant;
    if (out.contributes && !g.in_pos_span(out.mu_prime))
        throw std::logic_error("hecke_transition: contributing mu' left Lambda^pos");
    return out;
}

AffineDim y_dimension(const AdmissibleDatum& a, i64 d, const Coweight& mu, i64 m) {
    AffineDim out;
    out.constant = m + pairing(d * a.gamma - mu, a.datum.two_rho);
    out.d_n = 1;
    return out;
}

}  // namespace oneadm
