#include "oneadm/levi.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "oneadm/rep.hpp"

namespace oneadm {

LeviDatum restrict_to_levi(const AdmissibleDatum& a, const std::vector<int>& subset) {
    for (int i : subset)
        if (i < 0 || i >= a.datum.num_simple())
            throw std::invalid_argument("restrict_to_levi: invalid Dynkin index");
    LeviDatum L;
    L.parent = a;
    L.subset = subset;
    std::sort(L.subset.begin(), L.subset.end());
    L.m = a.datum.levi(L.subset);
    L.w0m = a.datum.longest_element(L.subset);
    Weight tr{Vec(a.datum.rank, 0)};
    for (const Weight& r : L.m.positive_roots) tr = tr + r;
    L.two_rho_m = tr;
    std::vector<Vec> span;
    for (const Coweight& c : L.m.simple_coroots) span.push_back(c.c);
    L.quotient = lattice_quotient(a.datum.rank, span);
    return L;
}

bool contains_M_S(const LeviDatum& L, const Coweight& lambda) {
    if (!L.m.is_dominant(lambda))
        throw std::invalid_argument("contains_M_S: lambda must be M-dominant");
    return contains(L.parent, L.parent.datum.dominantize(lambda).first);
}

ThetaLevel theta_level(const LeviDatum& L) {
    const RootDatum& g = L.parent.datum;
    std::vector<Coweight> orbit = g.weyl_orbit(L.parent.gamma);
    ThetaLevel t;
    for (const Coweight& v : orbit)
        if (L.m.is_dominant(v)) t.elements.push_back(v);
    std::sort(t.elements.begin(), t.elements.end());

    std::set<Vec> images;
    for (const Coweight& v : t.elements) {
        // M-minuscule: nothing strictly below in the M-order, and the
        // root pairings stay within {0,+-1}
        if (L.m.dominant_below(v) != std::vector<Coweight>{v})
            throw std::logic_error("theta_level: element is not M-minimal");
        for (const Weight& r : L.m.positive_roots) {
            i64 p = pairing(v, r);
            if (p < -1 || p > 1)
                throw std::logic_error("theta_level: pairing outside {0,+-1}");
        }
        Vec img = L.quotient.project(v.c);
        if (!images.insert(img).second)
            throw std::logic_error("theta_level: quotient map not injective on the level");
        t.images.push_back(img);
    }

    // the level must meet every W_M-orbit on W(gamma) exactly once
    std::set<Coweight> seen;
    size_t comps = 0;
    for (const Coweight& v : orbit) {
        if (seen.count(v)) continue;
        ++comps;
        std::vector<Coweight> frontier{v};
        seen.insert(v);
        while (!frontier.empty()) {
            std::vector<Coweight> next;
            for (const Coweight& x : frontier)
                for (int i : L.subset) {
                    Coweight y = g.reflect(i, x);
                    if (seen.insert(y).second) next.push_back(y);
                }
            frontier = std::move(next);
        }
    }
    if (comps != t.elements.size())
        throw std::logic_error("theta_level: level size differs from W_M-orbit count");
    return t;
}

std::optional<std::vector<Coweight>> decompose_certificate(const LeviDatum& L,
                                                           const Coweight& lambda) {
    if (!contains_M_S(L, lambda))
        throw std::invalid_argument("decompose_certificate: lambda outside the Levi monoid");
    i64 d = L.parent.degree(lambda);
    if (d < 0) throw std::logic_error("decompose_certificate: negative degree");
    if (d == 0) return std::vector<Coweight>{};
    ThetaLevel t = theta_level(L);
    std::vector<Coweight> tuple;
    auto search = [&](auto&& self, size_t from, i64 left, const Coweight& partial) -> bool {
        if (left == 0) return L.m.in_pos_span(partial - lambda);
        for (size_t i = from; i < t.elements.size(); ++i) {
            tuple.push_back(t.elements[i]);
            if (self(self, i, left - 1, partial + t.elements[i])) return true;
            tuple.pop_back();
        }
        return false;
    };
    if (search(search, 0, d, Coweight{Vec(L.parent.datum.rank, 0)})) return tuple;
    return std::nullopt;
}

namespace {

void record(LemmaCheck& c, const std::string& what, const Vec& v) {
    c.ok = false;
    std::string s = what + " (";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    c.violations.push_back(s + ")");
}

}  // namespace

LemmaCheck verify_levi_lemma(const LeviDatum& L, i64 k_max) {
    LemmaCheck out;
    const AdmissibleDatum& a = L.parent;
    const RootDatum& g = a.datum;
    RootDatum dual = g.dual();

    std::vector<Weight> basis{a.omega0};
    basis.insert(basis.end(), a.omega_i.begin(), a.omega_i.end());

    // semigroup members up to degree k_max and their full orbits
    std::vector<Coweight> members, member_orbit;
    for (i64 k = 0; k <= k_max; ++k)
        for (const Coweight& l : level_set(a, k).elements) {
            members.push_back(l);
            for (const Coweight& v : g.weyl_orbit(l)) member_orbit.push_back(v);
        }

    // coweight-side sample of the Levi monoid: M-dominant orbit reps
    std::set<Coweight> m_members;
    for (const Coweight& v : member_orbit) {
        Coweight md = L.m.dominantize(v).first;
        m_members.insert(md);
    }

    // weight-side sample: M-dominant orbit elements of dual-cone points
    std::set<Weight> dual_m_members;
    {
        Vec c(basis.size(), 0);
        while (true) {
            i64 total = 0;
            for (i64 x : c) total += x;
            if (total <= k_max) {
                Weight lam{Vec(g.rank, 0)};
                for (size_t j = 0; j < basis.size(); ++j) lam = lam + c[j] * basis[j];
                for (const Weight& w : g.weyl_orbit(lam)) {
                    bool mdom = true;
                    for (int i : L.subset)
                        if (pairing(g.simple_coroots[i], w) < 0) mdom = false;
                    if (mdom) dual_m_members.insert(w);
                }
            }
            size_t j = 0;
            while (j < c.size() && c[j] == k_max) c[j++] = 0;
            if (j == c.size()) break;
            ++c[j];
        }
    }

    // coweight side: test set = sampled members plus perturbations
    std::set<Coweight> test_cw;
    for (const Coweight& v : m_members) {
        test_cw.insert(v);
        for (const Coweight& cr : g.simple_coroots) {
            for (const Coweight& cand : {v + cr, v - cr})
                if (L.m.is_dominant(cand)) test_cw.insert(cand);
        }
        if (L.m.is_dominant(v - a.omega)) test_cw.insert(v - a.omega);
    }
    for (const Coweight& lam : test_cw) {
        bool by_def = contains_M_S(L, lam);
        bool by_orbit = true;
        for (const Coweight& v : g.weyl_orbit(lam))
            for (const Weight& b : basis)
                if (pairing(v, b) < 0) by_orbit = false;
        bool by_w0m = true;
        Coweight wl = L.w0m.apply(lam);
        for (const Weight& lc : dual_m_members)
            if (pairing(wl, lc) < 0) by_w0m = false;
        if (by_def != by_orbit) record(out, "coweight orbit identity", lam.c);
        if (by_def != by_w0m) record(out, "coweight w0M identity", lam.c);
    }

    // weight side: test set = sampled members plus perturbations
    std::set<Weight> test_w;
    for (const Weight& w : dual_m_members) {
        test_w.insert(w);
        for (const Weight& r : g.simple_roots) {
            for (const Weight& cand : {w + r, w - r}) {
                bool mdom = true;
                for (int i : L.subset)
                    if (pairing(g.simple_coroots[i], cand) < 0) mdom = false;
                if (mdom) test_w.insert(cand);
            }
        }
    }
    for (const Weight& lc : test_w) {
        // definition: the W-dominant representative lies in the dual cone
        Weight wd{dual.dominantize(Coweight{lc.c}).first.c};
        bool by_def = dual_cone_contains(a, wd);
        bool by_orbit = true;
        for (const Coweight& v : member_orbit)
            if (pairing(v, lc) < 0) by_orbit = false;
        bool by_w0m = true;
        for (const Coweight& v : m_members)
            if (pairing(L.w0m.apply(v), lc) < 0) by_w0m = false;
        if (by_def != by_orbit) record(out, "weight orbit identity", lc.c);
        if (by_def != by_w0m) record(out, "weight w0M identity", lc.c);
    }
    return out;
}

i64 vanishing_bound(const LeviDatum& L, i64 genus, i64 r) {
    if (static_cast<int>(L.subset.size()) == L.parent.datum.num_simple())
        throw std::invalid_argument("vanishing_bound: proper parabolic required");
    if (genus < 2) throw std::invalid_argument("vanishing_bound: genus >= 2 required");
    if (r < 1) throw std::invalid_argument("vanishing_bound: r >= 1 required");
    i64 c = 0;
    for (const Coweight& lam : theta_level(L).elements)
        c += r * (2 * genus - 2) * weyl_dimension(L.m, lam);
    return c;
}

}  // namespace oneadm
