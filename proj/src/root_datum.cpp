#include "oneadm/root_datum.hpp"

#include <algorithm>
#include <set>
#include <numeric>
#include <stdexcept>

namespace oneadm {

Vec AbelianQuotient::project(const Vec& x) const {
    Vec y = mat_apply(proj, x);
    for (size_t i = 0; i < torsion.size(); ++i) {
        y[i] %= torsion[i];
        if (y[i] < 0) y[i] += torsion[i];
    }
    return y;
}

bool RootDatum::is_dominant(const Coweight& x) const {
    for (const auto& r : simple_roots)
        if (pairing(x, r) < 0) return false;
    return true;
}

bool RootDatum::is_dominant_weight(const Weight& x) const {
    for (const auto& c : simple_coroots)
        if (pairing(c, x) < 0) return false;
    return true;
}

Coweight RootDatum::reflect(int i, const Coweight& x) const {
    return x - pairing(x, simple_roots[i]) * simple_coroots[i];
}

Weight RootDatum::reflect(int i, const Weight& x) const {
    return x - pairing(simple_coroots[i], x) * simple_roots[i];
}

WeylElement RootDatum::identity_element() const {
    return {identity_mat(rank), identity_mat(rank), {}};
}

WeylElement RootDatum::simple_reflection(int i) const {
    WeylElement w = identity_element();
    w.word = {i};
    for (int j = 0; j < rank; ++j) {
        Vec e(rank, 0);
        e[j] = 1;
        Vec rc = reflect(i, Coweight{e}).c;
        Vec rw = reflect(i, Weight{e}).c;
        for (int k = 0; k < rank; ++k) {
            w.on_coweights[k][j] = rc[k];
            w.on_weights[k][j] = rw[k];
        }
    }
    return w;
}

static WeylElement compose(const WeylElement& a, const WeylElement& b) {
    // (a*b)(x) = a(b(x))
    WeylElement r;
    r.on_coweights = mat_mul(a.on_coweights, b.on_coweights);
    r.on_weights = mat_mul(a.on_weights, b.on_weights);
    r.word = a.word;
    r.word.insert(r.word.end(), b.word.begin(), b.word.end());
    return r;
}

std::pair<Coweight, WeylElement> RootDatum::dominantize(const Coweight& x) const {
    Coweight cur = x;
    WeylElement w = identity_element();
    bool moved = true;
    while (moved) {
        moved = false;
        for (int i = 0; i < num_simple(); ++i) {
            if (pairing(cur, simple_roots[i]) < 0) {
                cur = reflect(i, cur);
                w = compose(simple_reflection(i), w);
                moved = true;
            }
        }
    }
    return {cur, w};
}

template <typename V, typename ReflectFn>
static std::vector<V> orbit_impl(const V& x, int nsimple, size_t cap, ReflectFn reflect) {
    std::set<V> seen{x};
    std::vector<V> frontier{x};
    while (!frontier.empty()) {
        std::vector<V> next;
        for (const auto& v : frontier)
            for (int i = 0; i < nsimple; ++i) {
                V r = reflect(i, v);
                if (seen.insert(r).second) {
                    next.push_back(r);
                    if (seen.size() > cap)
                        throw std::runtime_error("weyl_orbit: orbit cap exceeded");
                }
            }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

std::vector<Coweight> RootDatum::weyl_orbit(const Coweight& x, size_t cap) const {
    return orbit_impl(x, num_simple(), cap,
                      [this](int i, const Coweight& v) { return reflect(i, v); });
}

std::vector<Weight> RootDatum::weyl_orbit(const Weight& x, size_t cap) const {
    return orbit_impl(x, num_simple(), cap,
                      [this](int i, const Weight& v) { return reflect(i, v); });
}

WeylElement RootDatum::longest_element(const std::vector<int>& subset) const {
    for (int i : subset)
        if (i < 0 || i >= num_simple())
            throw std::invalid_argument("longest_element: invalid Dynkin index");
    // start from a coweight strictly dominant for the sub-system and walk
    // it down to the antidominant chamber
    Mat rows;
    for (int i : subset) rows.push_back(simple_roots[i].c);
    if (rows.empty()) return identity_element();
    // x with <x, alpha-check_i> = 1 for i in subset (rational, scaled)
    Vec ones(rows.size(), 1);
    auto sol = solve_rational(rows, ones);
    if (!sol) throw std::logic_error("longest_element: no regular vector");
    i64 lcm = 1;
    for (const Rat& q : *sol) lcm = std::lcm(lcm, q.denominator());
    Vec x(rank);
    for (int j = 0; j < rank; ++j) x[j] = ((*sol)[j] * lcm).numerator();
    Coweight cur{x};
    WeylElement w = identity_element();
    bool moved = true;
    while (moved) {
        moved = false;
        for (int i : subset)
            if (pairing(cur, simple_roots[i]) > 0) {
                cur = reflect(i, cur);
                w = compose(simple_reflection(i), w);
                moved = true;
            }
    }
    return w;
}

WeylElement RootDatum::longest_element() const {
    std::vector<int> all(num_simple());
    for (int i = 0; i < num_simple(); ++i) all[i] = i;
    return longest_element(all);
}

size_t RootDatum::weyl_order(size_t cap) const {
    if (num_simple() == 0) return 1;
    Mat rows;
    for (const auto& r : simple_roots) rows.push_back(r.c);
    Vec ones(rows.size(), 1);
    auto sol = solve_rational(rows, ones);
    if (!sol) throw std::logic_error("weyl_order: no regular vector");
    i64 lcm = 1;
    for (const Rat& q : *sol) lcm = std::lcm(lcm, q.denominator());
    Vec x(rank);
    for (int j = 0; j < rank; ++j) x[j] = ((*sol)[j] * lcm).numerator();
    return weyl_orbit(Coweight{x}, cap).size();
}

std::optional<Vec> RootDatum::pos_part_decompose(const Coweight& mu) const {
    if (num_simple() == 0) return is_zero(mu.c) ? std::optional<Vec>(Vec{}) : std::nullopt;
    Mat cols(rank, Vec(num_simple()));
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < num_simple(); ++j) cols[i][j] = simple_coroots[j].c[i];
    auto sol = solve_rational(cols, mu.c);
    if (!sol) return std::nullopt;
    // coroots are linearly independent, so the solution is unique
    Vec coeff(num_simple());
    for (int j = 0; j < num_simple(); ++j) {
        if ((*sol)[j].denominator() != 1 || (*sol)[j].numerator() < 0) return std::nullopt;
        coeff[j] = (*sol)[j].numerator();
    }
    // residual must vanish (solve_rational already guarantees consistency)
    return coeff;
}

std::vector<Coweight> RootDatum::dominant_below(const Coweight& lambda) const {
    std::vector<Coweight> out;
    if (num_simple() == 0) {
        out.push_back(lambda);
        return out;
    }
    // bound: c_j = <lambda - mu, omega-check_j> <= <lambda, omega-check_j>
    std::vector<i64> bound(num_simple());
    for (int j = 0; j < num_simple(); ++j) {
        Rat b(0);
        for (int k = 0; k < rank; ++k) b += Rat(lambda.c[k]) * fundamental_weight_rat[j][k];
        if (b < Rat(0)) return out;  // lambda not even weakly above the walls
        bound[j] = b.numerator() / b.denominator();
    }
    Vec c(num_simple(), 0);
    while (true) {
        Coweight mu = lambda;
        for (int j = 0; j < num_simple(); ++j) mu = mu - c[j] * simple_coroots[j];
        if (is_dominant(mu)) out.push_back(mu);
        int j = 0;
        while (j < num_simple() && c[j] == bound[j]) { c[j] = 0; ++j; }
        if (j == num_simple()) break;
        ++c[j];
    }
    std::sort(out.begin(), out.end());
    return out;
}

AbelianQuotient lattice_quotient(int rank, const std::vector<Vec>& span) {
    Mat a(rank, Vec(span.size(), 0));
    for (int i = 0; i < rank; ++i)
        for (size_t j = 0; j < span.size(); ++j) a[i][j] = span[j][i];
    SmithForm s = smith_form(a);
    AbelianQuotient q;
    // U*A*V = D: classes of x are read off from U*x
    for (int i = 0; i < s.rank; ++i)
        if (s.invariant_factors[i] > 1) q.torsion.push_back(s.invariant_factors[i]);
    q.free_rank = rank - s.rank;
    // rows with factor 1 contribute nothing; order: torsion rows then free rows
    for (int i = 0; i < s.rank; ++i)
        if (s.invariant_factors[i] > 1) q.proj.push_back(s.u[i]);
    for (int i = s.rank; i < rank; ++i) q.proj.push_back(s.u[i]);
    return q;
}

AbelianQuotient RootDatum::pi1() const {
    std::vector<Vec> span;
    for (const auto& c : simple_coroots) span.push_back(c.c);
    return lattice_quotient(rank, span);
}

AbelianQuotient RootDatum::center_chars() const {
    std::vector<Vec> span;
    for (const auto& r : simple_roots) span.push_back(r.c);
    return lattice_quotient(rank, span);
}

RootDatum RootDatum::dual() const {
    DatumSpec spec;
    spec.rank = rank;
    for (const auto& c : simple_coroots) spec.simple_roots.push_back(c.c);
    for (const auto& r : simple_roots) spec.simple_coroots.push_back(r.c);
    spec.labels = labels;
    return build_root_datum(spec);
}

RootDatum RootDatum::levi(const std::vector<int>& subset) const {
    DatumSpec spec;
    spec.rank = rank;
    for (int i : subset) {
        if (i < 0 || i >= num_simple()) throw std::invalid_argument("levi: invalid Dynkin index");
        spec.simple_roots.push_back(simple_roots[i].c);
        spec.simple_coroots.push_back(simple_coroots[i].c);
        if (!labels.empty()) spec.labels.push_back(labels[i]);
    }
    return build_root_datum(spec);
}

RootDatum build_root_datum(const DatumSpec& spec, size_t orbit_cap) {
    if (spec.rank <= 0) throw std::invalid_argument("root datum: rank must be positive");
    if (spec.simple_roots.size() != spec.simple_coroots.size())
        throw std::invalid_argument("root datum: roots/coroots count mismatch");
    RootDatum d;
    d.rank = spec.rank;
    for (const auto& v : spec.simple_roots) {
        if (static_cast<int>(v.size()) != spec.rank)
            throw std::invalid_argument("root datum: root length != rank");
        d.simple_roots.push_back({v});
    }
    for (const auto& v : spec.simple_coroots) {
        if (static_cast<int>(v.size()) != spec.rank)
            throw std::invalid_argument("root datum: coroot length != rank");
        d.simple_coroots.push_back({v});
    }
    d.labels = spec.labels;
    int n = d.num_simple();

    d.cartan = Mat(n, Vec(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            i64 c = pairing(d.simple_coroots[i], d.simple_roots[j]);
            d.cartan[i][j] = c;
            if (i == j && c != 2)
                throw std::invalid_argument("root datum: Cartan diagonal entry != 2");
            if (i != j && c > 0)
                throw std::invalid_argument("root datum: positive off-diagonal Cartan entry");
        }

    // linear independence
    auto check_independent = [&](const std::vector<Vec>& vs, const char* what) {
        Mat cols(spec.rank, Vec(vs.size()));
        for (int i = 0; i < spec.rank; ++i)
            for (size_t j = 0; j < vs.size(); ++j) cols[i][j] = vs[j][i];
        if (static_cast<size_t>(smith_form(cols).rank) != vs.size())
            throw std::invalid_argument(std::string("root datum: ") + what +
                                        " are linearly dependent");
    };
    if (n > 0) {
        check_independent(spec.simple_roots, "simple roots");
        check_independent(spec.simple_coroots, "simple coroots");
    }

    // fundamental weights of the derived group, rational: omega-check_j =
    // sum_k x_k alpha-check_k with C x = e_j
    d.fundamental_weight_rat.assign(n, RatVec(spec.rank, Rat(0)));
    for (int j = 0; j < n; ++j) {
        Vec e(n, 0);
        e[j] = 1;
        auto x = solve_rational(d.cartan, e);
        if (!x) throw std::invalid_argument("root datum: singular Cartan matrix");
        for (int k = 0; k < n; ++k)
            for (int t = 0; t < spec.rank; ++t)
                d.fundamental_weight_rat[j][t] += (*x)[k] * Rat(d.simple_roots[k].c[t]);
    }

    // positive roots via orbit closure; finiteness check doubles as the
    // infinite-Weyl-group guard
    if (n > 0) {
        std::set<Weight> roots;
        for (const auto& r : d.simple_roots)
            for (const auto& w : orbit_impl(r, n, orbit_cap,
                                            [&d](int i, const Weight& v) { return d.reflect(i, v); }))
                roots.insert(w);
        Weight zero{Vec(spec.rank, 0)};
        d.two_rho = zero;
        for (const auto& r : roots) {
            // positive = nonnegative combination of simple roots
            Mat rows;
            Mat cols(spec.rank, Vec(n));
            for (int i = 0; i < spec.rank; ++i)
                for (int j = 0; j < n; ++j) cols[i][j] = d.simple_roots[j].c[i];
            auto sol = solve_rational(cols, r.c);
            bool pos = sol.has_value();
            if (pos)
                for (const Rat& q : *sol)
                    if (q < Rat(0)) pos = false;
            if (pos) {
                d.positive_roots.push_back(r);
                d.two_rho = d.two_rho + r;
            }
        }
        std::set<Coweight> coroots;
        for (const auto& c : d.simple_coroots)
            for (const auto& w : orbit_impl(c, n, orbit_cap,
                                            [&d](int i, const Coweight& v) { return d.reflect(i, v); }))
                coroots.insert(w);
        d.two_rho_dual = Coweight{Vec(spec.rank, 0)};
        for (const auto& c : coroots) {
            Mat cols(spec.rank, Vec(n));
            for (int i = 0; i < spec.rank; ++i)
                for (int j = 0; j < n; ++j) cols[i][j] = d.simple_coroots[j].c[i];
            auto sol = solve_rational(cols, c.c);
            bool pos = sol.has_value();
            if (pos)
                for (const Rat& q : *sol)
                    if (q < Rat(0)) pos = false;
            if (pos) {
                d.positive_coroots.push_back(c);
                d.two_rho_dual = d.two_rho_dual + c;
            }
        }
        if (d.positive_roots.size() != d.positive_coroots.size())
            throw std::invalid_argument("root datum: root/coroot count mismatch after closure");
    } else {
        d.two_rho = Weight{Vec(spec.rank, 0)};
        d.two_rho_dual = Coweight{Vec(spec.rank, 0)};
    }
    std::sort(d.positive_roots.begin(), d.positive_roots.end());
    std::sort(d.positive_coroots.begin(), d.positive_coroots.end());
    return d;
}

}  // namespace oneadm
