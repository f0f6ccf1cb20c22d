#include "oneadm/admissible.hpp"

#include <stdexcept>

namespace oneadm {

namespace {

std::string vec_str(const Vec& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

std::string quotient_str(const AbelianQuotient& q) {
    std::string s = "torsion[";
    for (size_t i = 0; i < q.torsion.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(q.torsion[i]);
    }
    return s + "] free rank " + std::to_string(q.free_rank);
}

}  // namespace

MinusculeCheck is_minuscule(const RootDatum& d, const Coweight& gamma) {
    if (!d.is_dominant(gamma))
        throw std::invalid_argument("is_minuscule: gamma must be dominant");
    MinusculeCheck r;
    if (is_zero(gamma.c)) {
        r.detail = "gamma = 0";
        return r;
    }
    for (const Coweight& mu : d.dominant_below(gamma))
        if (mu != gamma) {
            r.strictly_smaller = mu;
            r.detail = "dominant " + vec_str(mu.c) + " lies strictly below";
            return r;
        }
    r.ok = true;
    // consequence of minimality: pairings with roots stay in {0,+-1}
    for (const Weight& a : d.positive_roots) {
        i64 p = pairing(gamma, a);
        if (p < -1 || p > 1)
            throw std::logic_error("is_minuscule: minimal but <gamma,root> outside {0,+-1}");
    }
    return r;
}

AdmissibilityReport check_one_admissible(const RootDatum& d, const Coweight& gamma) {
    if (!d.is_dominant(gamma))
        throw std::invalid_argument("check_one_admissible: gamma must be dominant");
    AdmissibilityReport rep;

    AbelianQuotient zc = d.center_chars();
    rep.center.ok = zc.is_free_rank_one();
    rep.center.detail = "X*(Z): " + quotient_str(zc);

    AbelianQuotient pi1 = d.pi1();
    rep.fundamental_group.ok = pi1.is_free_rank_one();
    rep.fundamental_group.detail = "pi_1: " + quotient_str(pi1);

    MinusculeCheck mc = is_minuscule(d, gamma);
    if (!mc.ok) {
        rep.minuscule_generator.detail = "not minuscule: " + mc.detail;
    } else if (!pi1.is_free_rank_one()) {
        rep.minuscule_generator.detail = "pi_1 not infinite cyclic";
    } else {
        Vec cls = pi1.project(gamma.c);
        rep.minuscule_generator.ok = cls.size() == 1 && (cls[0] == 1 || cls[0] == -1);
        rep.minuscule_generator.detail =
            rep.minuscule_generator.ok
                ? "gamma minuscule, class generates pi_1"
                : "class of gamma " + vec_str(cls) + " does not generate pi_1";
    }

    // faithfulness: the orbit of gamma must span Lambda over Z
    std::vector<Coweight> orbit = d.weyl_orbit(gamma);
    Mat cols(d.rank, Vec(orbit.size()));
    for (int i = 0; i < d.rank; ++i)
        for (size_t j = 0; j < orbit.size(); ++j) cols[i][j] = orbit[j].c[i];
    SmithForm s = smith_form(cols);
    bool spans = s.rank == d.rank;
    for (i64 f : s.invariant_factors)
        if (f != 1) spans = false;
    rep.faithful.ok = spans;
    rep.faithful.detail =
        spans ? "orbit spans the coweight lattice"
              : "orbit span has index/corank: rank " + std::to_string(s.rank) + " of " +
                    std::to_string(d.rank);

    // sanity: minimal dominant elements at or below gamma, distinct in pi_1
    for (const Coweight& mu : d.dominant_below(gamma))
        if (!is_zero(mu.c) && d.dominant_below(mu).size() == 1)
            rep.degree_one_minuscule.push_back(mu);
    for (size_t i = 0; i < rep.degree_one_minuscule.size(); ++i)
        for (size_t j = i + 1; j < rep.degree_one_minuscule.size(); ++j)
            if (pi1.project(rep.degree_one_minuscule[i].c) ==
                pi1.project(rep.degree_one_minuscule[j].c))
                rep.injective_to_pi1 = false;

    rep.overall = rep.center.ok && rep.fundamental_group.ok &&
                  rep.minuscule_generator.ok && rep.faithful.ok;
    return rep;
}

std::pair<Weight, std::vector<Weight>> special_weight_basis(const RootDatum& d,
                                                            const Coweight& gamma) {
    if (d.rank != d.num_simple() + 1)
        throw std::runtime_error("special_weight_basis: lattice rank must exceed semisimple rank by 1");
    Coweight w0g = d.longest_element().apply(gamma);

    auto solve_integral = [&](const Mat& rows, const Vec& rhs, const char* what) -> Weight {
        auto sol = solve_rational(rows, rhs);
        if (!sol) throw std::runtime_error(std::string("special_weight_basis: no solution for ") + what);
        Vec x(d.rank);
        for (int k = 0; k < d.rank; ++k) {
            if ((*sol)[k].denominator() != 1)
                throw std::runtime_error(std::string("special_weight_basis: non-integral ") + what);
            x[k] = (*sol)[k].numerator();
        }
        return Weight{x};
    };

    Mat rows;
    for (const Coweight& c : d.simple_coroots) rows.push_back(c.c);
    rows.push_back(gamma.c);
    Vec rhs(d.num_simple() + 1, 0);
    rhs[d.num_simple()] = 1;
    Weight omega0 = solve_integral(rows, rhs, "omega0");

    std::vector<Weight> omega_i;
    rows.back() = w0g.c;
    for (int i = 0; i < d.num_simple(); ++i) {
        Vec r(d.num_simple() + 1, 0);
        r[i] = 1;
        omega_i.push_back(solve_integral(rows, r, "omega_i"));
    }

    Mat basis(d.rank, Vec(d.rank));
    for (int k = 0; k < d.rank; ++k) {
        basis[k][0] = omega0.c[k];
        for (int i = 0; i < d.num_simple(); ++i) basis[k][i + 1] = omega_i[i].c[k];
    }
    i64 det = det_integer(basis);
    if (det != 1 && det != -1)
        throw std::runtime_error("special_weight_basis: omega0, omega_i not a lattice basis");
    return {omega0, omega_i};
}

std::pair<Coweight, i64> central_coweight(const RootDatum& d, const Coweight& gamma) {
    Mat rows;
    for (const Weight& a : d.simple_roots) rows.push_back(a.c);
    Mat ker = rows.empty() ? identity_mat(d.rank) : integer_kernel(rows);
    size_t kdim = ker.empty() ? 0 : ker[0].size();
    if (kdim != 1)
        throw std::runtime_error("central_coweight: root-orthogonal lattice has rank " +
                                 std::to_string(kdim));
    Vec w(d.rank);
    for (int i = 0; i < d.rank; ++i) w[i] = ker[i][0];
    Coweight omega{w};
    Weight omega0 = special_weight_basis(d, gamma).first;
    i64 deg = pairing(omega, omega0);
    if (deg == 0) throw std::runtime_error("central_coweight: omega has degree 0");
    if (deg < 0) {
        omega = -omega;
        deg = -deg;
    }
    if (!d.in_pos_span(deg * gamma - omega))
        throw std::runtime_error("central_coweight: d*gamma - omega not a positive coroot sum");
    return {omega, deg};
}

AdmissibleDatum make_admissible(const RootDatum& d, const Coweight& gamma) {
    AdmissibilityReport rep = check_one_admissible(d, gamma);
    if (!rep.overall) {
        std::string why = "datum not admissible:";
        for (const ConditionVerdict* v :
             {&rep.center, &rep.fundamental_group, &rep.minuscule_generator, &rep.faithful})
            if (!v->ok) why += " [" + v->detail + "]";
        throw std::invalid_argument(why);
    }
    AdmissibleDatum a;
    a.datum = d;
    a.gamma = gamma;
    auto [o0, oi] = special_weight_basis(d, gamma);
    a.omega0 = o0;
    a.omega_i = std::move(oi);
    auto [om, dm] = central_coweight(d, gamma);
    a.omega = om;
    a.d_omega = dm;
    for (int i = 0; i < d.num_simple(); ++i)
        if (pairing(gamma, d.simple_roots[i]) == 0) a.J.push_back(i);
    return a;
}

}  // namespace oneadm
