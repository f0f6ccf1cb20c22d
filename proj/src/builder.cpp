#include "oneadm/builder.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace oneadm {

namespace {

// pairing matrix m[i][j] = <coroot_i, root_j> for the supported simple
// types, Bourbaki numbering
Mat pairing_matrix(char type, int n) {
    auto chain = [&](Mat& m, int i, int j) { m[i][j] = m[j][i] = -1; };
    Mat m(n, Vec(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 2;
    switch (type) {
        case 'A':
            for (int i = 0; i + 1 < n; ++i) chain(m, i, i + 1);
            break;
        case 'B':
            if (n < 2) throw std::invalid_argument("type B needs n >= 2");
            for (int i = 0; i + 1 < n; ++i) chain(m, i, i + 1);
            m[n - 1][n - 2] = -2;  // coroot 2e_n against e_{n-1}-e_n
            m[n - 2][n - 1] = -1;
            break;
        case 'C':
            if (n < 2) throw std::invalid_argument("type C needs n >= 2");
            for (int i = 0; i + 1 < n; ++i) chain(m, i, i + 1);
            m[n - 2][n - 1] = -2;  // coroot e_{n-1}-e_n against 2e_n
            m[n - 1][n - 2] = -1;
            break;
        case 'D':
            if (n < 3) throw std::invalid_argument("type D needs n >= 3");
            for (int i = 0; i + 2 < n; ++i) chain(m, i, i + 1);
            chain(m, n - 3, n - 1);
            break;
        case 'E': {
            if (n != 6 && n != 7) throw std::invalid_argument("type E supports n = 6, 7 only");
            std::vector<std::pair<int, int>> edges{{1, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 4}};
            if (n == 7) edges.push_back({6, 7});
            for (auto [i, j] : edges) chain(m, i - 1, j - 1);
            break;
        }
        default:
            throw std::invalid_argument("unknown simple type");
    }
    return m;
}

RatMat inverse_rational(const Mat& a) {
    size_t n = a.size();
    RatMat inv(n, RatVec(n));
    for (size_t j = 0; j < n; ++j) {
        Vec e(n, 0);
        e[j] = 1;
        auto x = solve_rational(a, e);
        if (!x) throw std::logic_error("inverse_rational: singular matrix");
        for (size_t i = 0; i < n; ++i) inv[i][j] = (*x)[i];
    }
    return inv;
}

std::optional<Mat> integral_product(const Mat& a, const RatMat& b) {
    size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    Mat r(n, Vec(m, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < m; ++j) {
            Rat s(0);
            for (size_t l = 0; l < k; ++l) s += Rat(a[i][l]) * b[l][j];
            if (s.denominator() != 1) return std::nullopt;
            r[i][j] = s.numerator();
        }
    return r;
}

Vec column(const Mat& m, size_t j) {
    Vec v(m.size());
    for (size_t i = 0; i < m.size(); ++i) v[i] = m[i][j];
    return v;
}

}  // namespace

SimplyConnectedDatum catalog_simply_connected(char type, int n) {
    if (n < 0) throw std::invalid_argument("negative rank");
    SimplyConnectedDatum H;
    if (type == 'A' && n == 0) {  // the trivial group
        H.h = 1;
        return H;
    }
    if (n == 0) throw std::invalid_argument("rank 0 is only the trivial type A datum");
    Mat m = pairing_matrix(type, n);

    DatumSpec spec;
    spec.rank = n;
    for (int j = 0; j < n; ++j) {
        spec.simple_roots.push_back(column(m, j));
        Vec e(n, 0);
        e[j] = 1;
        spec.simple_coroots.push_back(e);
        spec.labels.push_back("a" + std::to_string(j + 1));
    }
    H.h_datum = build_root_datum(spec);

    // center order from the weight lattice modulo the root lattice
    SmithForm s = smith_form(m);
    std::vector<i64> nontrivial;
    for (i64 f : s.invariant_factors)
        if (f > 1) nontrivial.push_back(f);
    if (nontrivial.size() > 1)
        throw std::invalid_argument("center is not cyclic");
    if (nontrivial.empty())
        throw std::invalid_argument("trivial center: only the trivial group can be used");
    H.h = nontrivial[0];

    RatMat inv = inverse_rational(m);
    H.q_h_scaled = Mat(n, Vec(n, 0));
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i) {
            Rat x = Rat(H.h) * inv[k][i];  // basis column k = scaled row k
            if (x.denominator() != 1)
                throw std::logic_error("center order does not clear the denominators");
            H.q_h_scaled[i][k] = x.numerator();
        }
    return H;
}

Vec fundamental_coweight_scaled(const SimplyConnectedDatum& H, int k) {
    if (k < 0 || k >= H.h_datum.rank)
        throw std::invalid_argument("fundamental_coweight_scaled: bad node");
    return column(H.q_h_scaled, k);
}

GammaHVerdict validate_gamma_h(const SimplyConnectedDatum& H, const Vec& v) {
    GammaHVerdict out;
    int n = H.h_datum.rank;
    if (static_cast<int>(v.size()) != n)
        throw std::invalid_argument("validate_gamma_h: wrong length");
    if (n == 0) {
        out.in_q_h = out.minuscule = out.generates = out.faithful = out.ok = true;
        out.detail = "rank-0 branch";
        return out;
    }
    out.in_q_h = in_column_span_z(H.q_h_scaled, v);
    if (!out.in_q_h) {
        out.detail = "not in Q_H";
        return out;
    }
    bool dominant = true;
    for (const Weight& r : H.h_datum.simple_roots)
        if (dot(v, r.c) < 0) dominant = false;
    out.minuscule = dominant && !is_zero(v);
    for (const Weight& r : H.h_datum.positive_roots) {
        i64 p = dot(v, r.c);
        if (p != 0 && p != H.h) out.minuscule = false;
    }

    i64 g = 0;
    for (i64 x : v) g = std::gcd(g, x);
    out.generates = std::gcd(g, H.h) == 1;

    // orbit of v under the scaled reflections, then its Z-span
    std::set<Vec> seen{v};
    std::vector<Vec> frontier{v};
    while (!frontier.empty()) {
        std::vector<Vec> next;
        for (const Vec& x : frontier)
            for (int j = 0; j < n; ++j) {
                Vec y = x;
                y[j] -= dot(x, H.h_datum.simple_roots[j].c);
                if (seen.insert(y).second) next.push_back(y);
            }
        frontier = std::move(next);
    }
    Mat orbit_cols(n, Vec(seen.size()));
    size_t j = 0;
    for (const Vec& x : seen) {
        for (int i = 0; i < n; ++i) orbit_cols[i][j] = x[i];
        ++j;
    }
    out.faithful = hnf_column_basis(orbit_cols) == hnf_column_basis(H.q_h_scaled);

    out.ok = out.in_q_h && out.minuscule && out.generates && out.faithful;
    if (!out.ok) {
        out.detail = "failed:";
        if (!out.minuscule) out.detail += " minuscule";
        if (!out.generates) out.detail += " generation";
        if (!out.faithful) out.detail += " faithfulness";
    }
    return out;
}

BuiltGroup build_admissible_group(const SimplyConnectedDatum& H, const Vec& v) {
    GammaHVerdict verdict = validate_gamma_h(H, v);
    if (!verdict.ok)
        throw std::invalid_argument("build_admissible_group: " + verdict.detail);
    int n = H.h_datum.rank, big = n + 1;
    i64 h = H.h;

    // coweight lattice: h-scaled pairs (lambda, b), generated by the
    // coroot-lattice vectors at level 0 and (gamma_H, 1/h)
    Mat cw_gens(big, Vec(n + 1, 0));
    for (int i = 0; i < n; ++i) cw_gens[i][i] = h;
    for (int i = 0; i < n; ++i) cw_gens[i][n] = v[i];
    cw_gens[n][n] = 1;
    Mat b = hnf_column_basis(cw_gens);

    // weight lattice: pairs (weight, a) with <v, weight> + a = 0 mod h
    Mat w_gens(big, Vec(n + 1, 0));
    for (int j = 0; j < n; ++j) {
        w_gens[j][j] = 1;
        w_gens[n][j] = ((-v[j]) % h + h) % h;
    }
    w_gens[n][n] = h;
    Mat bw = hnf_column_basis(w_gens);
    if (static_cast<int>(b[0].size()) != big || static_cast<int>(bw[0].size()) != big)
        throw std::logic_error("build_admissible_group: lattice bases are not full rank");

    // the pairing matrix between the two bases must be unimodular; fold
    // it into the weight basis so the pairing becomes the dot product
    Mat p = mat_mul(transpose(b), bw);
    for (auto& row : p)
        for (i64& x : row) {
            if (x % h != 0) throw std::logic_error("build_admissible_group: pairing not integral");
            x /= h;
        }
    i64 det = det_integer(p);
    if (det != 1 && det != -1)
        throw std::logic_error("build_admissible_group: pairing is not perfect");
    auto bw_new = integral_product(bw, inverse_rational(p));
    if (!bw_new) throw std::logic_error("build_admissible_group: basis change not integral");

    auto in_cw_basis = [&](const Vec& x) {
        auto sol = solve_rational(b, x);
        if (!sol) throw std::logic_error("build_admissible_group: coweight outside the lattice");
        auto z = to_integer(*sol);
        if (!z) throw std::logic_error("build_admissible_group: coweight outside the lattice");
        return *z;
    };
    auto in_w_basis = [&](const Vec& x) {
        auto sol = solve_rational(*bw_new, x);
        if (!sol) throw std::logic_error("build_admissible_group: weight outside the lattice");
        auto z = to_integer(*sol);
        if (!z) throw std::logic_error("build_admissible_group: weight outside the lattice");
        return *z;
    };

    DatumSpec spec;
    spec.rank = big;
    for (int j = 0; j < n; ++j) {
        Vec root(big, 0);
        for (int i = 0; i < n; ++i) root[i] = H.h_datum.simple_roots[j].c[i];
        spec.simple_roots.push_back(in_w_basis(root));
        Vec coroot(big, 0);
        coroot[j] = h;
        spec.simple_coroots.push_back(in_cw_basis(coroot));
        spec.labels.push_back("a" + std::to_string(j + 1));
    }
    Vec gamma_amb = v;
    gamma_amb.push_back(1);

    BuiltGroup out;
    out.g = build_root_datum(spec);
    out.gamma = Coweight{in_cw_basis(gamma_amb)};
    out.h = h;
    out.coweight_basis = std::move(b);
    out.weight_basis = std::move(*bw_new);

    AdmissibilityReport rep = check_one_admissible(out.g, out.gamma);
    if (!rep.overall) {
        std::string what = "build_admissible_group: certification failed:";
        if (!rep.center.ok) what += " [center] " + rep.center.detail;
        if (!rep.fundamental_group.ok) what += " [pi1] " + rep.fundamental_group.detail;
        if (!rep.minuscule_generator.ok)
            what += " [minuscule] " + rep.minuscule_generator.detail;
        if (!rep.faithful.ok) what += " [faithful] " + rep.faithful.detail;
        throw std::logic_error(what);
    }
    return out;
}

namespace {

std::optional<Mat> isomorphism_impl(const RootDatum& from, const RootDatum& to,
                                    const Coweight* gf, const Coweight* gt) {
    if (from.rank != to.rank || from.num_simple() != to.num_simple()) return std::nullopt;
    int ns = from.num_simple(), rank = from.rank;
    if (ns + 1 != rank) return std::nullopt;  // one-dimensional center expected

    auto central = [&](const RootDatum& d) {
        Mat rows(ns, Vec(rank));
        for (int j = 0; j < ns; ++j) rows[j] = d.simple_roots[j].c;
        Mat ker = integer_kernel(rows);
        if (ker.empty() || ker[0].size() != 1)
            throw std::invalid_argument("root_datum_isomorphism: central line is not rank one");
        return column(ker, 0);
    };
    Vec zf = central(from), zt = central(to);

    std::vector<int> perm(ns);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool cartan_ok = true;
        for (int i = 0; i < ns && cartan_ok; ++i)
            for (int j = 0; j < ns && cartan_ok; ++j)
                if (from.cartan[i][j] != to.cartan[perm[i]][perm[j]]) cartan_ok = false;
        if (!cartan_ok) continue;
        for (int sign : {1, -1}) {
            Mat a_from(rank, Vec(rank)), a_to(rank, Vec(rank));
            for (int j = 0; j < ns; ++j)
                for (int i = 0; i < rank; ++i) {
                    a_from[i][j] = from.simple_coroots[j].c[i];
                    a_to[i][j] = to.simple_coroots[perm[j]].c[i];
                }
            for (int i = 0; i < rank; ++i) {
                a_from[i][ns] = zf[i];
                a_to[i][ns] = sign * zt[i];
            }
            std::optional<Mat> u;
            try {
                u = integral_product(a_to, inverse_rational(a_from));
            } catch (const std::logic_error&) {
                continue;
            }
            if (!u || det_integer(*u) * det_integer(*u) != 1) continue;
            Mat ut = transpose(*u);
            bool roots_ok = true;
            for (int j = 0; j < ns && roots_ok; ++j)
                if (mat_apply(ut, to.simple_roots[perm[j]].c) != from.simple_roots[j].c)
                    roots_ok = false;
            if (!roots_ok) continue;
            if (gf && gt && mat_apply(*u, gf->c) != gt->c) continue;
            return u;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

}  // namespace

std::optional<Mat> root_datum_isomorphism(const RootDatum& from, const RootDatum& to) {
    return isomorphism_impl(from, to, nullptr, nullptr);
}

std::optional<Mat> root_datum_isomorphism(const RootDatum& from, const Coweight& gamma_from,
                                          const RootDatum& to, const Coweight& gamma_to) {
    return isomorphism_impl(from, to, &gamma_from, &gamma_to);
}

}  // namespace oneadm
