#include "oneadm/rep.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace oneadm {

using boost::multiprecision::cpp_int;

i64 IntegerPartition::size() const {
    i64 s = 0;
    for (i64 p : parts) s += p;
    return s;
}

IntegerPartition IntegerPartition::conjugate() const {
    IntegerPartition c;
    if (parts.empty()) return c;
    for (i64 i = 0; i < parts[0]; ++i) {
        i64 n = 0;
        for (i64 p : parts)
            if (p > i) ++n;
        c.parts.push_back(n);
    }
    return c;
}

std::vector<IntegerPartition> IntegerPartition::all_of(i64 d, int max_len) {
    std::vector<IntegerPartition> out;
    std::vector<i64> cur;
    auto rec = [&](auto&& self, i64 rest, i64 max_part) -> void {
        if (rest == 0) {
            out.push_back({cur});
            return;
        }
        if (static_cast<int>(cur.size()) == max_len) return;
        for (i64 p = std::min(rest, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    if (d >= 0) rec(rec, d, d == 0 ? 1 : d);
    return out;
}

i64 default_dimension_cap() {
    if (const char* s = std::getenv("ONEADM_DIM_CAP")) {
        i64 v = std::atoll(s);
        if (v > 0) return v;
    }
    return 1'000'000;
}

i64 weyl_dimension(const RootDatum& g, const Coweight& lambda) {
    if (!g.is_dominant(lambda))
        throw std::invalid_argument("weyl_dimension: lambda must be dominant");
    Coweight num = 2 * lambda + g.two_rho_dual;
    cpp_int top = 1, bot = 1;
    for (const Weight& a : g.positive_roots) {
        top *= pairing(num, a);
        bot *= pairing(g.two_rho_dual, a);
    }
    if (bot == 0) throw std::logic_error("weyl_dimension: degenerate rho pairing");
    if (top % bot != 0) throw std::logic_error("weyl_dimension: non-integral product");
    cpp_int d = top / bot;
    if (d <= 0 || d > std::numeric_limits<i64>::max())
        throw std::runtime_error("weyl_dimension: out of range");
    return static_cast<i64>(d);
}

namespace {

// W-invariant form on the coweight lattice: sum over positive roots of
// the squared pairings; positive definite on the semisimple part
i64 form(const RootDatum& g, const Vec& x, const Vec& y) {
    i64 s = 0;
    for (const Weight& a : g.positive_roots) s += dot(x, a.c) * dot(y, a.c);
    return s;
}

}  // namespace

CharacterMultiset character(const RootDatum& g, const Coweight& lambda, i64 dim_cap) {
    if (!g.is_dominant(lambda))
        throw std::invalid_argument("character: lambda must be dominant");
    i64 cap = dim_cap > 0 ? dim_cap : default_dimension_cap();
    i64 dim = weyl_dimension(g, lambda);
    if (dim > cap)
        throw std::runtime_error("character: dimension " + std::to_string(dim) +
                                 " exceeds cap " + std::to_string(cap));

    std::vector<Coweight> doms = g.dominant_below(lambda);
    std::vector<std::pair<i64, Coweight>> by_height;
    for (const Coweight& mu : doms) {
        auto dec = g.pos_part_decompose(lambda - mu);
        i64 h = 0;
        for (i64 c : *dec) h += c;
        by_height.emplace_back(h, mu);
    }
    std::sort(by_height.begin(), by_height.end());

    std::map<Coweight, i64> dom_mult;
    Vec Lam = add(scale(2, lambda.c), g.two_rho_dual.c);
    i64 lam_norm = form(g, Lam, Lam);
    auto mult_of = [&](const Coweight& nu) -> i64 {
        auto it = dom_mult.find(g.dominantize(nu).first);
        return it == dom_mult.end() ? 0 : it->second;
    };

    for (const auto& [h, mu] : by_height) {
        if (h == 0) {
            dom_mult[mu] = 1;
            continue;
        }
        Vec Mu = add(scale(2, mu.c), g.two_rho_dual.c);
        i64 denom = lam_norm - form(g, Mu, Mu);
        if (denom <= 0) throw std::logic_error("character: nonpositive Freudenthal denominator");
        i64 rhs = 0;
        for (const Coweight& alpha : g.positive_coroots) {
            for (i64 k = 1;; ++k) {
                Coweight nu = mu + k * alpha;
                if (!g.in_pos_span(lambda - nu)) break;
                i64 m = mult_of(nu);
                if (m != 0) rhs += m * form(g, scale(2, nu.c), scale(2, alpha.c));
            }
        }
        rhs *= 2;
        if (rhs % denom != 0) throw std::logic_error("character: non-integral multiplicity");
        i64 m = rhs / denom;
        if (m > 0) dom_mult[mu] = m;
    }

    CharacterMultiset out;
    for (const auto& [mu, m] : dom_mult)
        for (const Coweight& w : g.weyl_orbit(mu)) {
            out.mult[w] = m;
            out.total += m;
        }
    if (out.total != dim) throw std::logic_error("character: total mismatch with Weyl dimension");
    return out;
}

CharacterMultiset tensor_character(const CharacterMultiset& a, const CharacterMultiset& b) {
    CharacterMultiset out;
    for (const auto& [wa, ma] : a.mult)
        for (const auto& [wb, mb] : b.mult) out.mult[wa + wb] += ma * mb;
    out.total = a.total * b.total;
    return out;
}

namespace {

bool rev_lex_less(const Vec& a, const Vec& b) {
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

Coweight pick_top(const RootDatum& g, const std::vector<Coweight>& dominant_support,
                  PeelOrder order) {
    std::vector<Coweight> maximal;
    for (const Coweight& mu : dominant_support) {
        bool is_max = true;
        for (const Coweight& nu : dominant_support)
            if (nu != mu && g.in_pos_span(nu - mu)) {
                is_max = false;
                break;
            }
        if (is_max) maximal.push_back(mu);
    }
    Coweight best = maximal.front();
    for (const Coweight& mu : maximal) {
        bool better = order == PeelOrder::reverse_lex ? rev_lex_less(best.c, mu.c)
                                                      : best.c < mu.c;
        if (better) best = mu;
    }
    return best;
}

}  // namespace

DecompositionList peel(const RootDatum& g, const CharacterMultiset& c, PeelOrder order,
                       i64 dim_cap) {
    std::map<Coweight, i64> rest = c.mult;
    DecompositionList out;
    while (true) {
        std::vector<Coweight> dom;
        for (const auto& [w, m] : rest) {
            if (m < 0) throw std::logic_error("peel: negative multiplicity encountered");
            if (m > 0 && g.is_dominant(w)) dom.push_back(w);
        }
        if (dom.empty()) {
            for (const auto& [w, m] : rest)
                if (m != 0) throw std::logic_error("peel: leftover non-dominant weights");
            break;
        }
        Coweight top = pick_top(g, dom, order);
        i64 m = rest[top];
        CharacterMultiset ch = character(g, top, dim_cap);
        for (const auto& [w, mw] : ch.mult) {
            auto it = rest.find(w);
            if (it == rest.end() || it->second < m * mw)
                throw std::logic_error("peel: input is not a nonnegative sum of characters");
            it->second -= m * mw;
            if (it->second == 0) rest.erase(it);
        }
        out.push_back({top, m});
    }
    return out;
}

DecompositionList tensor_decompose(const RootDatum& g, const Coweight& lambda,
                                   const Coweight& mu, PeelOrder order, i64 dim_cap) {
    CharacterMultiset t =
        tensor_character(character(g, lambda, dim_cap), character(g, mu, dim_cap));
    return peel(g, t, order, dim_cap);
}

namespace {

using CharMap = std::map<Coweight, i64>;

CharMap adams(const CharMap& c, i64 k) {
    CharMap out;
    for (const auto& [w, m] : c) out[k * w] += m;
    return out;
}

CharMap mul(const CharMap& a, const CharMap& b) {
    CharMap out;
    for (const auto& [wa, ma] : a) {
        if (ma == 0) continue;
        for (const auto& [wb, mb] : b) {
            if (mb == 0) continue;
            out[wa + wb] += ma * mb;
        }
    }
    return out;
}

void add_scaled(CharMap& into, const CharMap& c, i64 s) {
    for (const auto& [w, m] : c) into[w] += s * m;
}

CharacterMultiset finish(CharMap m) {
    CharacterMultiset out;
    for (auto it = m.begin(); it != m.end();) {
        if (it->second == 0)
            it = m.erase(it);
        else {
            out.total += it->second;
            ++it;
        }
    }
    out.mult = std::move(m);
    return out;
}

// e_0..e_kmax (exterior) or h_0..h_kmax (symmetric) by the Newton
// recursion over Adams operations
std::vector<CharMap> power_tower(const CharMap& c, i64 kmax, PowerKind kind) {
    std::vector<CharMap> p{{{Coweight{Vec(c.empty() ? 0 : c.begin()->first.c.size(), 0)}, 1}}};
    for (i64 k = 1; k <= kmax; ++k) {
        CharMap acc;
        for (i64 i = 1; i <= k; ++i) {
            i64 sign = kind == PowerKind::exterior ? (i % 2 == 1 ? 1 : -1) : 1;
            add_scaled(acc, mul(p[k - i], adams(c, i)), sign);
        }
        CharMap ek;
        for (const auto& [w, m] : acc) {
            if (m % k != 0)
                throw std::logic_error("power_character: Newton recursion left a remainder");
            if (m != 0) ek[w] = m / k;
        }
        p.push_back(std::move(ek));
    }
    return p;
}

}  // namespace

CharacterMultiset power_character(const CharacterMultiset& c, i64 k, PowerKind kind) {
    if (k < 0) throw std::invalid_argument("power_character: k >= 0 required");
    if (kind == PowerKind::exterior && k > c.total) return CharacterMultiset{};
    return finish(power_tower(c.mult, k, kind)[k]);
}

DecompositionList wedge_sym_decompose(const RootDatum& g, const Coweight& lambda, i64 k,
                                      PowerKind kind, PeelOrder order, i64 dim_cap) {
    return peel(g, power_character(character(g, lambda, dim_cap), k, kind), order, dim_cap);
}

CharacterMultiset schur_character(const CharacterMultiset& c, const IntegerPartition& nu) {
    for (size_t i = 0; i < nu.parts.size(); ++i)
        if (nu.parts[i] <= 0 || (i > 0 && nu.parts[i] > nu.parts[i - 1]))
            throw std::invalid_argument("schur_character: malformed partition");
    if (nu.size() > 12) throw std::invalid_argument("schur_character: partition size cap is 12");
    if (nu.parts.empty()) return finish({{Coweight{Vec(c.mult.empty() ? 0 : c.mult.begin()->first.c.size(), 0)}, 1}});
    if (static_cast<i64>(nu.length()) > c.total) return CharacterMultiset{};  // functor vanishes

    IntegerPartition conj = nu.conjugate();
    int m = conj.length();  // = nu.parts[0]
    i64 emax = 0;
    for (int i = 0; i < m; ++i) emax = std::max(emax, conj.parts[i] - i + m - 1);
    std::vector<CharMap> e = power_tower(c.mult, std::min<i64>(emax, c.total), PowerKind::exterior);
    auto entry = [&](int i, int j) -> CharMap {
        i64 t = conj.parts[i] - (i + 1) + (j + 1);  // e_{nu'_i - i + j}, 1-based
        if (t < 0 || t > c.total) return {};
        return e[t];
    };

    // det over column subsets, Laplace along the rows
    std::map<unsigned, CharMap> memo{{0u, {{Coweight{Vec(c.mult.begin()->first.c.size(), 0)}, 1}}}};
    auto det = [&](auto&& self, unsigned mask) -> const CharMap& {
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        int row = m - __builtin_popcount(mask);
        CharMap acc;
        int seen = 0;
        for (int j = 0; j < m; ++j) {
            if (!(mask & (1u << j))) continue;
            const CharMap& sub = self(self, mask & ~(1u << j));
            add_scaled(acc, mul(entry(row, j), sub), seen % 2 == 0 ? 1 : -1);
            ++seen;
        }
        return memo.emplace(mask, std::move(acc)).first->second;
    };
    return finish(det(det, (1u << m) - 1));
}

DecompositionList schur_decompose(const RootDatum& g, const CharacterMultiset& c,
                                  const IntegerPartition& nu, PeelOrder order, i64 dim_cap) {
    return peel(g, schur_character(c, nu), order, dim_cap);
}

i64 hom_multiplicity(const Coweight& lambda, const DecompositionList& target) {
    for (const DecompositionEntry& e : target)
        if (e.hw == lambda) return e.mult;
    return 0;
}

i64 hom_multiplicity(const RootDatum& g, const Coweight& lambda,
                     const CharacterMultiset& target) {
    return hom_multiplicity(lambda, peel(g, target));
}

}  // namespace oneadm
