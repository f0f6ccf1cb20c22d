// Command-line surface: catalog lookup or datum files in, human-readable
// or deterministic JSON reports out.  Exit codes: 0 success, 1 a claimed
// property failed verification, 2 usage error.

#include <CLI11.hpp>
#include <iostream>
#include <sstream>

#include "oneadm/builder.hpp"
#include "oneadm/catalog.hpp"
#include "oneadm/json_io.hpp"
#include "oneadm/levi.hpp"
#include "oneadm/rep.hpp"
#include "oneadm/strata.hpp"

using namespace oneadm;

namespace {

struct VerifyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string vec_str(const Vec& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

struct Target {
    std::string name;   // catalog key, possibly with --n applied
    std::string file;
    int n = 0;

    std::pair<RootDatum, Coweight> resolve() const {
        if (!file.empty()) {
            DatumFile f = load_datum_file(file);
            RootDatum d = build_root_datum(f.spec);
            if (!f.gamma) throw UsageError("datum file has no \"gamma\" entry");
            return {std::move(d), *f.gamma};
        }
        std::string key = name;
        if (n > 0) key += std::to_string(n);
        auto e = catalog_lookup(key);
        if (!e) throw UsageError("unknown catalog name: " + key);
        return {e->datum, e->gamma};
    }

    AdmissibleDatum admissible() const {
        auto [d, g] = resolve();
        try {
            return make_admissible(d, g);
        } catch (const std::invalid_argument& e) {
            throw VerifyError(e.what());
        }
    }
};

void add_target(CLI::App* cmd, Target& t) {
    cmd->add_option("catalog", t.name, "catalog name, e.g. gl4 or gl with --n");
    cmd->add_option("--file", t.file, "JSON datum file");
    cmd->add_option("--n", t.n, "classical subscript for a catalog family");
}

bool g_json = false;

void emit(const std::string& command, const RootDatum& d, const Coweight& gamma,
          const Json& results, const std::string& text) {
    if (g_json) {
        Json out;
        out["command"] = command;
        out["fingerprint"] = datum_fingerprint(d, gamma);
        out["results"] = results;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << text;
    }
}

std::vector<int> parse_subset(const std::string& s) {
    std::vector<int> out;
    if (s.empty()) return out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
    return out;
}

Vec parse_vec(const std::string& s) {
    Vec out;
    if (s.empty()) return out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoll(item));
    return out;
}

std::string decomposition_str(const DecompositionList& dec) {
    std::string s;
    for (const auto& e : dec)
        s += std::to_string(e.mult) + " x V" + vec_str(e.hw.c) + "\n";
    return s;
}

Json decomposition_json(const DecompositionList& dec) {
    Json j = Json::array();
    for (const auto& e : dec) j.push_back(Json{{"hw", e.hw.c}, {"mult", e.mult}});
    return j;
}

// ---- appendix suite -------------------------------------------------

struct Claim {
    std::string name;
    bool ok;
};

void appendix_gl(std::vector<Claim>& claims, int n) {
    std::string tag = "gl" + std::to_string(n);
    AdmissibleDatum a = make_admissible(catalog_gl(n).datum, catalog_gl(n).gamma);
    HilbertBasisReport hb = hilbert_basis(a, n + 1);
    bool basis_ok = hb.is_free && static_cast<int>(hb.generators.size()) == n;
    for (int i = 1; i <= n && basis_ok; ++i) {
        Vec gi(n, 0);
        for (int j = 0; j < i; ++j) gi[j] = 1;
        bool found = false;
        for (const auto& [g, deg] : hb.generators)
            if (g.c == gi && deg == i) found = true;
        basis_ok = found;
    }
    claims.push_back({tag + " free basis gamma_1..gamma_n", basis_ok});
}

void appendix_gsp(std::vector<Claim>& claims, int n) {
    std::string tag = "gsp" + std::to_string(2 * n);
    AdmissibleDatum a = make_admissible(catalog_gsp(n).datum, catalog_gsp(n).gamma);
    claims.push_back({tag + " spinor dimension 2^n",
                      weyl_dimension(a.datum, a.gamma) == (i64(1) << n)});
    HilbertBasisReport hb = hilbert_basis(a, 4);
    claims.push_back({tag + " free basis of rank n+1",
                      hb.is_free && static_cast<int>(hb.generators.size()) == n + 1});
    DecompositionList sq = tensor_decompose(a.datum, a.gamma, a.gamma);
    claims.push_back({tag + " tensor square has n+1 summands",
                      static_cast<int>(sq.size()) == n + 1});
}

void appendix_gspin(std::vector<Claim>& claims, int n) {
    std::string tag = "gspin" + std::to_string(2 * n + 1);
    AdmissibleDatum a = make_admissible(catalog_gspin(n).datum, catalog_gspin(n).gamma);
    DecompositionList w2 = wedge_sym_decompose(a.datum, a.gamma, 2, PowerKind::exterior);
    bool ok = w2.size() == 2;
    if (ok) {
        bool has_omega = false;
        for (const auto& e : w2)
            if (e.hw == a.omega && e.mult == 1) has_omega = true;
        ok = has_omega;
    }
    claims.push_back({tag + " wedge^2 = V^{gamma_2} + V^{omega}", ok});
}

void appendix_builds(std::vector<Claim>& claims, const std::string& only) {
    auto want = [&](const std::string& k) { return only.empty() || only == k; };
    if (want("gl")) {
        SimplyConnectedDatum h = catalog_simply_connected('A', 3);
        BuiltGroup b = build_admissible_group(h, fundamental_coweight_scaled(h, 0));
        CatalogEntry c = catalog_gl(4);
        claims.push_back({"built gl4 matches catalog",
                          root_datum_isomorphism(b.g, b.gamma, c.datum, c.gamma).has_value()});
    }
    if (want("gsp")) {
        SimplyConnectedDatum h = catalog_simply_connected('C', 2);
        BuiltGroup b = build_admissible_group(h, fundamental_coweight_scaled(h, 1));
        CatalogEntry c = catalog_gsp(2);
        claims.push_back({"built gsp4 matches catalog",
                          root_datum_isomorphism(b.g, b.gamma, c.datum, c.gamma).has_value()});
    }
    if (want("gspin")) {
        SimplyConnectedDatum h = catalog_simply_connected('B', 2);
        BuiltGroup b = build_admissible_group(h, fundamental_coweight_scaled(h, 0));
        CatalogEntry c = catalog_gspin(2);
        claims.push_back({"built gspin5 matches catalog",
                          root_datum_isomorphism(b.g, b.gamma, c.datum, c.gamma).has_value()});
    }
    if (want("d5")) {
        SimplyConnectedDatum h = catalog_simply_connected('D', 5);
        BuiltGroup b = build_admissible_group(h, fundamental_coweight_scaled(h, 4));
        claims.push_back({"even-spin 10 build certifies", b.g.rank == 6});
    }
    if (want("e6")) {
        SimplyConnectedDatum h = catalog_simply_connected('E', 6);
        for (int node : {0, 5}) {
            BuiltGroup b = build_admissible_group(h, fundamental_coweight_scaled(h, node));
            claims.push_back({"e6 node " + std::to_string(node + 1) + " build certifies",
                              b.g.weyl_orbit(b.gamma).size() == 27});
        }
    }
    if (want("e7")) {
        SimplyConnectedDatum h = catalog_simply_connected('E', 7);
        BuiltGroup b = build_admissible_group(h, fundamental_coweight_scaled(h, 6));
        claims.push_back({"e7 orbit size 56", b.g.weyl_orbit(b.gamma).size() == 56});
    }
}

int run_appendix(const std::string& only, int n) {
    std::vector<Claim> claims;
    auto want = [&](const std::string& k) { return only.empty() || only == k; };
    if (want("gl"))
        for (int i : (n ? std::vector<int>{n} : std::vector<int>{2, 3, 4})) appendix_gl(claims, i);
    if (want("gsp"))
        for (int i : (n ? std::vector<int>{n} : std::vector<int>{2, 3})) appendix_gsp(claims, i);
    if (want("gspin"))
        for (int i : (n ? std::vector<int>{n} : std::vector<int>{2, 3}))
            appendix_gspin(claims, i);
    if (only.empty() || only == "builds" || only == "e6" || only == "e7")
        appendix_builds(claims, only == "builds" ? "" : only);

    bool all_ok = true;
    Json jc = Json::array();
    std::string text;
    for (const Claim& c : claims) {
        all_ok = all_ok && c.ok;
        jc.push_back(Json{{"claim", c.name}, {"ok", c.ok}});
        text += std::string(c.ok ? "PASS" : "FAIL") + "  " + c.name + "\n";
    }
    if (g_json) {
        Json out;
        out["command"] = "appendix";
        out["results"] = jc;
        out["overall"] = all_ok;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << text << (all_ok ? "all claims hold\n" : "claim verification FAILED\n");
    }
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact combinatorics of rank-one-center root data"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--json", g_json, "emit a JSON report");

    Target t;
    i64 k = 0, max_degree = 4, d = 0, genus = 2, r = 0;
    std::string parabolic, mu_str, partition_str, build_type, gamma_h = "default";
    int build_n = 0;
    std::string only;
    int app_n = 0;

    auto* adm = app.add_subcommand("admissible", "certify the distinguished coweight");
    auto* adm_check = adm->add_subcommand("check", "run all four conditions");
    add_target(adm_check, t);

    auto* sg = app.add_subcommand("semigroup", "the graded monoid below multiples of gamma");
    auto* sg_levels = sg->add_subcommand("levels", "list a graded level set");
    add_target(sg_levels, t);
    sg_levels->add_option("--k", k, "level")->required();
    auto* sg_basis = sg->add_subcommand("basis", "minimal generators with freeness check");
    add_target(sg_basis, t);
    sg_basis->add_option("--max-degree", max_degree, "verification bound");

    auto* lv = app.add_subcommand("levi", "standard-Levi structure");
    auto* lv_theta = lv->add_subcommand("theta", "degree-one level of the Levi monoid");
    add_target(lv_theta, t);
    lv_theta->add_option("--parabolic", parabolic, "Dynkin indices of M, comma separated");
    auto* lv_bound = lv->add_subcommand("bound", "pigeonhole vanishing bound c(P)");
    add_target(lv_bound, t);
    lv_bound->add_option("--parabolic", parabolic, "Dynkin indices of M, comma separated");
    lv_bound->add_option("--genus", genus, "curve genus (>= 2)");
    lv_bound->add_option("--r", r, "rank parameter; defaults to dim of the gamma irreducible");

    auto* rp = app.add_subcommand("rep", "representations of the dual group");
    auto* rp_dim = rp->add_subcommand("dim", "dimension of the gamma irreducible");
    add_target(rp_dim, t);
    auto* rp_char = rp->add_subcommand("char", "weights of the gamma irreducible");
    add_target(rp_char, t);
    auto* rp_tensor = rp->add_subcommand("tensor", "decompose the tensor square");
    add_target(rp_tensor, t);
    auto* rp_wedge = rp->add_subcommand("wedge", "decompose an exterior power");
    add_target(rp_wedge, t);
    rp_wedge->add_option("--k", k, "power")->required();
    auto* rp_sym = rp->add_subcommand("sym", "decompose a symmetric power");
    add_target(rp_sym, t);
    rp_sym->add_option("--k", k, "power")->required();
    auto* rp_schur = rp->add_subcommand("schur", "apply a Schur functor");
    add_target(rp_schur, t);
    rp_schur->add_option("--partition", partition_str, "weakly decreasing parts")->required();

    auto* st = app.add_subcommand("strata", "stratification bookkeeping");
    auto* st_tau = st->add_subcommand("tau", "partitions of d*gamma + w0(mu)");
    add_target(st_tau, t);
    st_tau->add_option("--d", d, "degree")->required();
    st_tau->add_option("--mu", mu_str, "coweight in ambient coordinates, comma separated");
    auto* st_dims = st->add_subcommand("dims", "orbit-stratum and fiber dimensions");
    add_target(st_dims, t);
    st_dims->add_option("--parabolic,--levi", parabolic, "Dynkin indices of M");

    auto* bd = app.add_subcommand("build", "construct a group from (H, gamma_H)");
    bd->add_option("--type", build_type, "A, B, C, D, E")->required();
    bd->add_option("--n", build_n, "rank of H")->required();
    bd->add_option("--gamma-h", gamma_h,
                   "node number (1-based), spin+/spin-, or default");

    auto* ax = app.add_subcommand("appendix", "verify the example suite end to end");
    ax->add_option("--only", only, "gl, gsp, gspin, builds, e6, e7");
    ax->add_option("--n", app_n, "restrict a family to one subscript");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (adm_check->parsed()) {
            auto [datum, gamma] = t.resolve();
            AdmissibilityReport rep = check_one_admissible(datum, gamma);
            std::string text;
            auto line = [&](const char* name, const ConditionVerdict& v) {
                text += std::string(v.ok ? "PASS" : "FAIL") + "  " + name + ": " + v.detail + "\n";
            };
            line("center", rep.center);
            line("fundamental group", rep.fundamental_group);
            line("minuscule generator", rep.minuscule_generator);
            line("faithful", rep.faithful);
            text += rep.overall ? "admissible\n" : "NOT admissible\n";
            emit("admissible check", datum, gamma, admissibility_to_json(rep), text);
            return rep.overall ? 0 : 1;
        }
        if (sg_levels->parsed()) {
            AdmissibleDatum a = t.admissible();
            GradedLevelSet ls = level_set(a, k);
            Json j;
            j["k"] = k;
            j["elements"] = Json::array();
            std::string text;
            for (const Coweight& c : ls.elements) {
                j["elements"].push_back(c.c);
                text += vec_str(c.c) + "\n";
            }
            emit("semigroup levels", a.datum, a.gamma, j, text);
            return 0;
        }
        if (sg_basis->parsed()) {
            AdmissibleDatum a = t.admissible();
            HilbertBasisReport hb = hilbert_basis(a, max_degree);
            std::string text;
            for (const auto& [g, deg] : hb.generators)
                text += vec_str(g.c) + "  degree " + std::to_string(deg) + "\n";
            text += hb.is_free ? "free\n" : "NOT free\n";
            emit("semigroup basis", a.datum, a.gamma, hilbert_basis_to_json(hb), text);
            return hb.is_free ? 0 : 1;
        }
        if (lv_theta->parsed() || lv_bound->parsed() || st_dims->parsed()) {
            AdmissibleDatum a = t.admissible();
            LeviDatum L = restrict_to_levi(a, parse_subset(parabolic));
            if (lv_theta->parsed()) {
                ThetaLevel th = theta_level(L);
                Json j;
                j["elements"] = Json::array();
                std::string text;
                for (size_t i = 0; i < th.elements.size(); ++i) {
                    j["elements"].push_back(
                        Json{{"coweight", th.elements[i].c}, {"image", th.images[i]}});
                    text += vec_str(th.elements[i].c) + "  -> class " +
                            vec_str(th.images[i]) + "\n";
                }
                emit("levi theta", a.datum, a.gamma, j, text);
            } else if (lv_bound->parsed()) {
                if (r == 0) r = weyl_dimension(a.datum, a.gamma);
                i64 c = vanishing_bound(L, genus, r);
                emit("levi bound", a.datum, a.gamma,
                     Json{{"genus", genus}, {"r", r}, {"c_P", c}},
                     "c(P) = " + std::to_string(c) + "\n");
            } else {
                Json j = Json::array();
                std::string text;
                for (const Coweight& v : theta_level(L).elements) {
                    i64 total = orbit_stratum_dim(L, v);
                    i64 fiber = fibration_fiber_dim(L, v);
                    j.push_back(Json{{"orbit_element", v.c},
                                     {"stratum_dim", total},
                                     {"fiber_dim", fiber}});
                    text += vec_str(v.c) + "  stratum " + std::to_string(total) +
                            "  fiber " + std::to_string(fiber) + "\n";
                }
                emit("strata dims", a.datum, a.gamma, j, text);
            }
            return 0;
        }
        if (rp_dim->parsed()) {
            AdmissibleDatum a = t.admissible();
            i64 dim = weyl_dimension(a.datum, a.gamma);
            emit("rep dim", a.datum, a.gamma, Json{{"dim", dim}},
                 std::to_string(dim) + "\n");
            return 0;
        }
        if (rp_char->parsed()) {
            AdmissibleDatum a = t.admissible();
            CharacterMultiset c = character(a.datum, a.gamma);
            Json j = Json::array();
            std::string text;
            for (const auto& [w, m] : c.mult) {
                j.push_back(Json{{"weight", w.c}, {"mult", m}});
                text += vec_str(w.c) + "  x" + std::to_string(m) + "\n";
            }
            emit("rep char", a.datum, a.gamma, j, text);
            return 0;
        }
        if (rp_tensor->parsed() || rp_wedge->parsed() || rp_sym->parsed() ||
            rp_schur->parsed()) {
            AdmissibleDatum a = t.admissible();
            DecompositionList dec;
            std::string cmd;
            if (rp_tensor->parsed()) {
                dec = tensor_decompose(a.datum, a.gamma, a.gamma);
                cmd = "rep tensor";
            } else if (rp_schur->parsed()) {
                IntegerPartition nu{parse_vec(partition_str)};
                dec = schur_decompose(a.datum, character(a.datum, a.gamma), nu);
                cmd = "rep schur";
            } else {
                PowerKind kind =
                    rp_wedge->parsed() ? PowerKind::exterior : PowerKind::symmetric;
                dec = wedge_sym_decompose(a.datum, a.gamma, k, kind);
                cmd = rp_wedge->parsed() ? "rep wedge" : "rep sym";
            }
            emit(cmd, a.datum, a.gamma, decomposition_json(dec), decomposition_str(dec));
            return 0;
        }
        if (st_tau->parsed()) {
            AdmissibleDatum a = t.admissible();
            Vec mu = parse_vec(mu_str);
            if (mu.empty()) mu = Vec(a.datum.rank, 0);
            Json j = Json::array();
            std::string text;
            for (const TauPartition& tp : tau_partitions(a, d, Coweight{mu})) {
                Json parts = Json::array();
                std::string line;
                for (const auto& [dk, muk] : tp.parts) {
                    parts.push_back(Json{{"d", dk}, {"mu", muk.c}});
                    line += " (" + std::to_string(dk) + "," + vec_str(muk.c) + ")";
                }
                j.push_back(Json{{"parts", parts}, {"dim", affine_dim_to_json(tp.dim)}});
                text += "m=" + std::to_string(tp.length()) + " dim=" +
                        std::to_string(tp.dim.constant) + "+d_N " + line + "\n";
            }
            emit("strata tau", a.datum, a.gamma, j, text);
            return 0;
        }
        if (bd->parsed()) {
            if (build_type.size() != 1) throw UsageError("--type expects a single letter");
            SimplyConnectedDatum H = catalog_simply_connected(build_type[0], build_n);
            int node;
            if (gamma_h == "spin+")
                node = build_n - 1;
            else if (gamma_h == "spin-")
                node = build_n - 2;
            else if (gamma_h == "default") {
                switch (build_type[0]) {
                    case 'C': node = build_n - 1; break;
                    case 'D': node = build_n - 1; break;
                    case 'E': node = build_n == 6 ? 0 : 6; break;
                    default: node = 0;
                }
            } else
                node = std::stoi(gamma_h) - 1;
            Vec gh = build_n == 0 ? Vec{} : fundamental_coweight_scaled(H, node);
            GammaHVerdict v = validate_gamma_h(H, gh);
            if (!v.ok) throw VerifyError("gamma_H rejected: " + v.detail);
            BuiltGroup b = build_admissible_group(H, gh);
            Json j;
            j["h"] = b.h;
            j["datum"] = datum_to_json(b.g);
            j["gamma"] = b.gamma.c;
            emit("build", b.g, b.gamma, j,
                 "rank " + std::to_string(b.g.rank) + ", h = " + std::to_string(b.h) +
                     ", gamma = " + vec_str(b.gamma.c) + "\ncertified\n");
            return 0;
        }
        if (ax->parsed()) return run_appendix(only, app_n);
        throw UsageError("no subcommand selected");
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const VerifyError& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::runtime_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 1;
    }
}
