#include "oneadm/json_io.hpp"

#include <fstream>

namespace oneadm {

namespace {

Vec vec_from_json(const Json& j) {
    if (!j.is_array()) throw std::runtime_error("datum file: expected an array of integers");
    Vec v;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw std::runtime_error("datum file: expected an integer");
        v.push_back(x.get<i64>());
    }
    return v;
}

}  // namespace

DatumFile datum_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("rank") || !j.contains("simple_roots") ||
        !j.contains("simple_coroots"))
        throw std::runtime_error("datum file: need rank, simple_roots, simple_coroots");
    DatumFile f;
    f.spec.rank = j.at("rank").get<int>();
    for (const auto& r : j.at("simple_roots")) f.spec.simple_roots.push_back(vec_from_json(r));
    for (const auto& r : j.at("simple_coroots"))
        f.spec.simple_coroots.push_back(vec_from_json(r));
    if (j.contains("labels"))
        for (const auto& l : j.at("labels")) f.spec.labels.push_back(l.get<std::string>());
    else
        for (size_t i = 0; i < f.spec.simple_roots.size(); ++i)
            f.spec.labels.push_back("a" + std::to_string(i + 1));
    if (j.contains("gamma")) f.gamma = Coweight{vec_from_json(j.at("gamma"))};
    return f;
}

DatumFile load_datum_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open datum file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const Json::parse_error& e) {
        throw std::runtime_error("malformed datum file: " + std::string(e.what()));
    }
    return datum_from_json(j);
}

Json datum_to_json(const RootDatum& d) {
    Json j;
    j["rank"] = d.rank;
    j["simple_roots"] = Json::array();
    for (const Weight& r : d.simple_roots) j["simple_roots"].push_back(r.c);
    j["simple_coroots"] = Json::array();
    for (const Coweight& c : d.simple_coroots) j["simple_coroots"].push_back(c.c);
    j["labels"] = d.labels;
    return j;
}

std::string datum_fingerprint(const RootDatum& d, const Coweight& gamma) {
    Json j = datum_to_json(d);
    j["gamma"] = gamma.c;
    size_t h = std::hash<std::string>{}(j.dump());
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016zx", h);
    return buf;
}

Json admissibility_to_json(const AdmissibilityReport& r) {
    Json j;
    auto cond = [](const ConditionVerdict& v) {
        return Json{{"ok", v.ok}, {"detail", v.detail}};
    };
    j["center"] = cond(r.center);
    j["fundamental_group"] = cond(r.fundamental_group);
    j["minuscule_generator"] = cond(r.minuscule_generator);
    j["faithful"] = cond(r.faithful);
    j["degree_one_minuscule"] = Json::array();
    for (const Coweight& c : r.degree_one_minuscule) j["degree_one_minuscule"].push_back(c.c);
    j["injective_to_pi1"] = r.injective_to_pi1;
    j["overall"] = r.overall;
    return j;
}

Json hilbert_basis_to_json(const HilbertBasisReport& r) {
    Json j;
    j["generators"] = Json::array();
    for (const auto& [g, deg] : r.generators)
        j["generators"].push_back(Json{{"coweight", g.c}, {"degree", deg}});
    j["verified_up_to"] = r.verified_up_to;
    j["is_free"] = r.is_free;
    j["representation_failures"] = Json::array();
    for (const Coweight& c : r.representation_failures)
        j["representation_failures"].push_back(c.c);
    return j;
}

Json affine_dim_to_json(const AffineDim& d) {
    return Json{{"const", d.constant}, {"d_N", d.d_n}, {"d_G", d.d_g}, {"d_M", d.d_m}};
}

}  // namespace oneadm
