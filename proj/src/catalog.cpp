#include "oneadm/catalog.hpp"

#include <stdexcept>

namespace oneadm {

CatalogEntry catalog_gl(int n) {
    if (n < 1) throw std::invalid_argument("catalog_gl: n >= 1 required");
    DatumSpec s;
    s.rank = n;
    for (int i = 0; i + 1 < n; ++i) {
        Vec r(n, 0);
        r[i] = 1;
        r[i + 1] = -1;
        s.simple_roots.push_back(r);
        s.simple_coroots.push_back(r);
        s.labels.push_back("a" + std::to_string(i + 1));
    }
    Vec gamma(n, 0);
    gamma[0] = 1;
    return {"gl" + std::to_string(n), build_root_datum(s), Coweight{gamma}};
}

CatalogEntry catalog_gsp(int n) {
    if (n < 1) throw std::invalid_argument("catalog_gsp: n >= 1 required");
    DatumSpec s;
    s.rank = n + 1;
    for (int i = 0; i + 1 < n; ++i) {
        Vec r(n + 1, 0);
        r[i] = 1;
        r[i + 1] = -1;
        s.simple_roots.push_back(r);
        s.simple_coroots.push_back(r);
        s.labels.push_back("a" + std::to_string(i + 1));
    }
    Vec beta_root(n + 1, 0), beta_coroot(n + 1, 0);
    beta_root[n - 1] = 2;
    beta_root[n] = -1;
    beta_coroot[n - 1] = 1;
    s.simple_roots.push_back(beta_root);
    s.simple_coroots.push_back(beta_coroot);
    s.labels.push_back("b" + std::to_string(n));
    Vec gamma(n + 1, 1);  // classical (1,...,1; 0,...,0)
    return {"gsp" + std::to_string(2 * n), build_root_datum(s), Coweight{gamma}};
}

CatalogEntry catalog_gspin(int n) {
    CatalogEntry gsp = catalog_gsp(n);
    Vec gamma(n + 1, 0);
    gamma[0] = 1;  // classical (1,0,...,0)
    return {"gspin" + std::to_string(2 * n + 1), gsp.datum.dual(), Coweight{gamma}};
}

std::optional<CatalogEntry> catalog_lookup(const std::string& name) {
    auto num = [&](size_t prefix) -> std::optional<int> {
        if (name.size() <= prefix) return std::nullopt;
        int v = 0;
        for (size_t i = prefix; i < name.size(); ++i) {
            if (name[i] < '0' || name[i] > '9') return std::nullopt;
            v = v * 10 + (name[i] - '0');
        }
        return v;
    };
    if (name.rfind("gspin", 0) == 0) {
        auto v = num(5);
        if (v && *v >= 3 && *v % 2 == 1) return catalog_gspin(*v / 2);
        return std::nullopt;
    }
    if (name.rfind("gsp", 0) == 0) {
        auto v = num(3);
        if (v && *v >= 2 && *v % 2 == 0) return catalog_gsp(*v / 2);
        return std::nullopt;
    }
    if (name.rfind("gl", 0) == 0) {
        auto v = num(2);
        if (v && *v >= 1) return catalog_gl(*v);
        return std::nullopt;
    }
    return std::nullopt;
}

}  // namespace oneadm
