// Built-in root data with their distinguished minuscule coweights.
//
// Coordinates: GL_n is Z^n with simple (co)roots e_i - e_{i+1}.  GSp_2n
// uses a rank n+1 basis {w_1..w_n, z}: the coweight (a_1..a_n; c)
// corresponds to the classical (a_1,...,a_n, c-a_1,...,c-a_n); simple
// coroots are e_i - e_{i+1} and e_n, simple roots e_i - e_{i+1} and
// 2e_n - e_{n+1}.  GSpin_{2n+1} is the dual datum of GSp_2n.

#pragma once

#include <optional>
#include <string>

#include "oneadm/root_datum.hpp"

namespace oneadm {

struct CatalogEntry {
    std::string name;
    RootDatum datum;
    Coweight gamma;
};

CatalogEntry catalog_gl(int n);     // GL_n, n >= 1
CatalogEntry catalog_gsp(int n);    // GSp_2n, n >= 1
CatalogEntry catalog_gspin(int n);  // GSpin_{2n+1}, n >= 1

// "gl4", "gsp4", "gspin5"; the number is the classical subscript
std::optional<CatalogEntry> catalog_lookup(const std::string& name);

}  // namespace oneadm
