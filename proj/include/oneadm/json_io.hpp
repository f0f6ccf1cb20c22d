// JSON serialization of data and reports, the on-disk datum file format,
// and deterministic fingerprints.  Field order is fixed so repeated runs
// emit byte-identical output.

#pragma once

#include <json.hpp>
#include <string>

#include "oneadm/admissible.hpp"
#include "oneadm/semigroup.hpp"
#include "oneadm/strata.hpp"

namespace oneadm {

using Json = nlohmann::ordered_json;

// file format: {"rank": N, "simple_roots": [[..]..], "simple_coroots":
// [[..]..], "labels": [".."], "gamma": [..] (optional)}
struct DatumFile {
    DatumSpec spec;
    std::optional<Coweight> gamma;
};

DatumFile datum_from_json(const Json& j);           // throws std::runtime_error
DatumFile load_datum_file(const std::string& path); // throws std::runtime_error

Json datum_to_json(const RootDatum& d);
std::string datum_fingerprint(const RootDatum& d, const Coweight& gamma);

Json admissibility_to_json(const AdmissibilityReport& r);
Json hilbert_basis_to_json(const HilbertBasisReport& r);
Json affine_dim_to_json(const AffineDim& d);

}  // namespace oneadm
