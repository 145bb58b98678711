#pragma once

// JSON forms of spectra, descriptors, certificates and search results.

#include "json.hpp"

#include "ckbound/bounds.hpp"
#include "ckbound/search.hpp"

namespace ckbound {

using Json = nlohmann::json;

/// Exact values become strings ("p/q", "a+b*sqrt(d)"), Floats numbers.
Json to_json(const EigenValue& v);
EigenValue eigenvalue_from_json(const Json& j);

/// [{"value": ..., "mult": m}, ...]
Json to_json(const Spectrum& s);
Spectrum spectrum_from_json(const Json& j);

/// {"name", "n", "spectrum", "provenance"}; explicit graphs embed graph6.
Json to_json(const SpectralDescriptor& d);
/// Rebuilds from provenance. SRG/DRG spectra are recomputed and must equal
/// the stored one exactly (ConsistencyError otherwise).
SpectralDescriptor descriptor_from_json(const Json& j);

/// {"k", "descriptor", "ratio": {"exact", "float"}, "verification", "not_attained"}
Json to_json(const BoundCertificate& c);
/// Re-derives the certificate from its embedded descriptor and checks the
/// stated ratio and status. Throws ConsistencyError on any disagreement.
BoundCertificate recheck_certificate(const Json& j);

Json to_json(const TableRow& row);

Json to_json(const SearchResult& r);
SearchResult search_result_from_json(const Json& j);

/// graph6, spectrum and certificate of a search witness.
Json witness_json(const SearchResult& r);

/// {"per_n": [...], "global_best", "exceeded", "witness"?}
Json to_json(const CampaignReport& report);

}  // namespace ckbound
