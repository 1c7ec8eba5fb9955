#pragma once

#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "hypdet/detrep.hpp"
#include "hypdet/ideal.hpp"
#include "hypdet/nuij.hpp"
#include "hypdet/real_roots.hpp"
#include "hypdet/tripoly.hpp"

namespace hypdet::io {

using Json = nlohmann::ordered_json;

// Polynomial documents: {"vars": [...], "terms": [{"c": "p/q", "e": [...]}]},
// terms sorted by exponent vector.
Json to_json(const UniPoly& p, const std::string& var = "X");
Json to_json(const BiPoly& f);
Json to_json(const TriPoly& f);
UniPoly uni_from_json(const Json& j, const std::string& var = "X");
BiPoly bi_from_json(const Json& j);
TriPoly tri_from_json(const Json& j);
// Names of the variables occurring in a polynomial document.
std::vector<std::string> declared_vars(const Json& j);

// {"d": n, "entries": [...]} row-major.
Json to_json(const PolyMatrix& m);
Json to_json(const RatMatrix& m);
PolyMatrix poly_matrix_from_json(const Json& j);
RatMatrix rat_matrix_from_json(const Json& j);

Json to_json(const RootCertificate& c);
RootCertificate certificate_from_json(const Json& j);

Json to_json(const PerturbTranscript& t);
PerturbTranscript transcript_from_json(const Json& j);

Json to_json(const IdealWitness& w);
IdealWitness witness_from_json(const Json& j);

// The numeric symmetric matrix is attached when supplied.
Json to_json(const DSymCertificate& c, const NumericPolyMatrix* numeric = nullptr);
DSymCertificate dsym_from_json(const Json& j);

Json to_json(const Representation& r);
Representation representation_from_json(const Json& j);

Json to_json(const PencilRep& p);
PencilRep pencil_from_json(const Json& j);

// Sampled root loci as CSV: one row per (series, x) with the sorted real
// roots of f(x, T); missing roots are left empty.
void write_plot_data(std::ostream& out, const std::vector<std::pair<std::string, BiPoly>>& series, double lo,
                     double hi, int samples);

// Canonical text: two-space indented JSON with a trailing newline.
std::string dump(const Json& j);
Json parse(const std::string& text);
Json read_file(const std::string& path);
// Writes to a temporary sibling and renames it into place.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace hypdet::io
