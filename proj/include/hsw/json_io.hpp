#pragma once

#include <string>

#include <json.hpp>

#include "hsw/algebra.hpp"
#include "hsw/coherent.hpp"
#include "hsw/criteria.hpp"
#include "hsw/error.hpp"
#include "hsw/perm.hpp"
#include "hsw/presentations.hpp"
#include "hsw/schur.hpp"

namespace hsw::io {

using Json = nlohmann::json;  // std::map objects, so keys come out sorted

inline constexpr const char* kSchema = "hsw/1";

/// {"degree": n, "generators": [[images, 1-based], ...]}; an optional
/// "schema" key is accepted. Throws ParseError naming the offending field.
PermGroup group_from_json(const Json& j);
Json group_to_json(const PermGroup& g);

Json config_to_json(const CoherentConfig& c);
Json axioms_to_json(const AxiomReport& r);

Json algebra_to_json(const Algebra& a);
/// Throws ParseError, or the Algebra::create errors.
Algebra algebra_from_json(const Json& j);

Json verdict_to_json(const FormVerdict& v);

/// {"group": "cyclic:n" | {"order": n, "table": [[...]]}, "basic_sets": [[...]]}.
Json partition_to_json(const SchurPartition& p);
SchurPartition partition_from_json(const Json& j);
Json validation_to_json(const SchurValidation& v);

Json rank3_to_json(const Rank3Data& d, const Rank3Test& t);
Json criterion_to_json(const CriterionReport& r);
Json s_report_to_json(const SReport& s);

Json word_algebra_to_json(const WordAlgebra& w, const FormT& t);

Json error_to_json(const Error& e);

/// Flattened "path: value" lines derived from the JSON report.
std::string render_text(const Json& j);

}  // namespace hsw::io
