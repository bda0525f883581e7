/*
 * json_io.hpp -- JSON readers and writers for the library's value types:
 * Laurent polynomials (exponent -> "p/q" objects), Seifert matrices, module
 * elements, metabolizers, multivariable Laurent matrices, rho intervals,
 * certificates and twist-family reports.  Every emitted document is accepted
 * back by the corresponding reader; malformed input raises
 * std::invalid_argument with a descriptive message.
 *
 * Copyright (c) 2026 the concord developers.
 * SPDX-License-Identifier: MIT
 */
#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "concord/alexmodule.hpp"
#include "concord/blanchfield.hpp"
#include "concord/l2sig.hpp"
#include "concord/laurent.hpp"
#include "concord/ledger.hpp"
#include "concord/seifert.hpp"
#include "concord/twistlab.hpp"

namespace concord {

using Json = nlohmann::json;

/**
 * Parse a JSON file.  Unreadable paths and syntax errors raise
 * std::invalid_argument; parse failures keep the line/column diagnostics.
 */
Json load_json_file(const std::string& path);

/** {"2": "-7", "1": "15", "0": "-7"}: exponent keys, exact coefficients. */
Json laurent_to_json(const LaurentPoly& f);
LaurentPoly laurent_from_json(const Json& j);

/** {"matrix": [[int, ...], ...]}; oversize entries serialize as strings. */
Json seifert_to_json(const SeifertMatrix& V);
SeifertMatrix seifert_from_json(const Json& j);

/** {"coords": [laurent, ...]}; the reader reduces in the given module. */
Json element_to_json(const ModuleElement& e);
ModuleElement element_from_json(const AlexanderModule& A, const Json& j);
/** An array of elements. */
std::vector<ModuleElement> elements_from_json(const AlexanderModule& A,
                                              const Json& j);

/** {"vectors": [[int, ...], ...]}. */
Json metabolizer_to_json(const Metabolizer& m);
Metabolizer metabolizer_from_json(const Json& j);

/** A term list [{"exps": [e1, ..., ek], "coeff": "p/q"}, ...]. */
Json multilaurent_to_json(const MultiLaurent& f);
MultiLaurent multilaurent_from_json(const Json& j, int nvars);

/** {"nvars": k, "entries": [[term-list, ...], ...]}; validated Hermitian. */
Json hermitian_to_json(const HermitianLaurentMatrix& M);
HermitianLaurentMatrix hermitian_from_json(const Json& j);

/** {"lo": "-inf"|"p/q", "hi": "+inf"|"p/q", "provenance": [...]}. */
Json interval_to_json(const RhoInterval& iv);
RhoInterval interval_from_json(const Json& j);

Json certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const Json& j);

Json report_to_json(const TwistReport& r);
TwistReport report_from_json(const Json& j);

}  // namespace concord
