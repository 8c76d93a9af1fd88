#pragma once

#include <iosfwd>
#include <string>

#include "gridflow/case_model.hpp"
#include "gridflow/errors.hpp"

namespace gridflow {

// Sectioned plain-text case format. Each section starts with a header token
// on its own line (Bus.con, PQ.con, PQgen.con, SW.con, PV.con, Shunts.con,
// Line.con, Supply.con, Demand.con, Areas.con, Regions.con,
// LoadLev.{Heavy,Medium,Light}.con, CapacFactor.{Wind,Hydro,FFuel}.con,
// SourceTag.con, Bus.names, Areas.names, Regions.names) followed by one row
// per record. Fields are whitespace-separated; `#` starts a comment; names
// rows are double-quoted strings. Transformer ratios are written "a/b".

/// Parses a case document. Power quantities are rescaled from each record's
/// s_base onto the case system base (100 MVA). Throws ParseError with the
/// offending position on any syntax, arity, or section error.
PowerCase parse_case(std::istream& in);
PowerCase parse_case_text(const std::string& text);
PowerCase parse_case_file(const std::string& path);

/// Writes a case document that parses back to a semantically equal case.
/// Numbers carry enough digits for exact value round trips.
void serialize_case(const PowerCase& c, std::ostream& out);
std::string serialize_case_text(const PowerCase& c);
void serialize_case_file(const PowerCase& c, const std::string& path);

} // namespace gridflow
