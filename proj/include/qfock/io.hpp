#pragma once

// Serialization shared by the command-line tool and the tests.
//
// Three families of formats live here.  JSON carries exact data: a Laurent
// polynomial is an array of [exponent, coefficient] pairs in ascending
// exponent order with no zero entries, a Fock vector is its parameters plus
// a list of keyed coefficients, and a transition-matrix run is a parameter
// header plus one object per weight block.  Coefficients are always stored
// in the q variable; the p form is a display convention only.
//
// Text output mirrors the printed tables: one block per weight, a header
// naming the weight as a combination of fundamental weights L_i and simple
// roots a_i, then one row per ket showing the multipartition label, the
// underlying partition, and the matrix entries, with a centered dot for a
// zero entry
// and a leading "*" on rows belonging to the highest weight crystal.
// Matrix cells use a compact polynomial syntax without spaces ("1+q^2",
// "-q^-1", "2q^3") that parses back losslessly, so the tables are machine
// readable as well; the minus basis is conventionally displayed in
// p = -q^-1.
//
// Finally the small literal parsers accept the partition, multipartition
// and charge syntax used on the command line: "[5,2]", "[[3],[]]", and
// "[1,-1]" (charges also accept the bare comma form "1,-1").

#include <string>
#include <vector>

#include "json.hpp"
#include "qfock/canonical.hpp"
#include "qfock/fock.hpp"
#include "qfock/laurent.hpp"
#include "qfock/partition.hpp"

namespace qfock::io {

using nlohmann::json;

// Laurent polynomials as [[exponent, coefficient], ...], ascending, sparse.
json laurent_to_json(const Laurent& f);
Laurent laurent_from_json(const json& j);

// Compact single-token rendering in the given display variable ('q' or
// 'p'); zero prints as "0".  laurent_from_compact inverts it, returning
// the polynomial in the q form whatever the display variable was.
std::string laurent_compact(const Laurent& f, char var = 'q');
Laurent laurent_from_compact(const std::string& s, char var = 'q');

// Literal parsers.  All throw std::invalid_argument with a description of
// the offending text on malformed input.
Partition partition_from_string(const std::string& text);
Multipartition multipartition_from_string(const std::string& text);
Charges charges_from_string(const std::string& text);

std::string charges_to_string(const Charges& s);

// Fock vectors: {"n":..,"l":..,"s":..,"terms":[{"partition":[...],
// "coeff":[[e,c],...]},...]} with terms sorted by key.
json fock_to_json(const FockVector& v);
FockVector fock_from_json(const json& j);

// A transition-matrix run.  basis is "plus", "minus" or "star"; the blocks
// carry the row layout of canonical_basis and, for star, the dual columns.
json canon_to_json(const std::string& basis,
                   const std::vector<TransitionBlock>& blocks);
std::string canon_to_text(const std::string& basis,
                          const std::vector<TransitionBlock>& blocks,
                          char var);

// One parsed text row: crystal flag, both labels, and the parsed cells.
struct ParsedRow {
  bool crystal = false;
  std::string mp;
  std::string underlying;
  std::vector<Laurent> entries;
};

struct ParsedTable {
  std::vector<long> weight;  // alpha coefficients from the header
  std::vector<ParsedRow> rows;
};

// Parses canon_to_text output back into blocks (used by tests to compare
// the emitted tables against independently transcribed ones).
std::vector<ParsedTable> parse_canon_text(const std::string& text, char var);

}  // namespace qfock::io
