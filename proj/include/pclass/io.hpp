#pragma once

#include <iosfwd>
#include <string>

#include "pclass/complex.hpp"

namespace pclass {

/** Parses the facet-list text format: one facet per line as
 *  whitespace-separated positive integers; lines starting with `#` are
 *  comments; blank lines are skipped.  */
SimplicialComplex parse_facet_text(const std::string& text);

/** Reads a facet-list file from disk. */
SimplicialComplex read_facet_file(const std::string& path);

/** Serializes to the facet-list text format (sorted facets, single spaces,
 *  trailing newline) so that parse ∘ write is the identity.  */
std::string write_facet_text(const SimplicialComplex& cx);

/** Structured single-document form with fields `dimension`, `vertices`,
 *  `facets`; round-trips bit-exactly through parse_structured_text.  */
std::string write_structured_text(const SimplicialComplex& cx);
SimplicialComplex parse_structured_text(const std::string& text);

/** 64-bit FNV-1a of a byte string, rendered as fixed-width hex; used to
 *  identify inputs in output documents.  */
std::string content_hash(const std::string& bytes);

}  // namespace pclass
