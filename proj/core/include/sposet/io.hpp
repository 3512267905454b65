#ifndef SPOSET_IO_HPP_
#define SPOSET_IO_HPP_

#include <string>

#include "sposet/pomonoid.hpp"
#include "sposet/sposet.hpp"
#include "sposet/tensor.hpp"

namespace sposet {

//! JSON document formats.  All element references are by name; names must
//! be unique within a structure.
//!
//! Pomonoid:
//!   { "kind": "pomonoid",
//!     "elements": ["1", "e"],
//!     "one": "1",
//!     "mul": [["1", "e"], ["e", "e"]],      // mul[i][j] = elements[i] * elements[j]
//!     "leq": [["e", "1"]] }                 // any generating set of pairs
//!
//! The order is completed to its reflexive-transitive closure before
//! validation, so "leq" may list any generating set; antisymmetry and the
//! algebraic axioms are then checked strictly (failures throw with the
//! full violation report).
//!
//! S-poset:
//!   { "kind": "sposet",
//!     "side": "left",
//!     "monoid": { ... } | "relative/or/absolute/path.json",
//!     "elements": ["a", "b"],
//!     "act": [["a", "b"], ["a", "a"]],      // row i = action of monoid element i
//!     "leq": [["a", "b"]] }
//!
//! Tossing certificate (element names refer to the right S-poset A, the
//! left S-poset B and their monoid):
//!   { "kind": "tossing",
//!     "doubled": false,
//!     "from": ["a", "x"], "to": ["a2", "y"],
//!     "skeleton": ["s", "t"],               // s_1 t_1 s_2 t_2 ... flat
//!     "skeleton2": [...],                   // doubled only
//!     "a_chain": [...], "b_chain": [...],
//!     "c_chain": [...], "d_chain": [...],   // doubled only
//!     "path_steps": 0 }                     // optional
//!
//! Serialisers emit two-space-indented JSON with keys in the order shown
//! and a trailing newline; output is byte-stable for equal inputs.
//! Parsers throw std::invalid_argument — with line and column for syntax
//! errors, with a field path for shape errors, and with the validation
//! report text for axiom failures.

std::string read_text_file(std::string const& path);
void        write_text_file(std::string const& path, std::string const& content);

//! The "kind" field of a document, without validating the rest (syntax
//! errors are reported as for the typed parsers).
std::string document_kind(std::string const& text);

PomonoidPtr parse_pomonoid(std::string const& text);
//! base_dir resolves a relative "monoid" path reference.
SPoset             parse_sposet(std::string const& text, std::string const& base_dir = ".");
TossingCertificate parse_certificate(std::string const& text, SPoset const& A,
                                     SPoset const& B);

std::string to_text(Pomonoid const& S);
std::string to_text(SPoset const& B);
std::string to_text(TossingCertificate const& cert, SPoset const& A, SPoset const& B);

//! read_text_file + parse, resolving monoid references against the file's
//! directory.
PomonoidPtr load_pomonoid(std::string const& path);
SPoset      load_sposet(std::string const& path);

}  // namespace sposet
#endif  // SPOSET_IO_HPP_
