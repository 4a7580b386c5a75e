#pragma once

#include "wbcsp/classify.hpp"
#include "wbcsp/function.hpp"
#include "wbcsp/instance.hpp"
#include "wbcsp/reductions.hpp"

#include <iosfwd>
#include <string>

namespace wbcsp::io {

// Line-oriented text formats, version-tagged on the first line.
//
//   wbcsp-language v1
//   fn <name> <arity> : <2^arity rational values>
//
//   wbcsp-instance v1
//   language <path>                (optional, at most once)
//   fn <name> <arity> : <values>   (inline functions)
//   var <name>...
//   constraint <function> <var>...
//
//   wbcsp-graph v1
//   vertex <name>...
//   edge <from> <to>
//
// '#' starts a comment; blank lines are ignored.  Serialization is
// canonical (single spaces, lowest-terms values), so parse . serialize
// is the identity on parsed documents.

ConstraintLanguage parse_language(std::istream& in);
ConstraintLanguage parse_language_file(const std::string& path);
std::string serialize_language(const ConstraintLanguage& language);

// Instance files may pull their language from a referenced file; relative
// paths resolve against base_dir (directory of the instance file).
Instance parse_instance(std::istream& in, const std::string& base_dir = ".");
Instance parse_instance_file(const std::string& path);
// include_language_path: emit a "language <path>" reference instead of
// inlining the functions.
std::string serialize_instance(const Instance& instance, const std::string& language_path = "");

reductions::DirectedMultigraph parse_graph(std::istream& in);
reductions::DirectedMultigraph parse_graph_file(const std::string& path);
std::string serialize_graph(const reductions::DirectedMultigraph& graph);

std::string serialize_matrix(const reductions::Matrix2& matrix);

// One-record-per-line classification report; ends with the verdict line
// and, for HARD, the certificate line.
std::string verdict_report(const LanguageVerdict& verdict);

}  // namespace wbcsp::io
