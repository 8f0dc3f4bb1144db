#pragma once

#include <string>
#include <string_view>

#include "hyperring/multiring.hpp"

namespace hyperring::cli {

/// Parses the line-oriented definition format:
///
///     name: three
///     elements: -1 0 1
///     zero: 0
///     one: 1
///     neg: 1=-1 0=0 -1=1
///     mul: 1*1=1 1*-1=-1 -1*-1=1
///     add: 1+1={1} 1+-1={1,0,-1} -1+-1={-1}
///
/// Keys may repeat (entries accumulate). b*a and b+a are filled from a*b and
/// a+b; a*0 = 0 and a+0 = {a} may be omitted; neg(0) = 0 and neg(neg(a)) = a
/// may be omitted. Throws ParseError.
auto parse_tables(std::string_view text) -> RawTables;
/// parse_tables followed by validation. Throws ParseError or ValidationError.
auto parse_definition(std::string_view text) -> MultiringPtr;

/// Canonical text form; parse_definition(emit_definition(A)) has the same tables.
/// Throws PreconditionFailed if an element name cannot be written in the format.
auto emit_definition(const Multiring& A) -> std::string;

/// An element name the format can carry: nonempty, balanced () and [],
/// and none of whitespace # : { } = * + , outside brackets.
auto is_writable_name(std::string_view name) -> bool;

}  // namespace hyperring::cli
