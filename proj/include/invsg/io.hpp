#pragma once

#include <string>

#include "invsg/core.hpp"
#include "invsg/pbij.hpp"

namespace invsg {

/// Carrier JSON: {"n": int, "table": [[int]], "names": [string]?}.
/// Throws InvalidInput on malformed JSON, ValidationError on a bad table.
FiniteInvSemigroup parse_carrier(std::string const& text);
FiniteInvSemigroup read_carrier_file(std::string const& path);

/// One-line JSON; names are included only when some element has one.
std::string carrier_to_json(FiniteInvSemigroup const& s);

/// Topology JSON: {"points": int, "opens": [[int]]}, opens as point lists.
FiniteTopology parse_topology(std::string const& text);

/// A finite subject read from disk: a carrier file, or a topology file
/// which stands for the pseudogroup of the space.
FiniteInvSemigroup read_finite_subject(std::string const& path);

std::string read_text_file(std::string const& path);

} // namespace invsg
