#pragma once

// Recursive-descent readers for the canonical grammars, shared so that one
// grammar can embed another (closable bodies are Motzkin trees, open terms
// wrap lambda terms).

#include "lamfam/motzkin.hpp"
#include "text_reader.hpp"

namespace lamfam::detail {

Motzkin read_motzkin(TextReader& r);

}  // namespace lamfam::detail
