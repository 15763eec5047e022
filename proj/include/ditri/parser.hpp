#pragma once

#include <stdexcept>
#include <string>

#include "ditri/workspace.hpp"

namespace ditri {

/* Error with source location already formatted as "source:line:col: message". */
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/* Parses a sequence of statements and defines the objects into ws.
   Statements:
     signature NAME [mode di|tri] { op NAME : ARITY [flags : FLAG] ; ... }
     identity NAME over SIG : LINCOMB = 0 ;
     system NAME [over SIG] = { ID, ... } ;
     morphism NAME : SIG -> SIG { OP |-> LINCOMB ; ... }
     algebra NAME over SIG dim N { basis B, ... ; OP(B,...) = ELEM ; ... }
     operator NAME on ALG = [[RAT,...], ...] ;
   Comments run from '#' to end of line.  Decorated ops are written f^{1,3};
   binary ops of a mode-di signature may also be written f< and f>. */
void parse_document(const std::string& text, const std::string& source_name, Workspace& ws);

/* Parses one linear combination over sig; the whole string must be consumed. */
LinComb parse_lincomb(const std::string& text, const Signature& sig);

} // namespace ditri
