#ifndef BEZSUB_SYSTEM_IO_HPP
#define BEZSUB_SYSTEM_IO_HPP

#include <stdexcept>
#include <string>

#include "bezsub/subresultant.hpp"

namespace bezsub {

/// File-level failure loading a system: missing file, malformed JSON,
/// unparsable polynomial, or a violated system invariant.
class SystemFileError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Loads { "polys": [ ... ] } where each element is either an expression
/// string ("x^2 - 3*x + 2") or an array of rational literals in ascending
/// power order (["2", "-3", "1"]). Validates the PolySystem invariants.
PolySystem load_system(const std::string& path);

/// Same schema, from an already-read JSON document text.
PolySystem parse_system(const std::string& json_text, const std::string& context);

}  // namespace bezsub

#endif
