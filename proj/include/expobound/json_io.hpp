#pragma once

// JSON forms of the library types. Matrices are
//   {"rows": R, "cols": C, "entries": [[re, im], ...]}   (row-major)
// and round-trip finite doubles bit-exactly.

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "expobound/matrix_core.hpp"
#include "expobound/sequence_kit.hpp"

namespace expobound {

using json = nlohmann::json;

json matrix_to_json(const ComplexMatrix& A);
/// Throws std::invalid_argument on malformed input (shape mismatch, non-finite entries).
ComplexMatrix matrix_from_json(const json& j);

json sequence_to_json(const DecaySequence& x);
DecaySequence sequence_from_json(const json& j);

json arrangement_to_json(const ArrangementResult& r);

json read_json_file(const std::filesystem::path& path);
/// Pretty-printed with a trailing newline; doubles use the shortest exact form.
void write_json_file(const std::filesystem::path& path, const json& j);

/// Writes to path, or to stdout when path is "-".
void emit_json(const std::string& path, const json& j);

}  // namespace expobound
