#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cantorspec/ifs_model.hpp"

namespace cantorspec {

/// Malformed model document (syntax or schema), as opposed to an admissible-but-invalid model.
class ModelFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses the JSON model document:
///
///   { "interval": [a, b],
///     "tolerance": 1e-12,                     (optional)
///     "letters": [ { "id": "third", "prob": 0.6,
///                    "maps": [ {"r": "1/3", "c": 0}, ... ],
///                    "weights": [0.5, 0.5] }, ... ] }
///
/// Every real may be a JSON number or a string holding a decimal or a fraction "p/q".
/// The result is not validated; call validate_model() on it.
IfsModel parse_model(std::string_view json_text);

IfsModel load_model(const std::filesystem::path& path);

/// Canonical JSON rendering (numbers at round-trip precision).
std::string dump_model(const IfsModel& model);

/// FNV-1a 64-bit digest of the bytes, rendered as 16 hex digits.
std::string digest_hex(std::string_view bytes);

/// Parses "p/q", a decimal, or a plain number.
double parse_real(std::string_view text);

}  // namespace cantorspec
