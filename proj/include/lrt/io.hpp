#ifndef LRT_IO_HPP
#define LRT_IO_HPP

// Instance files: UTF-8 JSON documents describing a TripleData.  Rationals
// are strings "p/q" (or "p"); every map entry that is not present defaults
// to zero, so minimal files stay small and diff-friendly.  The formal field
// list lives in docs/schema.md.

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "lrt/triple.hpp"

namespace lrt {

// Parse/shape failure; the message carries the JSON path of the offending
// field and, for syntax errors, the byte position reported by the parser.
struct InstanceParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

TripleData instance_from_json(const nlohmann::json& j);
nlohmann::ordered_json instance_to_json(const TripleData& t);

// Reads and parses the file; throws InstanceParseError with diagnostics.
TripleData load_instance(const std::string& path);

// Serializes with stable field order and 2-space indentation (golden-file
// friendly; byte-identical across runs).
std::string instance_to_string(const TripleData& t);

}  // namespace lrt

#endif  // LRT_IO_HPP
