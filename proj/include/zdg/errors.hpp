#pragma once

#include <stdexcept>
#include <string>

namespace zdg {

// Every failure the library raises deliberately carries one of these kinds so
// callers (CLI, harness) can map it to an exit code or a skip reason without
// string matching.
enum class ErrorKind {
  MalformedDescriptor,  // structurally invalid descriptor tree
  ParseError,           // descriptor text rejected; position() is meaningful
  OrderCapExceeded,     // construction would exceed the configured order cap
  NotUnital,            // quotient collapsed to a ring without a usable identity
  EmptyGraph,           // alliance operation on a graph with no vertices
  EmptySubset,          // alliance predicate on an empty vertex subset
  TooLarge,             // instance beyond a hard resource cap (e.g. oracle > 24 vertices)
  EnumerationTruncated, // a computation needing all minimum alliances hit the cap
  UnknownCheck,         // harness asked for a check id not in the registry
  IntegrityConflict,    // cache append would contradict an existing record
  IoFailure,            // filesystem problem while reading/writing artifacts
  UnsupportedFormat,    // export format not recognized
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message, std::size_t position = npos)
      : std::runtime_error(std::move(message)), kind_(kind), position_(position) {}

  ErrorKind kind() const { return kind_; }

  // Byte offset into the input for ParseError; npos otherwise.
  std::size_t position() const { return position_; }
  bool has_position() const { return position_ != npos; }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  ErrorKind kind_;
  std::size_t position_;
};

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::MalformedDescriptor: return "MalformedDescriptor";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::OrderCapExceeded: return "OrderCapExceeded";
    case ErrorKind::NotUnital: return "NotUnital";
    case ErrorKind::EmptyGraph: return "EmptyGraph";
    case ErrorKind::EmptySubset: return "EmptySubset";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::EnumerationTruncated: return "EnumerationTruncated";
    case ErrorKind::UnknownCheck: return "UnknownCheck";
    case ErrorKind::IntegrityConflict: return "IntegrityConflict";
    case ErrorKind::IoFailure: return "IoFailure";
    case ErrorKind::UnsupportedFormat: return "UnsupportedFormat";
  }
  return "Unknown";
}

}  // namespace zdg
