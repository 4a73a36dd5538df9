#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace pgi {

// Failure categories surfaced by the library. Axiom violations carry the
// first witness found (e.g. the triple breaking associativity) in `witness`.
enum class ErrKind {
  NotLatin,
  NoIdentity,
  NotAssociative,
  NotNested,
  NotGenerating,
  NotSeriesIso,
  InternalContradiction,
  MalformedGraph,
  BadParameters,
  BadPermutation,
  BadInput,
  Overflow,
};

const char* to_string(ErrKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrKind kind, std::string message, std::vector<int> witness = {})
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind),
        witness_(std::move(witness)) {}

  ErrKind kind() const { return kind_; }
  const std::vector<int>& witness() const { return witness_; }

 private:
  ErrKind kind_;
  std::vector<int> witness_;
};

inline const char* to_string(ErrKind k) {
  switch (k) {
    case ErrKind::NotLatin: return "NotLatin";
    case ErrKind::NoIdentity: return "NoIdentity";
    case ErrKind::NotAssociative: return "NotAssociative";
    case ErrKind::NotNested: return "NotNested";
    case ErrKind::NotGenerating: return "NotGenerating";
    case ErrKind::NotSeriesIso: return "NotSeriesIso";
    case ErrKind::InternalContradiction: return "InternalContradiction";
    case ErrKind::MalformedGraph: return "MalformedGraph";
    case ErrKind::BadParameters: return "BadParameters";
    case ErrKind::BadPermutation: return "BadPermutation";
    case ErrKind::BadInput: return "BadInput";
    case ErrKind::Overflow: return "Overflow";
  }
  return "Unknown";
}

}  // namespace pgi
