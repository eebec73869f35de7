// Copyright (c) 2026 the tsc-graphs authors
// Licensed under the Apache License, Version 2.0.

#pragma once

#include <stdexcept>
#include <string>

namespace tsc {

enum class ErrorCode {
  NotPrime,
  ModulusReducible,
  NotPrimitive,
  FieldTooLarge,
  ZeroHasNoLog,
  DivisionByZero,
  NotEdgeWellDefined,
  BadPartition,
  SingularGenerator,
  BadRecoloring,
  NotStandardForm,
  NotColorPermuting,
  EnumerationTooLarge,
  ImpossibleTarget,
  NotBinaryField,
  ParseError,
  UnknownCase,
  InvalidArgument,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::ModulusReducible: return "ModulusReducible";
    case ErrorCode::NotPrimitive: return "NotPrimitive";
    case ErrorCode::FieldTooLarge: return "FieldTooLarge";
    case ErrorCode::ZeroHasNoLog: return "ZeroHasNoLog";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NotEdgeWellDefined: return "NotEdgeWellDefined";
    case ErrorCode::BadPartition: return "BadPartition";
    case ErrorCode::SingularGenerator: return "SingularGenerator";
    case ErrorCode::BadRecoloring: return "BadRecoloring";
    case ErrorCode::NotStandardForm: return "NotStandardForm";
    case ErrorCode::NotColorPermuting: return "NotColorPermuting";
    case ErrorCode::EnumerationTooLarge: return "EnumerationTooLarge";
    case ErrorCode::ImpossibleTarget: return "ImpossibleTarget";
    case ErrorCode::NotBinaryField: return "NotBinaryField";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownCase: return "UnknownCase";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace tsc
