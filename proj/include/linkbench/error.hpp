// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: © 2026 The linkbench authors

#pragma once

#include <stdexcept>
#include <string>

namespace linkbench {

/// Base of every error raised by the models and the scenario loader.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Bad input: schema violations, broken invariants, missing files. CLI exit 1.
class ValidationError : public Error {
   public:
    using Error::Error;
};

/// A well-formed input outside the domain where a model is defined. CLI exit 2.
class ModelError : public Error {
   public:
    using Error::Error;
};

/// File output failures. CLI exit 1.
class IoError : public Error {
   public:
    using Error::Error;
};

class InfeasibleLinkError : public ModelError {
   public:
    using ModelError::ModelError;
};

class UnsupportedPitchError : public ModelError {
   public:
    using ModelError::ModelError;
};

class ConvergenceError : public ModelError {
   public:
    using ModelError::ModelError;
};

class DomainError : public ModelError {
   public:
    using ModelError::ModelError;
};

namespace detail {

inline void require(bool cond, const std::string& what) {
    if (!cond) throw ValidationError(what);
}

}  // namespace detail

}  // namespace linkbench
