// SPDX-FileCopyrightText: 2026 Contributors to the mcbe project.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace mcbe {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Input data violates a contract: malformed files, invalid ladders,
/// missing models, out-of-range values.
class DataError : public Error {
public:
  using Error::Error;
};

/// A file could not be opened, read or written.
class IoError : public Error {
public:
  using Error::Error;
};

}  // namespace mcbe
