// Copyright 2026 The shviz Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SHVIZ_ERROR_H_
#define SHVIZ_ERROR_H_

#include <stdexcept>
#include <string>

namespace shviz {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of a function, e.g. (n, m) with |m| > n.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Vector/matrix sizes or SH orders that do not agree.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// User-facing parameter out of its accepted range.
class ParameterError : public Error {
 public:
  using Error::Error;
};

// A quadrature grid that is not exact enough for the requested computation.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class UnsupportedDegreeError : public Error {
 public:
  using Error::Error;
};

// Singular systems, failed convergence.
class NumericalError : public Error {
 public:
  using Error::Error;
};

// No unique great circle between two (nearly) antipodal points.
class DegeneratePathError : public Error {
 public:
  using Error::Error;
};

// Unreadable/unwritable files and malformed file contents.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace shviz

#endif  // SHVIZ_ERROR_H_
