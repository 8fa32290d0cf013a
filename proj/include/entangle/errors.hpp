// Copyright 2026 The entangle Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace entangle {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract input (wrong lengths, zero vectors, bad files).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Local dimensions outside what an operation supports, or mismatched shapes.
class DimensionError : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

/// A numerical precondition failed: non-Hermitian input, purity gate,
/// determinant sign inconsistent with a pure state.
class NumericalError : public Error {
public:
    using Error::Error;
};

}  // namespace entangle
