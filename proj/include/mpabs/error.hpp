/*
 * Copyright 2026 The mpabs Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>

namespace mpabs {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid parameters or inputs; caught before any computation starts.
class ValidationError : public Error {
public:
    using Error::Error;
};

class DimensionError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// Failures of the numerics themselves (overflow, loss of Hermiticity).
class NumericalError : public Error {
public:
    using Error::Error;
};

/// Exact integer arithmetic left the representable range.
class OverflowError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class NonHermitianError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

} // namespace mpabs
