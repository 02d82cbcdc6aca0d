// SPDX-License-Identifier: Apache-2.0
//
// ris-aoi: sum-AoI scheduling over a relay-aided double-sided RIS
// Copyright (C) 2026 The ris-aoi authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef RISAOI_ERRORS_HPP
#define RISAOI_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace risaoi
{

/// Base class for every error raised by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class NonHermitian : public Error
{
public:
    using Error::Error;
};

class NotPSD : public Error
{
public:
    using Error::Error;
};

class NoConvergence : public Error
{
public:
    using Error::Error;
};

class DimensionMismatch : public Error
{
public:
    using Error::Error;
};

class NonPositiveDistance : public Error
{
public:
    using Error::Error;
};

/// Configuration file does not follow the schema. `field()` names the offending key.
class SchemaError : public Error
{
public:
    SchemaError(std::string field, const std::string &what)
        : Error(field + ": " + what), field_(std::move(field)) {}
    const std::string &field() const noexcept { return field_; }

private:
    std::string field_;
};

/// A configuration value is outside its admissible range.
class RangeError : public Error
{
public:
    RangeError(std::string field, const std::string &what)
        : Error(field + ": " + what), field_(std::move(field)) {}
    const std::string &field() const noexcept { return field_; }

private:
    std::string field_;
};

} // namespace risaoi

#endif
