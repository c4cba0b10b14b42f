// Copyright 2026 The clockwalk Authors
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

namespace clockwalk {

/// Bad user input: malformed files, inconsistent configuration, contract
/// violations of user-supplied circuits. The CLI maps this to exit status 1.
class ValidationError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A configured dimension or length cap would be exceeded.
class CapExceeded : public ValidationError {
   public:
    using ValidationError::ValidationError;
};

/// An internal invariant failed. Exit status 2.
class InvariantViolation : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

}  // namespace clockwalk
