// Copyright 2026 The mzteleport Authors
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

namespace mzt {

/// A precondition on an argument was violated (bad gain, duplicate label,
/// reused ancilla, foreign registry, ...).
class InvalidArgument : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Visibility was requested for a pair of ports with no light at all.
class UndefinedVisibility : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// A closed-form reference is only available for the layouts printed in the
/// literature; other combinations must go through the network path.
class UnsupportedCase : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

/// The Fock-space oracle was asked for a tensor product it will not build.
class ResourceError : public std::length_error {
  public:
    using std::length_error::length_error;
};

}  // namespace mzt
