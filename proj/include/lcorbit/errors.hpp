// Copyright 2026 The lcorbit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lcorbit {

// Invalid argument to an otherwise well-formed call: out-of-range vertex,
// length mismatch, incomplete vector where a complete one is required.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& message)
      : std::invalid_argument(message) {}
};

// Malformed textual input (graph6, edge lists, multigraph files, GF4 words).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& message)
      : std::runtime_error(message) {}
};

// Structurally invalid object: a multigraph that is not 4-regular, a
// presentation whose vectors are not supplementary, and similar.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& message)
      : std::runtime_error(message) {}
};

// A configured enumeration cap was exceeded. Counts are never truncated.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& what_cap, std::uint64_t cap)
      : std::runtime_error(what_cap + " cap of " + std::to_string(cap) +
                           " exceeded"),
        cap_name_(what_cap),
        cap_(cap) {}

  const std::string& cap_name() const { return cap_name_; }
  std::uint64_t cap() const { return cap_; }

 private:
  std::string cap_name_;
  std::uint64_t cap_;
};

}  // namespace lcorbit
