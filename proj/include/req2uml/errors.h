// Copyright 2026 The req2uml Authors.
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

// Errors shared by the loaders and pipeline stages.

#ifndef REQ2UML_ERRORS_H_
#define REQ2UML_ERRORS_H_

#include <stdexcept>
#include <string>

namespace req2uml {

class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Malformed or missing resource; the message carries path and line.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& source, int line, const std::string& what)
      : std::runtime_error(source + ":" + std::to_string(line) + ": " + what) {}
  ResourceError(const std::string& source, const std::string& what)
      : std::runtime_error(source + ": " + what) {}
};

}  // namespace req2uml

#endif  // REQ2UML_ERRORS_H_
