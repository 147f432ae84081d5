/* Copyright 2026 The ipc1 Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ipc1 {

// Base of everything the library throws for bad input. Logic errors
// (std::logic_error) are reserved for internal defects.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& message, std::size_t position)
      : Error("syntax error at " + std::to_string(position) + ": " + message),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class UnknownVariable : public SyntaxError {
 public:
  UnknownVariable(const std::string& name, std::size_t position)
      : SyntaxError("unknown variable '" + name + "' (only 'a' is allowed)",
                    position) {}
};

class SizeLimitExceeded : public Error {
 public:
  using Error::Error;
};

class InvalidModel : public Error {
 public:
  using Error::Error;
};

class UnknownState : public Error {
 public:
  explicit UnknownState(const std::string& name)
      : Error("unknown state '" + name + "'") {}
};

class InadmissibleModel : public Error {
 public:
  using Error::Error;
};

class AxiomIsBot : public Error {
 public:
  AxiomIsBot() : Error("axiom bot yields an inconsistent logic") {}
};

class InvalidSliceGraph : public Error {
 public:
  using Error::Error;
};

class UnknownNode : public Error {
 public:
  explicit UnknownNode(const std::string& name)
      : Error("unknown node '" + name + "'") {}
};

class BadParameters : public Error {
 public:
  using Error::Error;
};

class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace ipc1
