/*
Copyright 2026 The posetdim Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#pragma once

#include <stdexcept>
#include <string>

namespace posetdim {

// Every failure raised by the library derives from Error. The C API maps each
// subclass onto one status code, so keep the two lists in sync.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

// Relation input closes to something that is not a strict order.
class CycleError : public Error {
 public:
  using Error::Error;
};

// A relation handed to a constructor that asserts (rather than repairs) the
// strict-order axioms failed one of them.
class RelationError : public Error {
 public:
  using Error::Error;
};

class SizeError : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class ArityMismatch : public Error {
 public:
  using Error::Error;
};

class NotARealizer : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// Raised when a step that is supposed to be impossible happens anyway.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace posetdim
