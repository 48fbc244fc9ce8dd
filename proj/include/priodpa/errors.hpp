// Copyright (c) priodpa contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace priodpa {

// Endpoint outside the graph, x == y, or a duplicate request.
class InvalidRequest : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// Construction parameters out of range (adversary families, tree builders, ...).
class InvalidParams : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

class InvalidTree : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// A priority comparator that is not a strict total order on the presented set.
class InvalidOrder : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

// An algorithm tried to accept a request whose allocation overlaps an earlier one.
// This signals a bug in the algorithm, never bad input.
class IllegalAcceptance : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

class AdviceExhausted : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class InstanceTooLarge : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class FormatError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

} // namespace priodpa
