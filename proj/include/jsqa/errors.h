// jsqa/errors.h

// Copyright 2026  JSQA Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef JSQA_ERRORS_H_
#define JSQA_ERRORS_H_

#include <stdexcept>
#include <string>

namespace jsqa {

// Error taxonomy mirrors the CLI exit codes: usage 1, data 2, runtime 3.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

class DataError : public Error {
 public:
  using Error::Error;
};

class TrainError : public Error {
 public:
  using Error::Error;
};

// Audio file problems carry a reason so callers can tell an unreadable file
// apart from one we refuse to decode.
class AudioIoError : public DataError {
 public:
  enum class Reason {
    kOpenFailed,
    kBadFormat,
    kUnsupportedEncoding,
    kWriteFailed,
  };

  AudioIoError(Reason reason, const std::string& what)
      : DataError(what), reason_(reason) {}

  Reason reason() const { return reason_; }

 private:
  Reason reason_;
};

// Correlation of a zero-variance sequence. Reported explicitly instead of
// coercing to 0 or NaN, so degenerate predictors stay visible.
class UndefinedCorrelation : public DataError {
 public:
  using DataError::DataError;
};

}  // namespace jsqa

#endif  // JSQA_ERRORS_H_
