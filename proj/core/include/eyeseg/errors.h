/* Copyright 2026 The eyeseg Authors. All Rights Reserved.

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
#ifndef EYESEG_ERRORS_H_
#define EYESEG_ERRORS_H_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace eyeseg {

// Base of every error thrown by the toolkit. Callers that only need a
// message can catch this; the subclasses carry structured context.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Violated precondition or invalid value for a domain type.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// Malformed record in a line-oriented input. `line` is 1-based.
class ParseError : public Error {
 public:
  ParseError(int64_t line, const std::string& reason)
      : Error("line " + std::to_string(line) + ": " + reason),
        line_(line),
        reason_(reason) {}
  int64_t line() const { return line_; }
  const std::string& reason() const { return reason_; }

 private:
  int64_t line_;
  std::string reason_;
};

class DuplicateFrame : public Error {
 public:
  explicit DuplicateFrame(int64_t frame)
      : Error("duplicate frame " + std::to_string(frame)), frame_(frame) {}
  int64_t frame() const { return frame_; }

 private:
  int64_t frame_;
};

class NonMonotonicFrame : public Error {
 public:
  NonMonotonicFrame(int64_t previous, int64_t frame)
      : Error("frame " + std::to_string(frame) + " follows frame " +
              std::to_string(previous)),
        frame_(frame) {}
  int64_t frame() const { return frame_; }

 private:
  int64_t frame_;
};

// Bad on-disk content. `file` names the offending path.
class FormatError : public Error {
 public:
  FormatError(const std::string& file, const std::string& reason)
      : Error(file + ": " + reason), file_(file) {}
  const std::string& file() const { return file_; }

 private:
  std::string file_;
};

class MissingFrame : public Error {
 public:
  explicit MissingFrame(const std::string& file)
      : Error("missing frame file " + file), file_(file) {}
  const std::string& file() const { return file_; }

 private:
  std::string file_;
};

class MissingAnnotation : public Error {
 public:
  explicit MissingAnnotation(const std::string& feature)
      : Error("missing annotation: " + feature), feature_(feature) {}
  const std::string& feature() const { return feature_; }

 private:
  std::string feature_;
};

class NoFeasiblePoint : public Error {
 public:
  using Error::Error;
};

class PromptInfeasible : public Error {
 public:
  PromptInfeasible(const std::string& side, const std::string& reason)
      : Error("prompt infeasible (" + side + "): " + reason),
        side_(side),
        reason_(reason) {}
  const std::string& side() const { return side_; }
  const std::string& reason() const { return reason_; }

 private:
  std::string side_;
  std::string reason_;
};

class DegenerateFit : public Error {
 public:
  using Error::Error;
};

class LengthMismatch : public Error {
 public:
  using Error::Error;
};

class DegenerateVariance : public Error {
 public:
  using Error::Error;
};

// Inputs that are individually valid but do not belong together
// (dimension or frame-count mismatch between an archive and a track).
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace eyeseg

#endif  // EYESEG_ERRORS_H_
