#pragma once

#include <stdexcept>
#include <string>

namespace jobreco {

// Base for everything this library throws. Subclasses map onto the CLI's
// exit-code partition: UsageError -> 1, DataError -> 2, BackendError -> 3.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

// Malformed input data, violated preconditions, strict-JSON failures.
class DataError : public Error {
 public:
  using Error::Error;
};

// A model response that could not be turned into the expected structure.
class ParseError : public DataError {
 public:
  using DataError::DataError;
};

class ExtractionError : public ParseError {
 public:
  ExtractionError(const std::string& message, std::string offending_text)
      : ParseError(message), offending_text_(std::move(offending_text)) {}

  const std::string& offending_text() const { return offending_text_; }

 private:
  std::string offending_text_;
};

class RatingError : public ParseError {
 public:
  using ParseError::ParseError;
};

class EvaluationError : public DataError {
 public:
  using DataError::DataError;
};

// A single input too large to ever fit the token budget.
class OversizeInputError : public DataError {
 public:
  OversizeInputError(const std::string& message, std::string job_id)
      : DataError(message), job_id_(std::move(job_id)) {}

  const std::string& job_id() const { return job_id_; }

 private:
  std::string job_id_;
};

class ScoringError : public DataError {
 public:
  using DataError::DataError;
};

// Backend failures: every complete() call either returns a response or
// throws one of these.
class BackendError : public Error {
 public:
  using Error::Error;
};

class TransportError : public BackendError {
 public:
  using BackendError::BackendError;
};

class TimeoutError : public TransportError {
 public:
  using TransportError::TransportError;
};

class RateLimitError : public BackendError {
 public:
  using BackendError::BackendError;
};

class RefusalError : public BackendError {
 public:
  using BackendError::BackendError;
};

// Non-2xx provider reply that is not retryable.
class ProviderError : public BackendError {
 public:
  ProviderError(const std::string& message, int status, std::string body_excerpt)
      : BackendError(message), status_(status), body_excerpt_(std::move(body_excerpt)) {}

  int status() const { return status_; }
  const std::string& body_excerpt() const { return body_excerpt_; }

 private:
  int status_;
  std::string body_excerpt_;
};

// Scripted backend saw a prompt no matcher covers.
class UnmatchedPromptError : public BackendError {
 public:
  UnmatchedPromptError(const std::string& message, std::string prompt_head)
      : BackendError(message), prompt_head_(std::move(prompt_head)) {}

  const std::string& prompt_head() const { return prompt_head_; }

 private:
  std::string prompt_head_;
};

}  // namespace jobreco
