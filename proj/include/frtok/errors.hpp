#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace frtok {

// Stable error codes, mirrored one-to-one by the C API status values.
enum class ErrorCode {
    InvalidUtf8 = 1,
    Io = 2,
    FormatViolation = 3,
    InvalidArgument = 4,
    CorpusEmpty = 5,
    VocabTooSmall = 6,
    UnknownId = 7,
    AllSpecial = 8,
    DegenerateTable = 9,
    EmptyStream = 10,
    EmptyCorpus = 11,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

class InvalidUtf8Error : public Error {
  public:
    explicit InvalidUtf8Error(std::size_t byte_offset)
        : Error(ErrorCode::InvalidUtf8,
                "invalid UTF-8 at byte offset " + std::to_string(byte_offset)),
          byte_offset_(byte_offset) {}

    std::size_t byte_offset() const { return byte_offset_; }

  private:
    std::size_t byte_offset_;
};

}  // namespace frtok
