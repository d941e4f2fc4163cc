#pragma once

#include <stdexcept>
#include <string>

namespace dyndom {

enum class Errc {
  SelfLoop,
  DuplicateEdge,
  MissingEdge,
  ParseError,
  AlreadyMember,
  StillNeeded,
  Disconnected,
  NoShortConnector,
  TooLarge,
  InternalInconsistency,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace dyndom
