#ifndef SCENMINE_ERRORS_HPP_
#define SCENMINE_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace scenmine {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input text (scene file, catalog file, config file).
class SyntaxError : public Error {
 public:
  explicit SyntaxError(const std::string& what) : Error("syntax error: " + what) {}
};

// Structurally well-formed input that violates a model invariant. The message
// carries the offending field path.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what) : Error("validation error: " + what) {}
};

class EmptySceneError : public ValidationError {
 public:
  explicit EmptySceneError(const std::string& scene_id)
      : ValidationError("scene '" + scene_id + "' has no actors") {}
};

class DegenerateGeometryError : public Error {
 public:
  explicit DegenerateGeometryError(const std::string& what)
      : Error("degenerate geometry: " + what) {}
};

class UnknownTagError : public Error {
 public:
  explicit UnknownTagError(const std::string& name)
      : Error("unknown tag: '" + name + "'") {}
};

class DuplicateCategoryIdError : public Error {
 public:
  explicit DuplicateCategoryIdError(const std::string& id)
      : Error("duplicate category_id: '" + id + "'") {}
};

class UnknownActorError : public Error {
 public:
  explicit UnknownActorError(const std::string& id)
      : Error("unknown actor: '" + id + "'") {}
};

class UnknownSceneError : public Error {
 public:
  explicit UnknownSceneError(const std::string& id)
      : Error("unknown scene: '" + id + "'") {}
};

class GenerationFailedError : public Error {
 public:
  explicit GenerationFailedError(const std::string& what)
      : Error("scene generation failed: " + what) {}
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error("config error: " + what) {}
};

}  // namespace scenmine

#endif  // SCENMINE_ERRORS_HPP_
