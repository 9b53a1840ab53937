#pragma once

#include <stdexcept>
#include <string>

namespace fss {

// Base for every failure the engine can raise. The CLI maps these to
// exit code 1; usage mistakes are handled before any Error is thrown.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class MissingFileError : public Error {
public:
    explicit MissingFileError(const std::string& path) : Error("missing file: " + path) {}
};

// Structural problem in an input file; carries file and 1-based row.
class SchemaError : public Error {
public:
    SchemaError(const std::string& file, std::size_t row, const std::string& detail)
        : Error(file + ":" + std::to_string(row) + ": " + detail) {}
    SchemaError(const std::string& file, const std::string& detail) : Error(file + ": " + detail) {}
};

class DanglingReferenceError : public Error {
public:
    DanglingReferenceError(const std::string& entity, const std::string& key, const std::string& context)
        : Error("dangling reference: " + entity + " '" + key + "' (" + context + ")") {}
};

class DuplicateKeyError : public Error {
public:
    DuplicateKeyError(const std::string& entity, const std::string& key)
        : Error("duplicate key: " + entity + " '" + key + "'") {}
};

class ConfigError : public Error {
public:
    using Error::Error;
};

class MissingBaselineError : public Error {
public:
    explicit MissingBaselineError(const std::string& pub_id)
        : Error("no citation baseline for any category of cited publication '" + pub_id +
                "' (baselines were not computed from this dataset?)") {}
};

class UndefinedBaselineError : public Error {
public:
    explicit UndefinedBaselineError(const std::string& sds_code)
        : Error("SDS '" + sds_code + "' has no productive researcher; FSS^N undefined") {}
};

class UnknownTerritoryError : public Error {
public:
    explicit UnknownTerritoryError(const std::string& code) : Error("unknown territory: '" + code + "'") {}
};

class IneligibleFieldError : public Error {
public:
    explicit IneligibleFieldError(const std::string& code, const std::string& why)
        : Error("field '" + code + "': " + why) {}
};

class EmptyBylineError : public Error {
public:
    EmptyBylineError() : Error("publication byline is empty") {}
};

class LengthMismatchError : public Error {
public:
    LengthMismatchError(std::size_t a, std::size_t b)
        : Error("length mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

class DegenerateInputError : public Error {
public:
    using Error::Error;
};

class GeoJsonError : public Error {
public:
    using Error::Error;
};

class InvalidParameterError : public Error {
public:
    using Error::Error;
};

}  // namespace fss
