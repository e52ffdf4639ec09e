#pragma once

#include <stdexcept>
#include <string>

namespace srg {

// Error taxonomy shared by the library and the CLI exit-code mapping:
// schema errors (bad documents, bad flags) vs numeric/domain failures.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

class SchemaError : public Error {
public:
    explicit SchemaError(const std::string& what) : Error("schema_error", what) {}
};

class NonsquareSystemError : public Error {
public:
    explicit NonsquareSystemError(const std::string& what) : Error("nonsquare_system", what) {}
};

class NumericError : public Error {
public:
    NumericError(std::string code, const std::string& what) : Error(std::move(code), what) {}
};

inline NumericError rank_deficient_error(const std::string& what) {
    return NumericError("rank_deficient", what);
}
inline NumericError improper_system_error(const std::string& what) {
    return NumericError("improper_system", what);
}
inline NumericError pole_on_grid_error(const std::string& what) {
    return NumericError("pole_on_grid", what);
}
inline NumericError on_curve_error(const std::string& what) {
    return NumericError("on_curve", what);
}
inline NumericError ill_posed_error(const std::string& what) {
    return NumericError("ill_posed", what);
}
inline NumericError horizon_overflow_error(const std::string& what) {
    return NumericError("horizon_overflow", what);
}
inline NumericError soft_requires_stable_error(const std::string& what) {
    return NumericError("soft_requires_stable", what);
}
inline NumericError degenerate_pair_error(const std::string& what) {
    return NumericError("degenerate_pair", what);
}

}  // namespace srg
