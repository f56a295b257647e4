#pragma once

#include <stdexcept>
#include <string>

namespace planebranch {

enum class errc {
    not_primitive,
    not_plane_branch,
    not_minimal,
    not_coprime,
    not_short_form,
    precision_exhausted,
    no_convergence,
    lambda_empty,
    unsupported_semigroup,
    semigroup_mismatch,
    bad_case,
    parse_error,
    duplicate_exponent,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::not_primitive: return "NOT_PRIMITIVE";
        case errc::not_plane_branch: return "NOT_PLANE_BRANCH";
        case errc::not_minimal: return "NOT_MINIMAL";
        case errc::not_coprime: return "NOT_COPRIME";
        case errc::not_short_form: return "NOT_SHORT_FORM";
        case errc::precision_exhausted: return "PRECISION_EXHAUSTED";
        case errc::no_convergence: return "NO_CONVERGENCE";
        case errc::lambda_empty: return "LAMBDA_EMPTY";
        case errc::unsupported_semigroup: return "UNSUPPORTED_SEMIGROUP";
        case errc::semigroup_mismatch: return "SEMIGROUP_MISMATCH";
        case errc::bad_case: return "BAD_CASE";
        case errc::parse_error: return "PARSE_ERROR";
        case errc::duplicate_exponent: return "DUPLICATE_EXPONENT";
    }
    return "UNKNOWN";
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

}  // namespace planebranch
