#ifndef LCMBINOM_ERROR_HPP
#define LCMBINOM_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace lcmbinom {

enum class errc {
    range_contains_zero,
    k_exceeds_n,
    not_prime,
    zero_input,
    zero_k,
    horizon_too_small,
    zero_denominator,
    invalid_format,
    malformed_bfile,
};

constexpr std::string_view to_string(errc code) noexcept
{
    switch (code) {
    case errc::range_contains_zero: return "RangeContainsZero";
    case errc::k_exceeds_n: return "KExceedsN";
    case errc::not_prime: return "NotPrime";
    case errc::zero_input: return "ZeroInput";
    case errc::zero_k: return "ZeroK";
    case errc::horizon_too_small: return "HorizonTooSmall";
    case errc::zero_denominator: return "ZeroDenominator";
    case errc::invalid_format: return "InvalidFormat";
    case errc::malformed_bfile: return "MalformedBfile";
    }
    return "Unknown";
}

/// Rejected input. Violated preconditions surface as this; broken internal
/// identities (which would contradict a theorem) throw std::logic_error.
class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code)
    {
    }

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

} // namespace lcmbinom

#endif // LCMBINOM_ERROR_HPP
