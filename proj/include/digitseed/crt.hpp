#pragma once

#include "digitseed/cover.hpp"

#include <optional>

namespace digitseed {

/// An arithmetic progression of seeds: residue + j * modulus, j >= 0.
struct ProgressionFamily {
    BigInt residue;
    BigInt modulus;

    friend bool operator==(const ProgressionFamily&, const ProgressionFamily&) = default;
};

class CrtConflictError : public std::runtime_error {
public:
    CrtConflictError(ResidueClass a, ResidueClass b, const std::string& what)
        : std::runtime_error(what), first(std::move(a)), second(std::move(b)) {}

    ResidueClass first;
    ResidueClass second;
};

/// The unique class modulo lcm of all moduli satisfying every condition.
/// Non-coprime moduli are merged when consistent; the first conflicting pair
/// of input conditions is reported otherwise.
ProgressionFamily crt_combine(const CongruenceSystem& system);

/// Smallest positive member of the family, optionally restricted to members
/// coprime to `coprime_to`. Scans a bounded number of steps and throws when
/// the side condition is never met.
BigInt smallest_member(const ProgressionFamily& family,
                       const std::optional<BigInt>& coprime_to = std::nullopt);

}  // namespace digitseed
