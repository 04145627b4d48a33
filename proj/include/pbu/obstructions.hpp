#pragma once

#include <optional>
#include <string>

namespace pbu {

enum class SpaceKind { RealProjLike, ComplexProjLike, QuaternionicProjLike, CayleyPlane, CustomChi };

struct SpaceDescriptor {
    SpaceKind kind = SpaceKind::RealProjLike;
    int n = 1;           // RealProjLike / ComplexProjLike / QuaternionicProjLike
    long long chi = 0;   // CustomChi

    static SpaceDescriptor real_proj(int n) { return {SpaceKind::RealProjLike, n, 0}; }
    static SpaceDescriptor complex_proj(int n) { return {SpaceKind::ComplexProjLike, n, 0}; }
    static SpaceDescriptor quaternionic_proj(int n) { return {SpaceKind::QuaternionicProjLike, n, 0}; }
    static SpaceDescriptor cayley_plane() { return {SpaceKind::CayleyPlane, 2, 0}; }
    static SpaceDescriptor custom(long long chi) { return {SpaceKind::CustomChi, 0, chi}; }

    std::string to_string() const;
};

// Mod-2 Euler characteristics:
//   RP^n-like: 1 (n even) or 0 (n odd); CP^n-, HP^n-like: n+1;
//   Cayley plane: 3 (classes in degrees 0, 8, 16); custom: as given.
long long euler_char_space(const SpaceDescriptor& s);

enum class ObstructionReason { EulerParity, FixedPointProperty };

// Blocked(EulerParity) iff chi is odd: a free involution would force
// chi(X) = 2*chi(X/Z2) via Floyd's formula with empty fixed set.
// Quaternionic-like spaces with n >= 2 are blocked outright: they have the
// fixed point property.
struct ObstructionVerdict {
    bool blocked = false;
    std::optional<ObstructionReason> reason;
    long long chi = 0;
    std::string note;
};

ObstructionVerdict free_involution_obstruction(const SpaceDescriptor& s);

std::string reason_name(ObstructionReason r);

} // namespace pbu
