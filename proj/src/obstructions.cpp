#include "pbu/obstructions.hpp"

namespace pbu {

std::string SpaceDescriptor::to_string() const {
    switch (kind) {
        case SpaceKind::RealProjLike: return "RP^" + std::to_string(n) + "-like";
        case SpaceKind::ComplexProjLike: return "CP^" + std::to_string(n) + "-like";
        case SpaceKind::QuaternionicProjLike: return "HP^" + std::to_string(n) + "-like";
        case SpaceKind::CayleyPlane: return "Cayley plane";
        case SpaceKind::CustomChi: return "custom space with chi = " + std::to_string(chi);
    }
    return "?";
}

long long euler_char_space(const SpaceDescriptor& s) {
    switch (s.kind) {
        case SpaceKind::RealProjLike: return s.n % 2 == 0 ? 1 : 0;
        case SpaceKind::ComplexProjLike: return s.n + 1;
        case SpaceKind::QuaternionicProjLike: return s.n + 1;
        case SpaceKind::CayleyPlane: return 3;
        case SpaceKind::CustomChi: return s.chi;
    }
    return 0;
}

ObstructionVerdict free_involution_obstruction(const SpaceDescriptor& s) {
    ObstructionVerdict v;
    v.chi = euler_char_space(s);
    if (s.kind == SpaceKind::QuaternionicProjLike && s.n >= 2) {
        v.blocked = true;
        v.reason = ObstructionReason::FixedPointProperty;
        v.note = "quaternionic projective spaces with n >= 2 have the fixed point property";
        return v;
    }
    if (s.kind == SpaceKind::QuaternionicProjLike && s.n == 1) {
        v.note = "an HP^1-like space is a mod-2 4-sphere; the sphere machinery applies, not this tool";
        return v;
    }
    if (v.chi % 2 != 0) {
        v.blocked = true;
        v.reason = ObstructionReason::EulerParity;
        v.note = "chi(X) + chi(fixed set) = 2*chi(X/Z2) has no solution with chi odd and a free action";
    }
    return v;
}

std::string reason_name(ObstructionReason r) {
    return r == ObstructionReason::EulerParity ? "euler_parity" : "fixed_point_property";
}

} // namespace pbu
