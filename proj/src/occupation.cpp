#include "spinpair/occupation.hpp"

namespace spinpair {

int OccupationRegister::occupancy() const {
    int n = 0;
    for (const Slot& s : slots) n += s.occupied ? 1 : 0;
    return n;
}

std::string OccupationRegister::to_string() const {
    static const char* names[4] = {"G-i", "G-j", "C-k", "C-l"};
    std::string out;
    for (int k = 0; k < 4; ++k) {
        if (k) out += ' ';
        out += names[k];
        out += ':';
        out += slots[k].occupied ? to_char(*slots[k].spin) : '-';
    }
    return out;
}

OccupationRegister canonical_register(SpinDir g_spin, SpinDir c_spin) {
    OccupationRegister reg;
    reg.slot(SlotId::GOccupied) = {true, g_spin};
    reg.slot(SlotId::COccupied) = {true, c_spin};
    return reg;
}

bool is_canonical(const OccupationRegister& reg) {
    return reg.slot(SlotId::GOccupied).occupied && reg.slot(SlotId::COccupied).occupied &&
           !reg.slot(SlotId::GVirtual).occupied && !reg.slot(SlotId::CVirtual).occupied;
}

bool is_tautomeric(const OccupationRegister& reg) {
    return !reg.slot(SlotId::GOccupied).occupied &&
           !reg.slot(SlotId::COccupied).occupied &&
           reg.slot(SlotId::GVirtual).occupied && reg.slot(SlotId::CVirtual).occupied;
}

OccupationRegister apply_ladder(const OccupationRegister& reg, const LadderOp& op) {
    OccupationRegister out = reg;
    Slot& s = out.slot(op.slot);
    if (op.kind == LadderKind::Create) {
        if (s.occupied)
            throw PhysicsError("apply_ladder: creation on an occupied slot");
        s = {true, op.spin};
    } else {
        if (!s.occupied)
            throw PhysicsError("apply_ladder: annihilation on an empty slot");
        if (*s.spin != op.spin)
            throw PhysicsError("apply_ladder: annihilation spin does not match slot");
        s = {false, std::nullopt};
    }
    return out;
}

namespace {

// Moves one proton between slots through an annihilate/create pair.
OccupationRegister transfer(const OccupationRegister& reg, SlotId from, SlotId to) {
    const Slot& src = reg.slot(from);
    if (!src.occupied) throw PhysicsError("zwitter_path: source slot is empty");
    const SpinDir spin = *src.spin;
    OccupationRegister mid = apply_ladder(reg, {LadderKind::Annihilate, from, spin});
    return apply_ladder(mid, {LadderKind::Create, to, spin});
}

}  // namespace

TransferResult zwitter_path(const OccupationRegister& reg, TransferPath path) {
    if (!is_canonical(reg))
        throw PhysicsError("zwitter_path: register is not a canonical configuration");
    if (path == TransferPath::GToCFirst) {
        OccupationRegister mid = transfer(reg, SlotId::GOccupied, SlotId::CVirtual);
        OccupationRegister fin = transfer(mid, SlotId::COccupied, SlotId::GVirtual);
        return {mid, fin};
    }
    OccupationRegister mid = transfer(reg, SlotId::COccupied, SlotId::GVirtual);
    OccupationRegister fin = transfer(mid, SlotId::GOccupied, SlotId::CVirtual);
    return {mid, fin};
}

OccupationRegister relabel_tautomer_as_canonical(const OccupationRegister& reg) {
    if (!is_tautomeric(reg))
        throw PhysicsError("relabel_tautomer_as_canonical: register is not tautomeric");
    OccupationRegister out;
    out.slot(SlotId::GOccupied) = reg.slot(SlotId::GVirtual);
    out.slot(SlotId::GVirtual) = reg.slot(SlotId::GOccupied);
    out.slot(SlotId::CVirtual) = reg.slot(SlotId::COccupied);
    out.slot(SlotId::COccupied) = reg.slot(SlotId::CVirtual);
    return out;
}

RegisterSuperposition zwitter_path(const RegisterSuperposition& sup, TransferPath path) {
    RegisterSuperposition out;
    out.reserve(sup.size());
    for (const auto& [w, reg] : sup) out.push_back({w, zwitter_path(reg, path).final});
    return out;
}

}  // namespace spinpair
