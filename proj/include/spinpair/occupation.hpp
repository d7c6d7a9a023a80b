#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "spinpair/errors.hpp"
#include "spinpair/qmath.hpp"

// Classical occupation bookkeeping for the four proton levels of a base
// pair: the donor-side occupied level (G-i), the donor-side virtual level
// (G-j), the acceptor-side virtual level (C-k) and the acceptor-side
// occupied level (C-l).  A slot is occupied or virtual and carries a spin
// while occupied.  Legal operation sequences conserve the proton count (2);
// creation on a filled slot or annihilation on an empty or mismatched slot
// signals a forbidden fermionic action.

namespace spinpair {

enum class SpinDir { Up, Down };

inline char to_char(SpinDir s) { return s == SpinDir::Up ? 'u' : 'd'; }

enum class SlotId : int { GOccupied = 0, GVirtual = 1, CVirtual = 2, COccupied = 3 };

struct Slot {
    bool occupied = false;
    std::optional<SpinDir> spin;  // set iff occupied

    bool operator==(const Slot&) const = default;
};

struct OccupationRegister {
    std::array<Slot, 4> slots;

    const Slot& slot(SlotId id) const { return slots[static_cast<int>(id)]; }
    Slot& slot(SlotId id) { return slots[static_cast<int>(id)]; }
    int occupancy() const;
    std::string to_string() const;

    bool operator==(const OccupationRegister&) const = default;
};

/// Canonical configuration: G-i and C-l occupied with the given spins,
/// both virtual slots empty.
OccupationRegister canonical_register(SpinDir g_spin, SpinDir c_spin);

bool is_canonical(const OccupationRegister& reg);
/// Tautomeric configuration: G-j and C-k occupied, G-i and C-l empty.
bool is_tautomeric(const OccupationRegister& reg);

enum class LadderKind { Create, Annihilate };

struct LadderOp {
    LadderKind kind = LadderKind::Create;
    SlotId slot = SlotId::GOccupied;
    SpinDir spin = SpinDir::Up;
};

/// Applies one creation/annihilation; throws PhysicsError on a forbidden
/// action (create on filled, annihilate on empty or on a different spin).
OccupationRegister apply_ladder(const OccupationRegister& reg, const LadderOp& op);

enum class TransferPath { GToCFirst, CToGFirst };

struct TransferResult {
    OccupationRegister intermediate;  // single-transfer zwitterion
    OccupationRegister final;         // tautomer
};

/// Stepwise double proton transfer from a canonical register.  Path
/// GToCFirst moves the G proton onto C's virtual level and then the C proton
/// onto G's virtual level; CToGFirst does the reverse order.  Both paths end
/// in the same tautomeric register with spins carried along unchanged.
TransferResult zwitter_path(const OccupationRegister& reg, TransferPath path);

/// Rewrites a tautomeric register as a canonical one by exchanging the
/// occupied/virtual roles on each side (the tautomer of the tautomer is the
/// original configuration).
OccupationRegister relabel_tautomer_as_canonical(const OccupationRegister& reg);

/// Weighted classical superposition of register configurations, used to
/// book-keep triplet components across a transfer.
struct WeightedRegister {
    Complex weight;
    OccupationRegister reg;
};

using RegisterSuperposition = std::vector<WeightedRegister>;

/// Applies zwitter_path componentwise; weights are carried along.
RegisterSuperposition zwitter_path(const RegisterSuperposition& sup, TransferPath path);

}  // namespace spinpair
