"""Global space properties and what they say about the AB-sets.

Each of the seven properties is decided straight from its definition;
the AB-set characterizations then follow as verified theorems rather
than as the implementation.
"""

from fintopo import (
    SetClass,
    SpaceProperty,
    build_topology,
    class_table,
    space_profile,
)

spaces = {
    "four-point example": build_topology(
        4, [0b0000, 0b0001, 0b0010, 0b0011, 0b1111]
    ),
    "three-point chain": build_topology(3, [0b000, 0b001, 0b111]),
    "two-point with one open singleton": build_topology(
        2, [0b00, 0b01, 0b11]
    ),
    "discrete on 3": build_topology(3, range(8)),
    "indiscrete on 3": build_topology(3, [0b000, 0b111]),
    "two blocks of two": build_topology(
        4, [0b0000, 0b0011, 0b1100, 0b1111]
    ),
}

for label, t in spaces.items():
    profile = space_profile(t)
    held = [p.value for p, v in profile.items() if v]
    print(f"{label}: {', '.join(held) if held else 'none'}")

print()

# extremal disconnectedness pins the AB family to the opens exactly
for label, t in spaces.items():
    table = class_table(t)
    ab_is_opens = table.family_bitmap(SetClass.AB_SET) == \
        table.family_bitmap(SetClass.OPEN)
    ed = space_profile(t)[SpaceProperty.EXTREMALLY_DISCONNECTED]
    print(f"{label}: extremally disconnected = {ed}, "
          f"AB family equals opens = {ab_is_opens}")
    assert ed == ab_is_opens

print()

# in a partition space every AB-set is clopen; the block space shows it
blocks = spaces["two blocks of two"]
table = class_table(blocks)
print("AB-sets of the block space:",
      [bin(a) for a in table.family(SetClass.AB_SET)])
print("clopen sets of the block space:",
      [bin(a) for a in table.family(SetClass.CLOPEN)])
