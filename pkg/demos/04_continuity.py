"""Grading maps on the continuity hierarchy.

Ä-continuity asks the preimage of every open set to land in the class
Ä; binding Ä to each set class yields the whole hierarchy.  Strong
irresoluteness is stricter: the preimage of EVERY subset must be
semi-regular.
"""

from fintopo import (
    ContinuityClass,
    SpaceMap,
    build_topology,
    continuity_profile,
    enumerate_maps,
    is_continuous_in,
    preimage,
)

e1b = build_topology(3, [0b000, 0b001, 0b111])
sierpinski = build_topology(2, [0b00, 0b01, 0b11])

# a -> a, b -> b, c -> b
f = SpaceMap(e1b, sierpinski, (0, 1, 1))
print("preimage of {a}:", bin(preimage(f, 0b01)))
print("preimage of {b}:", bin(preimage(f, 0b10)))

profile = continuity_profile(f)
held = [cc.value for cc, v in profile.items() if v]
print("f is:", ", ".join(held))
assert profile[ContinuityClass.CONTINUOUS]
assert profile[ContinuityClass.AB_CONTINUOUS]
assert not profile[ContinuityClass.STRONGLY_IRRESOLUTE]

# the identity is continuous in every class bound to a set class, but
# strong irresoluteness can still fail: {b} pulls back to itself and is
# not semi-regular on the chain
ident = SpaceMap(e1b, e1b, (0, 1, 2))
print("identity strongly irresolute:",
      is_continuous_in(ident, ContinuityClass.STRONGLY_IRRESOLUTE))

# on a discrete domain every preimage is clopen, hence semi-regular
disc = build_topology(2, [0b00, 0b01, 0b10, 0b11])
ident_disc = SpaceMap(disc, disc, (0, 1))
print("identity on discrete strongly irresolute:",
      is_continuous_in(ident_disc, ContinuityClass.STRONGLY_IRRESOLUTE))

# grade every map from the chain to the two-point space
rows = []
for g in enumerate_maps(e1b, sierpinski):
    p = continuity_profile(g)
    rows.append((
        g.assignment,
        p[ContinuityClass.CONTINUOUS],
        p[ContinuityClass.AB_CONTINUOUS],
        p[ContinuityClass.B_CONTINUOUS],
    ))
print("assignment | continuous | AB-continuous | B-continuous")
for assignment, cont, ab, b in rows:
    print(f"{assignment}   | {cont!s:9} | {ab!s:12} | {b!s}")

# AB-continuity always sits between: every continuous map here is
# AB-continuous, every AB-continuous one is B-continuous
assert all(ab for _, cont, ab, _ in rows if cont)
assert all(b for _, _, ab, b in rows if ab)
