"""Classifying subsets into the generalized open-set classes.

An AB-set is the intersection of an open set with a semi-regular set;
the neighboring classes (A-sets, B-sets, locally closed sets, the
semi/pre/beta families) slot around it in a strict hierarchy.
"""

from fintopo import SetClass, build_topology, class_table, is_in_class
from fintopo.setclasses import WITNESS_FUNCTIONS

e1a = build_topology(4, [0b0000, 0b0001, 0b0010, 0b0011, 0b1111])
e1b = build_topology(3, [0b000, 0b001, 0b111])


def show(t, a, label):
    members = [cls.value for cls in SetClass if is_in_class(t, a, cls)]
    print(f"{label}: {', '.join(members)}")


# {b, c} in the four-point space: an AB-set that is neither an A-set
# nor locally closed
show(e1a, 0b0110, "{b,c} on four points")

# {c} in the three-point chain: a B-set that is not an AB-set
show(e1b, 0b100, "{c} on the chain")

# {a, b} there: semi-open but not an AB-set
show(e1b, 0b011, "{a,b} on the chain")

# intersection witnesses: which open and which second member produce
# the set
for cls in (SetClass.AB_SET, SetClass.B_SET):
    u, v = WITNESS_FUNCTIONS[cls](e1a, 0b0110)
    print(f"{cls.value} witness for {{b,c}}: open {bin(u)} & {bin(v)}")

# a class table bundles all memberships of one space as bitmaps over
# the 2^n subsets
table = class_table(e1b)
for cls in (SetClass.OPEN, SetClass.SEMI_OPEN, SetClass.AB_SET,
            SetClass.B_SET):
    family = [bin(a) for a in table.family(cls)]
    print(f"{cls.value} family: {family}")

# the strict chain A => AB => B is visible in the family sizes
ta = class_table(e1a)
for cls in (SetClass.A_SET, SetClass.AB_SET, SetClass.B_SET):
    print(f"|{cls.value}| on four points = {len(ta.family(cls))}")
