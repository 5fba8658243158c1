"""
Rewriting moves and their invariants
====================================

Reidemeister moves and the over-commute move act as subword rewrites on
Gauss codes.  Every applied move returns a record that can be replayed or
inverted bit-exactly.  Fox coloring counts and homomorphism counts into
small groups never change along a move path, which is how the move tables
were validated in the first place.
"""

import random

from weldedknots import (
    GROWTH_KINDS,
    MoveKind,
    apply_move,
    apply_record,
    coloring_count,
    decode_gauss_code,
    encode_gauss_code,
    enumerate_sites,
    gauss_to_wgd,
    hom_count,
    inverse_record,
    symmetric_group_3,
)

# %% list the sites available on a small code
code = decode_gauss_code("O1+ O2+ U1+ U2+")
for site in enumerate_sites(code, growth_allowed=False):
    print(f"{site.kind.value} at {site.positions} ({site.variant})")

# %% the over-commute move swaps adjacent over passages and is invisible
# on the welded Gauss diagram
oc = enumerate_sites(code, kinds={MoveKind.OC})[0]
swapped, record = apply_move(code, oc)
print("before:", encode_gauss_code(code))
print("after: ", encode_gauss_code(swapped))
print("same welded diagram:", gauss_to_wgd(swapped) == gauss_to_wgd(code))

# %% records invert exactly
print("inverse restores source:", apply_record(swapped, inverse_record(record)) == code)

# %% an R3 site: three strands over a triangle, all pairs swap at once
braid = decode_gauss_code("O2+ O1+ O3+ U1+ U3+ U2+")
r3 = enumerate_sites(braid, kinds={MoveKind.R3})[0]
moved, _ = apply_move(braid, r3)
print("R3:", encode_gauss_code(braid), "->", encode_gauss_code(moved))

# %% coloring and homomorphism counts ride through a random move path
rng = random.Random(5)
trefoil = decode_gauss_code("O1+ U2+ O3+ U1+ O2+ U3+")
s3 = symmetric_group_3()
signature = (coloring_count(trefoil, 3), coloring_count(trefoil, 5), hom_count(trefoil, s3))
print("trefoil counts (p=3, p=5, S3):", signature)

walk = trefoil
for _ in range(12):
    sites = enumerate_sites(walk, growth_allowed=walk.n < 7)
    shrink = [s for s in sites if s.kind not in GROWTH_KINDS]
    pool = shrink if shrink and rng.random() < 0.5 else sites
    walk, _ = apply_move(walk, pool[rng.randrange(len(pool))])
    assert (coloring_count(walk, 3), coloring_count(walk, 5), hom_count(walk, s3)) == signature
print("after 12 random moves:", encode_gauss_code(walk))
print("counts unchanged along the whole path")
