"""
Gauss codes and welded Gauss diagrams
=====================================

A diagram is entered as its Gauss code: the cyclic word of over/under
passages met while running along the knot, each carrying a crossing label
and a sign.  Collapsing the word by the over-commute relation leaves the
welded Gauss diagram: the cyclic order of under passages plus, for every
crossing, the last under passage met before its over passage.
"""

from weldedknots import (
    canonical_wgd,
    decode_gauss_code,
    encode_gauss_code,
    encode_wgd,
    gauss_to_wgd,
    validate_code,
    wgd_to_gauss,
    wgd_to_gauss_diagram,
    decode_wgd,
)

# %% parse and validate a trefoil
trefoil = decode_gauss_code("O1+ U2+ O3+ U1+ O2+ U3+")
print("trefoil:", encode_gauss_code(trefoil))
print("valid:", validate_code(trefoil) is None)

# %% its welded Gauss diagram, in canonical form
w = gauss_to_wgd(trefoil)
print("welded Gauss diagram:", encode_wgd(w))

# %% the conversion is a bijection on welded objects: realize and reconvert
realized = wgd_to_gauss(w)
print("realization:", encode_gauss_code(realized))
print("round trip returns the same diagram:", gauss_to_wgd(realized) == w)

# %% a six-crossing example entered directly as a diagram
example = decode_wgd(
    '{"order": [1, 2, 3, 4, 5, 6],'
    ' "map": {"1": [3, "+"], "2": [3, "+"], "3": [2, "-"],'
    ' "4": [5, "-"], "5": [2, "-"], "6": [2, "+"]}}'
)
print("six crossings:", encode_wgd(example))
print("canonical form:", encode_wgd(canonical_wgd(example)))

# %% the classical Gauss-diagram picture: 2n points, n signed arrows
gd = wgd_to_gauss_diagram(canonical_wgd(example))
print("points:", len(gd.points), "arrows:", len(gd.arrows))
print("circle:", " ".join(f"{role}{c}" for role, c in gd.points))
