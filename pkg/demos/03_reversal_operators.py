"""
Reversal operators
==================

Three involutions act on diagrams: orientation reversal, sign reversal,
and their composition, the global reversal.  Sign reversal is a pure sign
flip on the welded Gauss diagram; on codes it flips every passage's sign
in place.  The two reversals commute, and the one-move neighborhood of a
diagram is carried onto the neighborhood of its global reversal.
"""

from weldedknots import (
    bar,
    bar_code,
    canonical_wgd,
    decode_gauss_code,
    encode_gauss_code,
    encode_wgd,
    gauss_to_wgd,
    global_reversal,
    reverse,
    wgd_neighbors,
)

trefoil = decode_gauss_code("O1+ U2+ O3+ U1+ O2+ U3+")
w = gauss_to_wgd(trefoil)

# %% orientation reversal reads the code backwards
print("reverse:", encode_gauss_code(reverse(trefoil)))

# %% sign reversal flips every sign and nothing else
print("bar:    ", encode_gauss_code(bar_code(trefoil)))
print("bar on the diagram:", encode_wgd(bar(w)))

# %% both compositions of the two reversals agree
g = global_reversal(w)
print("global reversal:", encode_wgd(g))
print("reverse then bar:", canonical_wgd(bar(reverse(w))) == g)
print("bar then reverse:", canonical_wgd(reverse(bar(w))) == g)
print("involution:", global_reversal(g) == canonical_wgd(w))

# %% global reversal maps one-move neighborhoods onto one-move neighborhoods
neighbors = wgd_neighbors(w, max_crossings=4)
image = {canonical_wgd(global_reversal(nb)) for nb in neighbors}
print("neighbors:", len(neighbors), "| image equals the reversal's neighbors:",
      image == wgd_neighbors(g, max_crossings=4))
