"""
Entropy of a node's information sources
=======================================

A node hears from its friends and from its friends' friends. We count how
often each source shows up and take the Shannon entropy of those counts.
Tying node 1 to node 5, a friend of its friend 2, makes 2 and 5 show up
twice and lowers node 1's entropy.
"""

from tieentropy.entropy import (
    delta_on_add_exact,
    delta_on_add_incremental,
    delta_taylor_approx,
    entropy,
    info_sequence,
)
from tieentropy.graph import Graph

# id 0 is padding so ids match the labels 1..7
g = Graph(8, [(1, 2), (1, 3), (1, 4), (2, 5), (3, 7), (6, 7)])
print("sources of node 1:", info_sequence(g, 1).counts)
print("entropy before: %.4f" % entropy(g, 1))

h = g.copy()
h.add_edge(1, 5)
print("sources after tying 1-5:", info_sequence(h, 1).counts)
print("entropy after:  %.4f" % entropy(h, 1))

# %%
# The same change three ways: full recomputation, a patch to the cached
# counts, and the first-order closed form (rough here: the sequence is short).
print("exact       %.4f" % delta_on_add_exact(g, 1, 5).delta_i)
print("incremental %.4f" % delta_on_add_incremental(g, 1, 5).delta_i)
print("first-order %.4f" % delta_taylor_approx(g, 1, 5))
