"""
Cluster Poset

Posets of cluster tilting objects of quivers without oriented cycles,
BGP reflection functors and the flip-flop relating the posets.
"""

__version__ = "0.3.0"
