"""Spectral extremal problems for bipartite chain graphs.
"""
