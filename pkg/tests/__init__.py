"""
Test suite for Quorum Coloring
"""
