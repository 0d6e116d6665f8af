"""
Test suite for ZMM.
"""
