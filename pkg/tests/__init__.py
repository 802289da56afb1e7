"""
Intensity Efficiency Test Suite
"""
