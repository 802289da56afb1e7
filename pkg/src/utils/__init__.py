"""
Intensity Efficiency - Utility Modules
"""
