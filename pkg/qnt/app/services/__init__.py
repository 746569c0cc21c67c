"""
Operator families, states and identity suites
"""
