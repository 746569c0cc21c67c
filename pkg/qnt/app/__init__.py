"""
Quantum number theory toolkit application package
"""
