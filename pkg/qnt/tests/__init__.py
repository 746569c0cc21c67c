"""
Test package for the qnt toolkit
"""
