"""
Pydantic models for representations, states and reports
"""
