#!/usr/bin/env python3
"""
Quantum Number Theory Toolkit - CLI Runner
"""

from app.main import main

if __name__ == "__main__":
    main()
