#!/usr/bin/env python3
"""
twcut command line entry point.

Usage:
    python main.py mincut --graph g.gr --s 1 --t 5 --k 2
    python main.py verify stable-cut --graph g.gr --k 2 --seed 7
    python main.py gen --kind hypercube --dim 4
"""

from twcut.cli import main

if __name__ == "__main__":
    main()
