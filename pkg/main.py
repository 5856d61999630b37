#!/usr/bin/env python3
"""
Cluster Poset - Main Entry Point
"""

from __future__ import annotations

import sys

from clusterposet.cli import main

if __name__ == "__main__":
    sys.exit(main())
