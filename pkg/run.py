#!/usr/bin/env python3
"""
Edge Coloring Engine Launcher

Runs the command line from the project root with the package importable.

Usage:
    python run.py gen --family complete --n 6 --out k6.txt
    python run.py color k6.txt --algorithm euler --out k6.col
    python run.py verify k6.txt k6.col --budget 6
    python run.py bench --config campaign.cfg
"""

import sys
import os

# Add project root to Python path
project_root = os.path.dirname(os.path.abspath(__file__))
sys.path.insert(0, project_root)


def main():
    """Main entry point for the edge-coloring command line."""
    try:
        from src.apps.main import main as cli_main
        sys.exit(cli_main())
    except KeyboardInterrupt:
        print("\nInterrupted by user")
        sys.exit(0)
    except Exception as e:
        print(f"Error: {e}")
        sys.exit(1)


if __name__ == "__main__":
    main()
