"""
Intensity Efficiency - Main Entry Point
Command-line analysis of intensity-efficient allocations
"""

import sys
import os

# Add project root to path
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from src.cli.main import main


if __name__ == "__main__":
    main()
