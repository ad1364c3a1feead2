#!/usr/bin/env python3
"""
Main entry point for the p-group catalog tools.
Runs the CLI interface.
"""

import sys
import os
# Add the project root to the Python path
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from src.cli.interface import main

if __name__ == '__main__':
    main()
