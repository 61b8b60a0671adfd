"""Entry point for morse-flowlines.

This module provides the main entry point for the CLI application.
For detailed usage, run: morse-flowlines --help
"""

from morse_flowlines.cli import main

if __name__ == "__main__":
    main()
