"""Settings and the command-line entry point."""
