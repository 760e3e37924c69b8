"""
Application layer for sensize.

This layer contains the CLI commands.
"""
