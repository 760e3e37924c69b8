"""
CLI for sensize.
"""
