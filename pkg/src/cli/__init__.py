"""
src.cli

Command-line surface of the toolkit: click commands, output renderers and
the mapping of domain errors to exit statuses.
"""
