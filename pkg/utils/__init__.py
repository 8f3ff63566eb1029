# utils/__init__.py
# Paths, logging and settings shared by the CLI and the checks.
