# checks/__init__.py
