# This exists to let mypy find modules here
