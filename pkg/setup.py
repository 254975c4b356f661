from setuptools import setup

# Minimal script allowing editable install
setup()
