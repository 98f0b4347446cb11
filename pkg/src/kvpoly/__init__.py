"""Kauffman-Vogel polynomial of 4-valent rigid-vertex graph diagrams."""

__version__ = "0.1.0"
