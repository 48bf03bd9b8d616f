"""Unit tests for pmplus."""
