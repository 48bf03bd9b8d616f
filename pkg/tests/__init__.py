"""pmplus tests."""
