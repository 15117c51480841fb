"""Exact arithmetic for the pairing between graphs and binary trees."""
